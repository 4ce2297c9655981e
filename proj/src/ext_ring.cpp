// Copyright 2026 The skewmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skew/ext_ring.hpp"

namespace skew {

std::shared_ptr<const FrobeniusPowers> compute_frobenius_powers(
    const PrimeField& fp, const std::vector<u64>& f) {
  const std::size_t r = f.size() - 1;
  const auto modulus = comm::make(fp, f);
  const auto xp = comm::powmod(fp, comm::monomial(fp, 1, fp.one()), fp.modulus(),
                               modulus);
  Matrix<u64> frob(r, r, fp.zero());
  auto col = comm::constant(fp, fp.one());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < col.coeffs.size(); ++i) frob(i, j) = col.coeffs[i];
    col = comm::mulmod(fp, col, xp, modulus);
  }
  auto out = std::make_shared<FrobeniusPowers>();
  out->powers.reserve(r);
  out->powers.push_back(mat_identity(fp, r));
  for (std::size_t k = 1; k < r; ++k) {
    out->powers.push_back(mat_mul(fp, frob, out->powers.back()));
  }
  return out;
}

}  // namespace skew
