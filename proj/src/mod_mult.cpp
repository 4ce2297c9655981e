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

#include "skew/mod_mult.hpp"

#include <utility>

namespace skew {

ModZContext::ModZContext(LiftedTower lift, LiftedRing::Elem lambda) : lift_(std::move(lift)) {
  const auto& Lp = lift_.Lp();
  const auto& Kp = lift_.Kp();
  Lp.check(lambda);
  const auto nrm = norm(Lp, lambda);
  if (!Lp.is_scalar(nrm) || Kp.is_zero(nrm[0])) {
    throw ConstructionError("ModZContext: norm of lambda' is zero");
  }
  const auto a = nrm[0];
  z_ = min_poly_over_K(Kp, a);
  const std::size_t n = Kp.degree();
  if (static_cast<std::size_t>(z_.degree()) != n) {
    throw ConstructionError("ModZContext: a does not generate K'");
  }
  twisted_.emplace(Lp, lift_.normal_basis(), std::move(lambda));
  const PrimeField& fp = lift_.base_tower().K();
  Matrix<u64> powers(n, n, fp.zero());
  auto cur = Kp.one();
  for (std::size_t k = 0; k < n; ++k) {
    a_powers_.push_back(cur);
    const auto c = Kp.coords(cur);
    for (std::size_t i = 0; i < n; ++i) powers(i, k) = c[i];
    cur = Kp.mul(cur, a);
  }
  powers_inverse_ = mat_inv(fp, powers);
}

SkewOf<LiftedRing> ModZContext::to_lifted(const Poly& a) const {
  const auto& L = lift_.base_tower().L();
  const auto& Lp = lift_.Lp();
  const std::size_t r = L.degree();
  const auto red = skew_reduce_central(L, a, z_);
  std::vector<LiftedRing::Elem> out(r, Lp.zero());
  for (std::size_t i = 0; i < red.coeffs.size(); ++i) {
    if (L.is_zero(red.coeffs[i])) continue;
    const auto term = Lp.mul_base(a_powers_[i / r], lift_.embed(red.coeffs[i]));
    out[i % r] = Lp.add(out[i % r], term);
  }
  return skew_make(Lp, std::move(out));
}

SkewOf<GfExt> ModZContext::from_lifted(const SkewOf<LiftedRing>& a) const {
  const auto& L = lift_.base_tower().L();
  const auto& Kp = lift_.Kp();
  const PrimeField& fp = lift_.base_tower().K();
  const std::size_t r = L.degree();
  const std::size_t n = Kp.degree();
  std::vector<GfExt::Elem> out(n * r, L.zero());
  for (std::size_t j = 0; j < a.coeffs.size() && j < r; ++j) {
    for (std::size_t t = 0; t < r; ++t) {
      const auto& c = a.coeffs[j][t];
      if (Kp.is_zero(c)) continue;
      const auto s = mat_apply(fp, powers_inverse_, Kp.coords(c));
      for (std::size_t k = 0; k < n; ++k) out[k * r + j][t] = s[k];
    }
  }
  return skew_make(L, std::move(out));
}

SkewOf<GfExt> ModZContext::multiply(const Poly& a1, const Poly& a2) const {
  const auto prod = mod_mul_a(*twisted_, to_lifted(a1), to_lifted(a2));
  return from_lifted(prod);
}

}  // namespace skew
