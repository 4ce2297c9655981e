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

#include "skew/gabidulin.hpp"

#include <utility>

#include "skew/errors.hpp"

namespace skew {

GabidulinCode::GabidulinCode(SkewMultiplier& mult, std::vector<GfExt::Elem> points,
                             std::size_t k)
    : mult_(&mult), arith_(fast_arith(mult)), points_(std::move(points)), k_(k) {
  const auto& L = mult.L();
  if (k_ < 1 || k_ > points_.size() || points_.size() > L.degree()) {
    throw UsageError("GabidulinCode: need 1 <= k <= n <= r");
  }
  if (rank_over_base(L, points_) != points_.size()) {
    throw UsageError("GabidulinCode: evaluation points are linearly dependent over K");
  }
  vanishing_ = min_subspace_poly(arith_, points_);
}

GabidulinCode GabidulinCode::with_normal_basis(SkewMultiplier& mult, std::size_t n,
                                               std::size_t k) {
  const auto& nb = mult.tower().normal_basis();
  if (n > nb.size()) throw UsageError("GabidulinCode: n exceeds r");
  return GabidulinCode(mult, std::vector<GfExt::Elem>(nb.begin(), nb.begin() + n), k);
}

std::vector<GfExt::Elem> GabidulinCode::encode(const GfPoly& msg) const {
  if (msg.degree() >= static_cast<long>(k_)) {
    throw UsageError("gabidulin encode: message degree must be < k");
  }
  for (const auto& c : msg.coeffs) L().check(c);
  return multieval(arith_, msg, points_);
}

DecodeResult GabidulinCode::decode(const std::vector<GfExt::Elem>& received) const {
  const auto& L = this->L();
  DecodeResult out;
  if (received.size() != n()) {
    out.failure = "received word has length " + std::to_string(received.size()) + ", expected " +
                  std::to_string(n());
    return out;
  }
  std::vector<std::pair<GfExt::Elem, GfExt::Elem>> pts;
  for (std::size_t i = 0; i < n(); ++i) pts.emplace_back(points_[i], received[i]);
  const GfPoly r = interpolate_general(arith_, pts);

  // Remainders r_j = u_j M + v_j R; stop at the first with 2 deg r_j < n + k.
  GfPoly r0 = vanishing_, r1 = r;
  GfPoly v0, v1 = skew_constant(L, L.one());
  const long bound = static_cast<long>(n() + k_);
  while (!r1.is_zero() && 2 * r1.degree() >= bound) {
    auto [q, r2] = rdiv_fast(arith_, r0, r1);
    GfPoly v2 = skew_sub(L, v0, mult_->multiply(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  // r1 = Lambda f with Lambda = v1 up to a unit.
  auto [msg, rem] = ldiv_naive(L, r1, v1);
  if (!rem.is_zero()) {
    out.failure = "error locator does not left-divide the remainder";
    return out;
  }
  if (msg.degree() >= static_cast<long>(k_)) {
    out.failure = "recovered message degree exceeds k - 1";
    return out;
  }
  const auto codeword = multieval(arith_, msg, points_);
  std::vector<GfExt::Elem> err(n());
  for (std::size_t i = 0; i < n(); ++i) err[i] = L.sub(received[i], codeword[i]);
  out.error_rank = rank_over_base(L, err);
  if (out.error_rank > t_max()) {
    out.failure = "residual error rank " + std::to_string(out.error_rank) +
                  " exceeds the correction radius " + std::to_string(t_max());
    return out;
  }
  out.ok = true;
  out.message = std::move(msg);
  return out;
}

std::size_t rank_over_base(const GfExt& L, const std::vector<GfExt::Elem>& v) {
  if (v.empty()) return 0;
  return mat_rank(L.base(), coordinate_matrix(L, v));
}

std::vector<GfExt::Elem> random_rank_error(const GfExt& L, std::size_t n, std::size_t t,
                                           std::mt19937_64& rng) {
  if (t > n || t > L.degree()) throw UsageError("random_rank_error: t exceeds min(n, r)");
  const auto& fp = L.base();
  for (;;) {
    std::vector<GfExt::Elem> span(t);
    for (auto& s : span) s = L.random(rng);
    std::vector<GfExt::Elem> err(n, L.zero());
    for (auto& e : err) {
      for (const auto& s : span) e = L.add(e, L.scale(rng() % fp.modulus(), s));
    }
    if (rank_over_base(L, err) == t) return err;
  }
}

}  // namespace skew
