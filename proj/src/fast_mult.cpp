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

#include "skew/fast_mult.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "skew/errors.hpp"

namespace skew {

std::size_t modulus_count(std::size_t n, std::size_t r, std::size_t d) {
  const std::size_t nr = n * r;
  const std::size_t t = (2 * d + 1 + nr - 1) / nr;
  return t == 0 ? 1 : t;
}

std::size_t choose_lift_degree(u64 p, std::size_t r, std::size_t d) {
  long double pn = 1;
  for (std::size_t n = 1;; ++n) {
    pn *= static_cast<long double>(p);
    if (pn > static_cast<long double>(kMaxLiftedOrder)) {
      throw UsageError("choose_lift_degree: no n with p^n <= " +
                       std::to_string(kMaxLiftedOrder) + " satisfies the sampling bounds");
    }
    const long double nn = static_cast<long double>(n);
    const long double budget = nn * pn;
    if (pn < 64 * nn || pn < 8 * static_cast<long double>(r)) continue;
    const long double x = 2 * static_cast<long double>(d) / (nn * static_cast<long double>(r));
    if (4 * x * (x + 1) > budget) continue;
    const long double t = static_cast<long double>(modulus_count(n, r, d));
    if (4 * t * t > budget) continue;
    return n;
  }
}

bool norms_admissible(const LiftedTower& lift, const std::vector<LiftedRing::Elem>& lambdas) {
  const auto& Lp = lift.Lp();
  const auto& Kp = lift.Kp();
  std::vector<CommPoly<u64>> mins;
  for (const auto& lam : lambdas) {
    const auto a = norm(Lp, lam);
    if (!Lp.is_scalar(a) || Kp.is_zero(a[0])) return false;
    auto z = min_poly_over_K(Kp, a[0]);
    if (static_cast<std::size_t>(z.degree()) != Kp.degree()) return false;
    for (const auto& other : mins) {
      if (other == z) return false;
    }
    mins.push_back(std::move(z));
  }
  return true;
}

ModulusSet sample_moduli(const LiftedTower& lift, std::size_t d, std::mt19937_64& rng) {
  const std::size_t n = lift.kp_degree();
  const std::size_t t = modulus_count(n, lift.degree(), d);
  ModulusSet out;
  out.n = n;
  for (std::size_t batch = 0; batch < 64; ++batch) {
    ++out.batch_attempts;
    std::vector<LiftedRing::Elem> lambdas(t);
    for (auto& lam : lambdas) lam = lift.Lp().random(rng);
    if (!norms_admissible(lift, lambdas)) continue;
    out.moduli.clear();
    try {
      for (auto& lam : lambdas) out.moduli.emplace_back(lift, std::move(lam));
    } catch (const ConstructionError&) {
      continue;
    }
    return out;
  }
  throw ConstructionError("sample_moduli: 64 batches rejected; increase n");
}

namespace {

// Product of an L-polynomial by an F_p-polynomial.
std::vector<GfExt::Elem> mul_by_base(const GfExt& L, const std::vector<GfExt::Elem>& a,
                                     const CommPoly<u64>& e) {
  if (a.empty() || e.is_zero()) return {};
  std::vector<GfExt::Elem> out(a.size() + e.coeffs.size() - 1, L.zero());
  for (std::size_t l = 0; l < e.coeffs.size(); ++l) {
    const u64 s = e.coeffs[l];
    if (s == 0) continue;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (L.is_zero(a[k])) continue;
      out[k + l] = L.add(out[k + l], L.scale(s, a[k]));
    }
  }
  return out;
}

void reduce_by_base(const GfExt& L, std::vector<GfExt::Elem>& a, const CommPoly<u64>& z) {
  const std::size_t dz = static_cast<std::size_t>(z.degree());
  for (std::size_t m = a.size(); m-- > dz;) {
    if (L.is_zero(a[m])) continue;
    const auto c = a[m];
    for (std::size_t k = 0; k < dz; ++k) {
      if (z.coeffs[k] != 0) a[m - dz + k] = L.sub(a[m - dz + k], L.scale(z.coeffs[k], c));
    }
  }
  if (a.size() > dz) a.resize(dz);
}

}  // namespace

GfPoly skew_crt_reconstruct(const GfExt& L, const std::vector<GfPoly>& residues,
                            const std::vector<CommPoly<u64>>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw UsageError("skew_crt_reconstruct: need one residue per modulus");
  }
  const PrimeField& fp = L.base();
  const std::size_t r = L.degree();
  auto z = comm::constant(fp, fp.one());
  for (const auto& zi : moduli) z = comm::mul(fp, z, zi);
  const std::size_t dz = static_cast<std::size_t>(z.degree());
  std::vector<CommPoly<u64>> idem;
  for (const auto& zi : moduli) {
    const auto cof = comm::divrem(fp, z, zi).first;
    const auto inv = comm::inverse_mod(fp, comm::rem(fp, cof, zi), zi);
    if (!inv) throw UsageError("skew_crt_reconstruct: moduli are not coprime");
    idem.push_back(comm::rem(fp, comm::mul(fp, cof, *inv), z));
  }
  std::vector<GfExt::Elem> out(dz * r, L.zero());
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<GfExt::Elem> acc(dz, L.zero());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      const std::size_t di = static_cast<std::size_t>(moduli[i].degree());
      const auto red = skew_reduce_central(L, residues[i], moduli[i]);
      std::vector<GfExt::Elem> strand(di, L.zero());
      for (std::size_t k = 0; k < di && k * r + j < red.coeffs.size(); ++k) {
        strand[k] = red.coeffs[k * r + j];
      }
      auto term = mul_by_base(L, strand, idem[i]);
      reduce_by_base(L, term, z);
      for (std::size_t k = 0; k < term.size(); ++k) acc[k] = L.add(acc[k], term[k]);
    }
    for (std::size_t k = 0; k < dz; ++k) out[k * r + j] = acc[k];
  }
  return skew_make(L, std::move(out));
}

SkewMultiplier::SkewMultiplier(FieldTower tower, MultConfig config)
    : tower_(std::move(tower)),
      config_(config),
      nctx_(tower_.L(), tower_.normal_basis()),
      rng_(config.seed) {}

const LiftedTower& SkewMultiplier::lift(std::size_t n) {
  auto& slot = lifts_[n];
  if (!slot) slot = std::make_unique<LiftedTower>(lift_tower(tower_, n, rng_));
  return *slot;
}

GfPoly SkewMultiplier::naive(const GfPoly& a1, const GfPoly& a2) const {
  return skew_mul_naive(L(), a1, a2);
}

GfPoly SkewMultiplier::cyclic(const GfPoly& a1, const GfPoly& a2) const {
  return mod_mul_cyclic(nctx_, tower_.omega(), a1, a2);
}

GfPoly SkewMultiplier::crt(const GfPoly& a1, const GfPoly& a2) {
  if (a1.is_zero() || a2.is_zero()) return {};
  const std::size_t d = static_cast<std::size_t>(std::max(a1.degree(), a2.degree()));
  const long expect_degree = a1.degree() + a2.degree();
  std::size_t n = choose_lift_degree(tower_.K().modulus(), tower_.degree(), d);
  ++stats_.crt_calls;
  for (;;) {
    const LiftedTower& lt = lift(n);
    stats_.last_lift_degree = n;
    ModulusSet set;
    try {
      set = sample_moduli(lt, d, rng_);
    } catch (const ConstructionError&) {
      // Too few conjugacy classes for t moduli; a larger K' has more.
      stats_.batch_attempts += 64;
      ++stats_.lift_bumps;
      ++n;
      continue;
    }
    stats_.batch_attempts += set.batch_attempts;
    stats_.last_modulus_count = set.moduli.size();
    std::vector<GfPoly> residues;
    std::vector<CommPoly<u64>> zs;
    for (const auto& ctx : set.moduli) {
      residues.push_back(ctx.multiply(a1, a2));
      zs.push_back(ctx.Z());
    }
    GfPoly p = skew_crt_reconstruct(L(), residues, zs);
    bool ok = p.degree() == expect_degree;
    if (ok && config_.strict_verify) {
      ok = p == naive(a1, a2);
    } else if (ok) {
      const auto v = L().random(rng_);
      ok = L().equal(skew_eval(L(), p, v), skew_eval(L(), a1, skew_eval(L(), a2, v)));
    }
    if (ok) return p;
    ++stats_.crt_retries;
  }
}

GfPoly SkewMultiplier::small_degree(const GfPoly& a1, const GfPoly& a2) const {
  if (a1.is_zero() || a2.is_zero()) return {};
  const std::size_t r = tower_.degree();
  const std::size_t d = static_cast<std::size_t>(a1.degree() + a2.degree());
  if (d >= r) throw UsageError("mult_small_degree: deg A1 + deg A2 must be < r");
  const auto& field = tower_.K();
  const auto images = eval_truncated(nctx_, a2, d + 1);
  const auto m1 = operator_matrix(nctx_, tower_.omega(), a1);
  const auto composed = mat_mul(field, m1, coordinate_matrix(L(), images));
  std::vector<GfExt::Elem> values(d + 1);
  for (std::size_t i = 0; i <= d; ++i) values[i] = composed.column(i);
  return small_degree_interpolation(nctx_, values).poly;
}

GfPoly SkewMultiplier::multiply(const GfPoly& a1, const GfPoly& a2) {
  if (a1.is_zero() || a2.is_zero()) return {};
  const std::size_t d = static_cast<std::size_t>(a1.degree() + a2.degree());
  if (d <= config_.naive_max_degree) return naive(a1, a2);
  if (d < tower_.degree()) return small_degree(a1, a2);
  return crt(a1, a2);
}

}  // namespace skew
