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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "skew/field_tower.hpp"

namespace skew {
namespace {

using Poly = SkewOf<GfExt>;

Poly random_poly(const GfExt& L, long deg, std::mt19937_64& rng) {
  if (deg < 0) return {};
  std::vector<GfExt::Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = L.random(rng);
  while (L.is_zero(c.back())) c.back() = L.random(rng);
  return skew_make(L, std::move(c));
}

GfExt::Elem random_unit(const GfExt& L, std::mt19937_64& rng) {
  auto v = L.random(rng);
  while (L.is_zero(v)) v = L.random(rng);
  return v;
}

// sum a_i (lambda sigma)^i (v), one application at a time.
GfExt::Elem twisted_operator(const GfExt& L, const Poly& a, const GfExt::Elem& lambda,
                             GfExt::Elem v) {
  auto acc = L.zero();
  for (const auto& c : a.coeffs) {
    acc = L.add(acc, L.mul(c, v));
    v = L.mul(lambda, L.sigma(v));
  }
  return acc;
}

TEST(ModMultTest, CyclicMatchesNaive) {
  std::mt19937_64 rng(21);
  for (u64 p : {2u, 3u, 5u}) {
    for (std::size_t r = 1; r <= 8; ++r) {
      FieldTower t = FieldTower::random(PrimeField(p), r, rng);
      const auto& L = t.L();
      NormalBasisContext<GfExt> ctx(L, t.normal_basis());
      const auto one = skew_constant(L, L.one());
      for (int trial = 0; trial < 5; ++trial) {
        const auto a1 = random_poly(L, static_cast<long>(rng() % (3 * r)), rng);
        const auto a2 = random_poly(L, static_cast<long>(rng() % (3 * r)), rng);
        EXPECT_EQ(mod_mul_cyclic(ctx, t.omega(), a1, a2),
                  skew_reduce_cyclic(L, skew_mul_naive(L, a1, a2)));
        EXPECT_EQ(mod_mul_cyclic(ctx, t.omega(), one, a2), skew_reduce_cyclic(L, a2));
      }
      if (r >= 2) {
        const auto top = skew_monomial(L, r - 1, L.one());
        EXPECT_EQ(mod_mul_cyclic(t, top, top), skew_monomial(L, r - 2, L.one()));
      }
    }
  }
}

TEST(ModMultTest, TwistSubstitution) {
  std::mt19937_64 rng(22);
  for (u64 p : {2u, 3u, 5u}) {
    for (std::size_t r = 1; r <= 6; ++r) {
      FieldTower t = FieldTower::random(PrimeField(p), r, rng);
      const auto& L = t.L();
      const auto lambda = random_unit(L, rng);
      const auto a = t.norm(lambda);
      const auto x = random_poly(L, static_cast<long>(rng() % (2 * r)), rng);
      EXPECT_EQ(twist_substitute(L, x, L.one()), x);
      EXPECT_EQ(twist_substitute(L, skew_monomial(L, r, L.one()), lambda), skew_monomial(L, r, a));
      EXPECT_EQ(twist_undo(L, twist_substitute(L, x, lambda), lambda), x);
      const auto y = random_poly(L, static_cast<long>(rng() % (2 * r)), rng);
      const auto prod_a = skew_reduce_binomial(L, skew_mul_naive(L, x, y), a);
      EXPECT_EQ(skew_reduce_cyclic(L, twist_substitute(L, prod_a, lambda)),
                skew_reduce_cyclic(L, skew_mul_naive(L, twist_substitute(L, x, lambda),
                                                     twist_substitute(L, y, lambda))));
      EXPECT_THROW(twist_substitute(L, x, L.zero()), UsageError);
    }
  }
}

TEST(ModMultTest, ModMulAMatchesNaive) {
  std::mt19937_64 rng(23);
  for (u64 p : {2u, 3u, 5u, 7u}) {
    for (std::size_t r = 1; r <= 8; ++r) {
      FieldTower t = FieldTower::random(PrimeField(p), r, rng);
      const auto& L = t.L();
      NormalBasisContext<GfExt> nctx(L, t.normal_basis());
      for (int trial = 0; trial < 4; ++trial) {
        const auto lambda = random_unit(L, rng);
        TwistedBasisContext<GfExt> ctx(L, t.normal_basis(), lambda);
        const auto a = ctx.a_elem();
        EXPECT_EQ(a, t.norm(lambda));
        // sigma_a(bt_i) = bt_{i-1}, sigma_a(bt_0) = a bt_{r-1}.
        const auto& bt = ctx.basis();
        for (std::size_t i = 1; i < r; ++i) {
          EXPECT_EQ(L.mul(lambda, L.sigma(bt[i])), bt[i - 1]);
        }
        EXPECT_EQ(L.mul(lambda, L.sigma(bt[0])), L.mul(a, bt[r - 1]));
        const auto x = random_poly(L, static_cast<long>(rng() % (3 * r)), rng);
        const auto y = random_poly(L, static_cast<long>(rng() % (3 * r)), rng);
        const auto expect = skew_reduce_binomial(L, skew_mul_naive(L, x, y), a);
        EXPECT_EQ(mod_mul_a(ctx, x, y), expect);
        // Through the cyclic ring and back.
        const auto via = twist_undo(
            L,
            mod_mul_cyclic(nctx, t.omega(), twist_substitute(L, skew_reduce_binomial(L, x, a), lambda),
                           twist_substitute(L, skew_reduce_binomial(L, y, a), lambda)),
            lambda);
        EXPECT_EQ(via, expect);
        const auto xr = skew_reduce_binomial(L, x, a);
        const auto values = eval_on_twisted_basis(ctx, xr);
        for (std::size_t j = 0; j < r; ++j) {
          EXPECT_EQ(values[j], twisted_operator(L, xr, lambda, bt[j]));
        }
        EXPECT_EQ(mod_mul_a(ctx, skew_monomial(L, 1, L.one()), skew_monomial(L, r - 1, L.one())),
                  skew_constant(L, a));
      }
      TwistedBasisContext<GfExt> unit(L, t.normal_basis(), L.one());
      const auto x = random_poly(L, static_cast<long>(2 * r), rng);
      const auto y = random_poly(L, static_cast<long>(2 * r), rng);
      EXPECT_EQ(mod_mul_a(unit, x, y), mod_mul_cyclic(nctx, t.omega(), x, y));
    }
  }
}

ModZContext sample_modz(const FieldTower& t, std::size_t n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    LiftedTower lt = lift_tower(t, n, rng);
    try {
      return ModZContext(lt, lt.Lp().random(rng));
    } catch (const ConstructionError&) {
    }
  }
  throw ConstructionError("no suitable lambda'");
}

TEST(ModMultTest, ModMulZMatchesNaive) {
  std::mt19937_64 rng(24);
  for (u64 p : {2u, 3u, 5u}) {
    for (std::size_t r = 1; r <= 5; ++r) {
      FieldTower t = FieldTower::random(PrimeField(p), r, rng);
      const auto& L = t.L();
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto ctx = sample_modz(t, n, rng);
        const auto zx = central_modulus(L, ctx.Z());
        EXPECT_EQ(zx.degree(), static_cast<long>(n * r));
        for (int trial = 0; trial < 3; ++trial) {
          const auto x = random_poly(L, static_cast<long>(rng() % (3 * n * r)), rng);
          const auto y = random_poly(L, static_cast<long>(rng() % (3 * n * r)), rng);
          const auto expect = rdiv_naive(L, skew_mul_naive(L, x, y), zx).second;
          EXPECT_EQ(mod_mul_Z(ctx, x, y), expect);
          EXPECT_EQ(skew_reduce_central(L, x, ctx.Z()), rdiv_naive(L, x, zx).second);
          EXPECT_EQ(skew_mul_naive(L, zx, x), skew_mul_naive(L, x, zx));
          const auto killed = skew_add(L, skew_mul_naive(L, zx, skew_monomial(L, 1, L.one())),
                                       skew_constant(L, L.one()));
          EXPECT_EQ(mod_mul_Z(ctx, killed, y), skew_reduce_central(L, y, ctx.Z()));
        }
      }
    }
  }
}

TEST(ModMultTest, DegenerateLiftAgreesWithModMulA) {
  std::mt19937_64 rng(25);
  FieldTower t = FieldTower::random(PrimeField(3), 4, rng);
  const auto& L = t.L();
  LiftedTower lt = lift_tower(t, 1, rng);
  auto lambda = random_unit(L, rng);
  ModZContext zctx(lt, lt.embed(lambda));
  TwistedBasisContext<GfExt> actx(L, t.normal_basis(), lambda);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_poly(L, 7, rng);
    const auto y = random_poly(L, 7, rng);
    EXPECT_EQ(mod_mul_Z(zctx, x, y), mod_mul_a(actx, x, y));
  }
}

}  // namespace
}  // namespace skew

namespace skew {
namespace {

// bt_i = lambda_{r-1-i} b_i is the orbit of b_{r-1}; count how often it is
// dependent, and check the context still finds a cyclic vector.
TEST(ModMultTest, NormalOrbitUnderTwistCanBeDependent) {
  std::mt19937_64 rng(26);
  int dependent = 0;
  for (u64 p : {2u, 3u}) {
    for (std::size_t r = 2; r <= 6; ++r) {
      FieldTower t = FieldTower::random(PrimeField(p), r, rng);
      const auto& L = t.L();
      for (int trial = 0; trial < 40; ++trial) {
        const auto lambda = random_unit(L, rng);
        const auto norms = partial_norms(L, lambda);
        std::vector<GfExt::Elem> orbit(r);
        for (std::size_t i = 0; i < r; ++i) orbit[i] = L.mul(norms[r - 1 - i], t.normal_basis()[i]);
        if (mat_rank(t.K(), coordinate_matrix(L, orbit)) < r) {
          ++dependent;
          TwistedBasisContext<GfExt> ctx(L, t.normal_basis(), lambda);
          EXPECT_EQ(mat_rank(t.K(), ctx.P()), r);
        }
      }
    }
  }
  RecordProperty("dependent_orbits", dependent);
  EXPECT_GT(dependent, 0);
}

}  // namespace
}  // namespace skew
