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

#include "skew/field_tower.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "skew/errors.hpp"

namespace skew {
namespace {

// Brute-force irreducibility: no monic factor of degree <= n/2.
bool irreducible_by_trial(const PrimeField& fp, const std::vector<u64>& f) {
  const std::size_t n = f.size() - 1;
  const u64 p = fp.modulus();
  const auto fpoly = comm::make(fp, f);
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    u64 total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (u64 code = 0; code < total; ++code) {
      std::vector<u64> g(d + 1);
      u64 c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = c % p;
      g[d] = 1;
      if (comm::rem(fp, fpoly, comm::make(fp, g)).is_zero()) return false;
    }
  }
  return true;
}

TEST(PrimeFieldTest, Basics) {
  PrimeField f5(5);
  EXPECT_EQ(f5.mul(2, 3), 1u);
  EXPECT_EQ(f5.inv(2), 3u);
  EXPECT_EQ(f5.neg(0), 0u);
  EXPECT_THROW(PrimeField(4), UsageError);
  EXPECT_THROW(f5.inv(0), DivisionByZeroError);
}

TEST(ExtRingTest, F4Products) {
  PrimeField f2(2);
  std::mt19937_64 rng(1);
  FieldTower t(f2, {1, 1, 1}, rng);
  const auto& L = t.L();
  const auto x = L.generator();
  EXPECT_EQ(L.mul(x, x), (GfExt::Elem{1, 1}));
  EXPECT_EQ(L.sigma(x, 1), (GfExt::Elem{1, 1}));
  EXPECT_EQ(L.sigma(x, 2), x);
  EXPECT_EQ(L.sigma(x, -1), (GfExt::Elem{1, 1}));
  EXPECT_EQ(t.to_base(t.norm(x)), 1u);
  EXPECT_EQ(L.mul(x, L.one()), x);
  EXPECT_TRUE(L.is_zero(L.mul(x, L.zero())));
  EXPECT_THROW(L.check(GfExt::Elem{1, 0, 0}), UsageError);
}

TEST(ExtRingTest, F4NormalBasisFromX) {
  PrimeField f2(2);
  GfExt L(f2, f2, {1, 1, 1}, compute_frobenius_powers(f2, {1, 1, 1}));
  const auto basis = normal_sequence(L, L.generator());
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], (GfExt::Elem{1, 1}));
  EXPECT_EQ(basis[1], (GfExt::Elem{0, 1}));
  FieldTower t(f2, {1, 1, 1}, basis);
  EXPECT_TRUE(mat_is_identity(f2, mat_mul(f2, t.omega(), t.basis_matrix())));
}

TEST(ExtRingTest, F8CandidateXIsRejected) {
  PrimeField f2(2);
  GfExt L(f2, f2, {1, 1, 0, 1}, compute_frobenius_powers(f2, {1, 1, 0, 1}));
  const auto basis = normal_sequence(L, L.generator());
  // x, x^2, x^4 = x^2 + x.
  EXPECT_EQ(basis[2], (GfExt::Elem{0, 1, 0}));
  EXPECT_EQ(basis[1], (GfExt::Elem{0, 0, 1}));
  EXPECT_EQ(basis[0], (GfExt::Elem{0, 1, 1}));
  // x + x^2 = x^4, so the conjugates of x span only a plane.
  EXPECT_EQ(mat_rank(f2, coordinate_matrix(L, basis)), 2u);
  EXPECT_THROW(FieldTower(f2, {1, 1, 0, 1}, basis), ConstructionError);
  // x^3 = x + 1 has conjugates x + 1, x^2 + 1, x^2 + x + 1: independent.
  const auto good = normal_sequence(L, GfExt::Elem{1, 1, 0});
  EXPECT_EQ(mat_rank(f2, coordinate_matrix(L, good)), 3u);
}

TEST(ExtRingTest, DegreeOneBasis) {
  PrimeField f7(7);
  std::mt19937_64 rng(3);
  FieldTower t(f7, {3, 1}, rng);
  EXPECT_EQ(t.degree(), 1u);
  EXPECT_FALSE(t.L().is_zero(t.normal_basis()[0]));
  EXPECT_EQ(t.L().generator(), (GfExt::Elem{4}));
}

TEST(ExtRingTest, RejectsReducibleModulus) {
  PrimeField f2(2);
  std::mt19937_64 rng(3);
  EXPECT_THROW(FieldTower(f2, {0, 1, 1}, rng), ConstructionError);
  EXPECT_THROW(FieldTower(f2, {1, 1, 0}, rng), UsageError);
}

TEST(IrreducibilityTest, AgreesWithTrialDivision) {
  for (u64 p : {2u, 3u, 5u}) {
    PrimeField fp(p);
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<u64> digit(0, p - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 6;
      std::vector<u64> f(n + 1);
      for (std::size_t i = 0; i < n; ++i) f[i] = digit(rng);
      f[n] = 1;
      EXPECT_EQ(is_irreducible(fp, f), irreducible_by_trial(fp, f));
    }
  }
}

TEST(FieldTowerTest, FrobeniusProperties) {
  for (u64 p : {2u, 3u, 5u, 7u}) {
    PrimeField fp(p);
    std::mt19937_64 rng(10 + p);
    for (std::size_t r = 1; r <= 8; ++r) {
      FieldTower t = FieldTower::random(fp, r, rng);
      const auto& L = t.L();
      for (int trial = 0; trial < 5; ++trial) {
        const auto a = L.random(rng);
        const auto b = L.random(rng);
        EXPECT_EQ(L.sigma(a), L.pow(a, p));
        EXPECT_EQ(L.sigma(L.mul(a, b)), L.mul(L.sigma(a), L.sigma(b)));
        EXPECT_EQ(L.sigma(a, static_cast<long long>(r)), a);
        EXPECT_EQ(L.sigma(L.from_u64(3)), L.from_u64(3));
        // Norm against the product of conjugates computed by powering.
        auto expect = L.one();
        u64 e = 1;
        for (std::size_t i = 0; i < r; ++i, e *= p) expect = L.mul(expect, L.pow(a, e));
        EXPECT_EQ(t.norm(a), expect);
        EXPECT_TRUE(L.is_scalar(t.norm(a)));
        EXPECT_EQ(t.norm(L.mul(a, b)), L.mul(t.norm(a), t.norm(b)));
        if (!L.is_zero(a)) EXPECT_EQ(L.mul(a, L.inv(a)), L.one());
      }
      const auto c = L.from_u64(2 % p);
      EXPECT_EQ(t.norm(c), L.pow(c, r));
      const auto& nb = t.normal_basis();
      for (std::size_t i = 0; i < r; ++i) {
        EXPECT_EQ(L.sigma(nb[(i + 1) % r]), nb[i]);
      }
      EXPECT_TRUE(mat_is_identity(fp, mat_mul(fp, t.omega(), t.basis_matrix())));
    }
  }
}

TEST(MatrixTest, SmallCases) {
  PrimeField f5(5);
  Matrix<u64> a(1, 1, 2), b(1, 1, 3);
  EXPECT_EQ(mat_mul(f5, a, b)(0, 0), 1u);
  PrimeField f7(7);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<u64> digit(0, 6);
  int inverted = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Matrix<u64> m(4, 4, 0);
    for (auto& v : m.entries()) v = digit(rng);
    EXPECT_EQ(mat_mul(f7, m, mat_identity(f7, 4)), m);
    if (mat_rank(f7, m) < 4) {
      EXPECT_THROW(mat_inv(f7, m), SingularMatrixError);
      continue;
    }
    ++inverted;
    EXPECT_TRUE(mat_is_identity(f7, mat_mul(f7, m, mat_inv(f7, m))));
    std::vector<u64> v{1, 2, 3, 4};
    EXPECT_EQ(mat_apply(f7, m, mat_solve(f7, m, v)), v);
  }
  EXPECT_GT(inverted, 0);
}

TEST(MatrixTest, StrassenMatchesClassical) {
  PrimeField f3(3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<u64> digit(0, 2);
  Matrix<u64> a(70, 45, 0), b(45, 90, 0);
  for (auto& v : a.entries()) v = digit(rng);
  for (auto& v : b.entries()) v = digit(rng);
  EXPECT_EQ(mat_mul(f3, a, b, 8), detail::mat_mul_classical(f3, a, b));
}

TEST(LiftTowerTest, EmbeddingsAndZeroDivisors) {
  PrimeField f2(2);
  std::mt19937_64 rng(6);
  FieldTower t(f2, {1, 1, 1}, rng);
  LiftedTower lt = lift_tower(t, 2, rng);
  const auto& Kp = lt.Kp();
  const auto& Lp = lt.Lp();
  // f = x^2 + x + 1 has a root w in K' = F_4; x - w divides zero.
  bool found = false;
  for (u64 code = 0; code < 4; ++code) {
    const auto w = Kp.from_coords(std::vector<u64>{code & 1, code >> 1});
    if (!Kp.is_zero(Kp.add(Kp.add(Kp.mul(w, w), w), Kp.one()))) continue;
    found = true;
    LiftedRing::Elem z{Kp.neg(w), Kp.one()};
    EXPECT_FALSE(Lp.is_zero(z));
    EXPECT_FALSE(Lp.try_inv(z).has_value());
  }
  EXPECT_TRUE(found);
}

TEST(LiftTowerTest, LiftedFrobeniusAndNorm) {
  for (u64 p : {2u, 3u}) {
    PrimeField fp(p);
    std::mt19937_64 rng(20 + p);
    for (std::size_t r = 1; r <= 5; ++r) {
      FieldTower t = FieldTower::random(fp, r, rng);
      for (std::size_t n = 1; n <= 4; ++n) {
        LiftedTower lt = lift_tower(t, n, rng);
        const auto& Lp = lt.Lp();
        const auto lam = t.L().random(rng);
        EXPECT_EQ(lt.embed(t.norm(lam)), norm(Lp, lt.embed(lam)));
        EXPECT_EQ(lt.embed(t.L().sigma(lam)), Lp.sigma(lt.embed(lam)));
        const auto a = Lp.random(rng);
        EXPECT_EQ(Lp.sigma(a, static_cast<long long>(r)), a);
        // sigma' is K'-linear: it fixes embedded scalars.
        const auto c = Lp.from_base(Lp.random_scalar(rng));
        EXPECT_EQ(Lp.sigma(Lp.mul(c, a)), Lp.mul(c, Lp.sigma(a)));
        if (n == 1) {
          EXPECT_EQ(Lp.mul(lt.embed(lam), lt.embed(lam)),
                    lt.embed(t.L().mul(lam, lam)));
        }
      }
    }
  }
}

TEST(MinPolyTest, VanishesWithDividingDegree) {
  PrimeField f2(2);
  std::mt19937_64 rng(7);
  ZechField k16(f2, random_irreducible(f2, 4, rng));
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = k16.from_coords(std::vector<u64>{rng() & 1, rng() & 1,
                                                    rng() & 1, rng() & 1});
    const auto z = min_poly_over_K(k16, a);
    const std::size_t d = static_cast<std::size_t>(z.degree());
    EXPECT_EQ(4 % d, 0u);
    auto acc = k16.zero();
    for (std::size_t i = d + 1; i-- > 0;) {
      acc = k16.add(k16.mul(acc, a), k16.from_u64(z.coeffs[i]));
    }
    EXPECT_TRUE(k16.is_zero(acc));
  }
  const auto g = min_poly_over_K(k16, k16.generator());
  EXPECT_EQ(g.coeffs, k16.modulus());
  const auto one = min_poly_over_K(k16, k16.one());
  EXPECT_EQ(one.coeffs, (std::vector<u64>{1, 1}));
}

}  // namespace
}  // namespace skew
