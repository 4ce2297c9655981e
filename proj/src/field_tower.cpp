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

#include <string>
#include <utility>

#include "skew/errors.hpp"

namespace skew {

namespace {

const std::vector<u64>& check_modulus(const PrimeField& fp,
                                      const std::vector<u64>& f) {
  if (f.size() < 2) throw UsageError("modulus must have degree >= 1");
  if (f.back() != 1) throw UsageError("modulus must be monic");
  for (u64 c : f) {
    if (c >= fp.modulus()) throw UsageError("modulus coefficient out of range");
  }
  return f;
}

}  // namespace

bool is_irreducible(const PrimeField& fp, const std::vector<u64>& f) {
  check_modulus(fp, f);
  const std::size_t r = f.size() - 1;
  if (r == 1) return true;
  const auto m = comm::make(fp, f);
  const auto x = comm::monomial(fp, 1, fp.one());
  auto h = x;
  for (std::size_t i = 1; i <= r; ++i) {
    h = comm::powmod(fp, h, fp.modulus(), m);
    if (2 * i <= r) {
      const auto g = comm::gcd(fp, m, comm::sub(fp, h, x));
      if (g.degree() > 0) return false;
    }
  }
  return comm::equal(fp, h, x);
}

std::vector<u64> random_irreducible(const PrimeField& fp, std::size_t n,
                                    std::mt19937_64& rng) {
  if (n == 0) throw UsageError("random_irreducible: degree must be >= 1");
  std::uniform_int_distribution<u64> digit(0, fp.modulus() - 1);
  const std::size_t cap = 1000 * n + 1000;
  for (std::size_t attempt = 0; attempt < cap; ++attempt) {
    std::vector<u64> f(n + 1);
    for (std::size_t i = 0; i < n; ++i) f[i] = digit(rng);
    f[n] = 1;
    if (is_irreducible(fp, f)) return f;
  }
  throw ConstructionError("random_irreducible: no irreducible polynomial found");
}

std::vector<GfExt::Elem> normal_sequence(const GfExt& ring, const GfExt::Elem& top) {
  const std::size_t r = ring.degree();
  std::vector<GfExt::Elem> basis(r);
  basis[r - 1] = top;
  for (std::size_t i = r - 1; i-- > 0;) basis[i] = ring.sigma(basis[i + 1]);
  return basis;
}

namespace {

bool spans(const GfExt& ring, const std::vector<GfExt::Elem>& basis) {
  return mat_rank(ring.base(), coordinate_matrix(ring, basis)) == ring.degree();
}

}  // namespace

std::vector<GfExt::Elem> find_normal_basis(const GfExt& ring, std::mt19937_64& rng) {
  const std::size_t r = ring.degree();
  for (std::size_t attempt = 0; attempt < 64 * r; ++attempt) {
    auto basis = normal_sequence(ring, ring.random(rng));
    if (spans(ring, basis)) return basis;
  }
  const u64 p = ring.base().modulus();
  u64 total = 1;
  for (std::size_t i = 0; i < r && total <= 4096; ++i) total *= p;
  if (total <= 4096) {
    for (u64 code = 1; code < total; ++code) {
      GfExt::Elem cand(r);
      u64 c = code;
      for (std::size_t i = 0; i < r; ++i, c /= p) cand[i] = c % p;
      auto basis = normal_sequence(ring, cand);
      if (spans(ring, basis)) return basis;
    }
  }
  throw ConstructionError("find_normal_basis: retry cap exceeded");
}

FieldTower::FieldTower(PrimeField fp, std::vector<u64> f, std::mt19937_64& rng)
    : FieldTower(fp, std::move(f), std::vector<Elem>{}) {
  set_basis(find_normal_basis(ring_, rng));
}

FieldTower::FieldTower(PrimeField fp, std::vector<u64> f, std::vector<Elem> basis)
    : fp_(fp),
      ring_(fp, fp, f, compute_frobenius_powers(fp, check_modulus(fp, f))) {
  if (!is_irreducible(fp_, f)) throw ConstructionError("modulus is not irreducible");
  const std::size_t r = ring_.degree();
  const auto& powers = ring_.frobenius().powers;
  const auto full = mat_mul(fp_, powers.size() > 1 ? powers[1] : powers[0],
                            powers.back());
  if (!mat_is_identity(fp_, full)) {
    throw ConstructionError("Frobenius does not have order r");
  }
  for (std::size_t s = 1; s < r; ++s) {
    if (r % s == 0 && mat_is_identity(fp_, powers[s])) {
      throw ConstructionError("Frobenius has order smaller than r");
    }
  }
  if (!basis.empty()) set_basis(std::move(basis));
}

FieldTower FieldTower::random(PrimeField fp, std::size_t r, std::mt19937_64& rng) {
  auto f = random_irreducible(fp, r, rng);
  return FieldTower(fp, std::move(f), rng);
}

void FieldTower::set_basis(std::vector<Elem> basis) {
  const std::size_t r = ring_.degree();
  if (basis.size() != r) throw UsageError("normal basis has the wrong length");
  for (const auto& b : basis) ring_.check(b);
  for (std::size_t i = 0; i < r; ++i) {
    if (!ring_.equal(ring_.sigma(basis[(i + 1) % r]), basis[i])) {
      throw ConstructionError("basis does not satisfy sigma(b_{i+1}) = b_i");
    }
  }
  basis_matrix_ = coordinate_matrix(ring_, basis);
  try {
    omega_ = mat_inv(fp_, basis_matrix_);
  } catch (const SingularMatrixError&) {
    throw ConstructionError("normal basis candidate is linearly dependent");
  }
  basis_ = std::move(basis);
}

u64 FieldTower::to_base(const Elem& a) const {
  ring_.check(a);
  if (!ring_.is_scalar(a)) throw UsageError("element does not lie in K");
  return a[0];
}

LiftedTower::LiftedTower(const FieldTower& tower, ZechField kprime)
    : tower_(tower),
      kprime_(std::move(kprime)),
      ring_(kprime_, tower.K(), tower.modulus(), tower.L().frobenius_ptr()) {
  if (kprime_.prime_field().modulus() != tower.K().modulus()) {
    throw UsageError("K' has a different characteristic");
  }
  basis_.reserve(tower.degree());
  for (const auto& b : tower.normal_basis()) basis_.push_back(embed(b));
  basis_matrix_ = lift_matrix(kprime_, tower.basis_matrix());
  omega_ = lift_matrix(kprime_, tower.omega());
}

LiftedTower::Elem LiftedTower::embed(const GfExt::Elem& a) const {
  tower_.L().check(a);
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = kprime_.from_u64(a[i]);
  return out;
}

LiftedTower lift_tower(const FieldTower& tower, std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw UsageError("lift_tower: n must be >= 1");
  const u64 p = tower.K().modulus();
  u64 q = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q > kMaxLiftedOrder / p) {
      throw UsageError("lift_tower: p^n exceeds the supported size " +
                       std::to_string(kMaxLiftedOrder));
    }
    q *= p;
  }
  return LiftedTower(tower, ZechField(tower.K(), random_irreducible(tower.K(), n, rng)));
}

CommPoly<u64> min_poly_over_K(const ZechField& kprime, ZechField::Elem a) {
  const PrimeField& fp = kprime.prime_field();
  const std::size_t n = kprime.degree();
  std::vector<std::vector<u64>> powers;
  auto cur = kprime.one();
  for (std::size_t k = 0; k <= n; ++k) {
    const auto target = kprime.coords(cur);
    if (k > 0) {
      Matrix<u64> m(n, k, fp.zero());
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = powers[j][i];
      }
      std::vector<u64> rhs(n);
      for (std::size_t i = 0; i < n; ++i) rhs[i] = target[i];
      try {
        const auto sol = mat_solve(fp, m, rhs);
        std::vector<u64> coeffs(k + 1);
        for (std::size_t j = 0; j < k; ++j) coeffs[j] = fp.neg(sol[j]);
        coeffs[k] = fp.one();
        return CommPoly<u64>{std::move(coeffs)};
      } catch (const SingularMatrixError&) {
      }
    }
    powers.push_back(target);
    cur = kprime.mul(cur, a);
  }
  throw ConstructionError("min_poly_over_K: no dependency found");
}

}  // namespace skew
