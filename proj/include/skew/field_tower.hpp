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

#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <vector>

#include "skew/comm_poly.hpp"
#include "skew/ext_ring.hpp"
#include "skew/matrix.hpp"
#include "skew/prime_field.hpp"
#include "skew/zech_field.hpp"

namespace skew {

using GfExt = ExtRing<PrimeField>;
using LiftedRing = ExtRing<ZechField>;

bool is_irreducible(const PrimeField& fp, const std::vector<u64>& f);

// Uniformly random monic irreducible polynomial of degree n, constant first.
std::vector<u64> random_irreducible(const PrimeField& fp, std::size_t n,
                                    std::mt19937_64& rng);

// lambda * sigma(lambda) * ... * sigma^{r-1}(lambda), by the recurrence
// lambda_{i+1} = lambda * sigma(lambda_i).
template <class Ring>
typename Ring::Elem norm(const Ring& ring, const typename Ring::Elem& lambda) {
  auto acc = lambda;
  for (std::size_t i = 1; i < ring.degree(); ++i) {
    acc = ring.mul(lambda, ring.sigma(acc));
  }
  return acc;
}

// Prefix norms lambda_0 = 1, lambda_{i+1} = lambda * sigma(lambda_i), i < r.
template <class Ring>
std::vector<typename Ring::Elem> partial_norms(const Ring& ring,
                                               const typename Ring::Elem& lambda) {
  std::vector<typename Ring::Elem> out;
  out.reserve(ring.degree() + 1);
  out.push_back(ring.one());
  for (std::size_t i = 0; i < ring.degree(); ++i) {
    out.push_back(ring.mul(lambda, ring.sigma(out.back())));
  }
  return out;
}

// The K-matrix whose column i holds the working coordinates of basis[i].
template <class Ring>
Matrix<typename Ring::Scalar> coordinate_matrix(
    const Ring& ring, const std::vector<typename Ring::Elem>& basis) {
  Matrix<typename Ring::Scalar> m(ring.degree(), basis.size(), ring.base().zero());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < ring.degree(); ++i) m(i, j) = basis[j][i];
  }
  return m;
}

// Maps a matrix with F_p entries into any ring containing F_p.
template <class Field>
Matrix<typename Field::Elem> lift_matrix(const Field& field, const Matrix<u64>& m) {
  Matrix<typename Field::Elem> out(m.rows(), m.cols(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.from_u64(m(i, j));
  }
  return out;
}

// K = F_p, L = F_p[x]/(f) with sigma(x) = x^p, a normal basis (b_i) with
// sigma(b_{i+1}) = b_i, and the change-of-basis matrices between the power
// basis and the normal basis.
class FieldTower {
 public:
  using Elem = GfExt::Elem;

  // Validates f (monic, irreducible) and searches a normal basis.
  FieldTower(PrimeField fp, std::vector<u64> f, std::mt19937_64& rng);
  // Uses the given normal basis after checking it.
  FieldTower(PrimeField fp, std::vector<u64> f, std::vector<Elem> normal_basis);

  static FieldTower random(PrimeField fp, std::size_t r, std::mt19937_64& rng);

  const PrimeField& K() const { return fp_; }
  const GfExt& L() const { return ring_; }
  std::size_t degree() const { return ring_.degree(); }
  const std::vector<u64>& modulus() const { return ring_.modulus(); }
  const Matrix<u64>& frobenius_matrix() const {
    return ring_.frobenius().powers.size() > 1 ? ring_.frobenius().powers[1]
                                               : ring_.frobenius().powers[0];
  }
  const std::vector<Elem>& normal_basis() const { return basis_; }
  // Columns: working coordinates of b_0, ..., b_{r-1} (normal -> working).
  const Matrix<u64>& basis_matrix() const { return basis_matrix_; }
  // Working -> normal coordinates.
  const Matrix<u64>& omega() const { return omega_; }

  Elem norm(const Elem& a) const { return skew::norm(ring_, a); }
  // Reports a sigma-fixed element of L as its K-value.
  u64 to_base(const Elem& a) const;

 private:
  void set_basis(std::vector<Elem> basis);

  PrimeField fp_;
  GfExt ring_;
  std::vector<Elem> basis_;
  Matrix<u64> basis_matrix_;
  Matrix<u64> omega_;
};

// Returns b with (sigma^{r-1-i}(b))_i a normal basis, or throws
// ConstructionError after 64 r random draws (followed by exhaustive search
// when p^r <= 4096).
std::vector<GfExt::Elem> find_normal_basis(const GfExt& ring, std::mt19937_64& rng);

// The normal-basis sequence generated by b_{r-1} = top; not checked.
std::vector<GfExt::Elem> normal_sequence(const GfExt& ring, const GfExt::Elem& top);

// K' = F_{p^n} and L' = K'[x]/(f), with the embeddings of K and L.
class LiftedTower {
 public:
  using Scalar = ZechField::Elem;
  using Elem = LiftedRing::Elem;

  LiftedTower(const FieldTower& tower, ZechField kprime);

  const FieldTower& base_tower() const { return tower_; }
  const ZechField& Kp() const { return kprime_; }
  const LiftedRing& Lp() const { return ring_; }
  std::size_t degree() const { return ring_.degree(); }
  std::size_t kp_degree() const { return kprime_.degree(); }

  Scalar embed(u64 c) const { return kprime_.from_u64(c); }
  Elem embed(const GfExt::Elem& a) const;
  const std::vector<Elem>& normal_basis() const { return basis_; }
  const Matrix<Scalar>& basis_matrix() const { return basis_matrix_; }
  const Matrix<Scalar>& omega() const { return omega_; }

 private:
  FieldTower tower_;
  ZechField kprime_;
  LiftedRing ring_;
  std::vector<Elem> basis_;
  Matrix<Scalar> basis_matrix_;
  Matrix<Scalar> omega_;
};

// Largest n accepted by lift_tower (Zech tables of size p^n).
inline constexpr u64 kMaxLiftedOrder = u64{1} << 22;

// Builds K' from a random irreducible of degree n.
LiftedTower lift_tower(const FieldTower& tower, std::size_t n, std::mt19937_64& rng);

// Monic minimal polynomial over F_p of a in K', coefficients constant first.
CommPoly<u64> min_poly_over_K(const ZechField& kprime, ZechField::Elem a);

}  // namespace skew
