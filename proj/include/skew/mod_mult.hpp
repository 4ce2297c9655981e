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
#include <optional>
#include <random>
#include <vector>

#include "skew/comm_poly.hpp"
#include "skew/errors.hpp"
#include "skew/eval_interp.hpp"
#include "skew/field_tower.hpp"
#include "skew/matrix.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

// A(lambda X) = sum lambda_i a_i X^i with lambda_0 = 1 and
// lambda_{i+1} = lambda sigma(lambda_i).
template <class Ring>
SkewOf<Ring> twist_substitute(const Ring& ring, const SkewOf<Ring>& a,
                              const typename Ring::Elem& lambda) {
  if (ring.is_zero(lambda)) throw UsageError("twist_substitute: lambda is zero");
  SkewOf<Ring> out = a;
  auto li = ring.one();
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = ring.mul(li, out.coeffs[i]);
    li = ring.mul(lambda, ring.sigma(li));
  }
  skew_trim(ring, out);
  return out;
}

// Inverse of twist_substitute: divides the i-th coefficient by lambda_i.
template <class Ring>
SkewOf<Ring> twist_undo(const Ring& ring, const SkewOf<Ring>& a,
                        const typename Ring::Elem& lambda) {
  return twist_substitute(ring, a, ring.inv(lambda));
}

// Basis bt_i = sigma_a^{r-1-i}(bt_{r-1}) for sigma_a = lambda sigma, so that
// sigma_a(bt_i) = bt_{i-1} and sigma_a(bt_0) = a bt_{r-1}, a = N(lambda).
// With bt_{r-1} = b_{r-1} this is bt_i = lambda_{r-1-i} b_i, which is not
// always independent. lambda = 1 gives the normal basis itself.
template <class Ring>
class TwistedBasisContext {
 public:
  using Elem = typename Ring::Elem;
  using Scalar = typename Ring::Scalar;
  using Poly = CommPoly<Elem>;

  // Starts from bt_{r-1} = b_{r-1}; when that orbit is dependent, retries
  // with pseudo-random bt_{r-1} (fixed seed, at most 64 r draws). Throws
  // ConstructionError when lambda is not a unit, no cyclic vector is found,
  // or B~ cannot be inverted modulo T^r - a by Euclid (possible over a
  // non-field L').
  TwistedBasisContext(Ring ring, const std::vector<Elem>& normal_basis, Elem lambda)
      : ring_(std::move(ring)), lambda_(std::move(lambda)) {
    const std::size_t r = ring_.degree();
    if (normal_basis.size() != r) throw UsageError("TwistedBasisContext: wrong basis length");
    ring_.check(lambda_);
    if (!ring_.try_inv(lambda_)) throw ConstructionError("TwistedBasisContext: lambda is not a unit");
    const auto nrm = norm(ring_, lambda_);
    if (!ring_.is_scalar(nrm)) throw ConstructionError("TwistedBasisContext: norm is not in the base");
    a_ = nrm[0];
    std::mt19937_64 rng(0x5eed);
    Elem top = normal_basis[r - 1];
    for (std::size_t attempt = 0;; ++attempt) {
      if (try_orbit(top)) break;
      if (attempt >= 64 * r) throw ConstructionError("TwistedBasisContext: no cyclic vector found");
      top = ring_.random(rng);
    }
    b_ = comm::make(ring_, basis_);
    const auto inv = comm::inverse_mod(ring_, b_, modulus());
    if (!inv) throw ConstructionError("TwistedBasisContext: B~ is not invertible by Euclid");
    b_inverse_ = *inv;
  }

  const Ring& ring() const { return ring_; }
  std::size_t degree() const { return ring_.degree(); }
  const Elem& lambda() const { return lambda_; }
  const Scalar& a() const { return a_; }
  Elem a_elem() const { return ring_.from_base(a_); }
  const std::vector<Elem>& basis() const { return basis_; }
  const Poly& B() const { return b_; }
  const Poly& B_inverse() const { return b_inverse_; }
  // Twisted basis coordinates -> working coordinates, and its inverse.
  const Matrix<Scalar>& P() const { return p_; }
  const Matrix<Scalar>& P_inverse() const { return p_inv_; }
  Poly modulus() const { return comm::binomial(ring_, degree(), a_elem()); }

 private:
  bool try_orbit(const Elem& top) {
    const std::size_t r = ring_.degree();
    basis_.assign(r, top);
    for (std::size_t i = r - 1; i-- > 0;) basis_[i] = ring_.mul(lambda_, ring_.sigma(basis_[i + 1]));
    p_ = coordinate_matrix(ring_, basis_);
    try {
      p_inv_ = mat_inv(ring_.base(), p_);
    } catch (const SingularMatrixError&) {
      return false;
    }
    return true;
  }

  Ring ring_;
  Elem lambda_;
  Scalar a_{};
  std::vector<Elem> basis_;
  Matrix<Scalar> p_, p_inv_;
  Poly b_, b_inverse_;
};

// (A(sigma_a)(bt_j))_j = coefficients of A~ B~ mod T^r - a; A is reduced
// modulo X^r - a first.
template <class Ring>
std::vector<typename Ring::Elem> eval_on_twisted_basis(const TwistedBasisContext<Ring>& ctx,
                                                       const SkewOf<Ring>& a) {
  const auto& ring = ctx.ring();
  const auto red = skew_reduce_binomial(ring, a, ctx.a_elem());
  auto c = comm::mulmod_binomial(ring, as_comm(red), ctx.B(), ctx.degree(), ctx.a_elem());
  c.coeffs.resize(ctx.degree(), ring.zero());
  return c.coeffs;
}

namespace detail {

template <class Ring>
Matrix<typename Ring::Scalar> values_matrix(const Ring& ring,
                                            const std::vector<typename Ring::Elem>& v) {
  return coordinate_matrix(ring, v);
}

// Shared core: images of two operators on a basis, combined through the
// inverse coordinate matrix of that basis, then interpolated back.
template <class Ring>
std::vector<typename Ring::Elem> compose_images(const Ring& ring,
                                                const std::vector<typename Ring::Elem>& c1,
                                                const Matrix<typename Ring::Scalar>& to_basis,
                                                const std::vector<typename Ring::Elem>& c2) {
  const auto& field = ring.base();
  const auto n = mat_mul(field, mat_mul(field, values_matrix(ring, c1), to_basis),
                         values_matrix(ring, c2));
  std::vector<typename Ring::Elem> out(ring.degree());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = n.column(j);
  return out;
}

}  // namespace detail

// A1 A2 mod X^r - 1 through End_K(L): M = M_1 Omega M_2.
template <class Ring>
SkewOf<Ring> mod_mul_cyclic(const NormalBasisContext<Ring>& ctx,
                            const Matrix<typename Ring::Scalar>& omega,
                            const SkewOf<Ring>& a1, const SkewOf<Ring>& a2) {
  const auto& ring = ctx.ring();
  const auto values = detail::compose_images(ring, eval_on_normal_basis(ctx, a1), omega,
                                             eval_on_normal_basis(ctx, a2));
  return interpolate_full(ctx, values);
}

inline SkewOf<GfExt> mod_mul_cyclic(const FieldTower& tower, const SkewOf<GfExt>& a1,
                                    const SkewOf<GfExt>& a2) {
  NormalBasisContext<GfExt> ctx(tower.L(), tower.normal_basis());
  return mod_mul_cyclic(ctx, tower.omega(), a1, a2);
}

// A1 A2 mod X^r - a with a = N(lambda), through the twisted basis.
template <class Ring>
SkewOf<Ring> mod_mul_a(const TwistedBasisContext<Ring>& ctx, const SkewOf<Ring>& a1,
                       const SkewOf<Ring>& a2) {
  const auto& ring = ctx.ring();
  const auto values = detail::compose_images(ring, eval_on_twisted_basis(ctx, a1),
                                             ctx.P_inverse(), eval_on_twisted_basis(ctx, a2));
  const auto c = comm::make(ring, values);
  return as_skew(comm::mulmod_binomial(ring, c, ctx.B_inverse(), ctx.degree(), ctx.a_elem()));
}

// Reduction modulo the central polynomial Z(X^r), Z monic over F_p: each
// strand alpha_j(T) = sum_k a_{kr+j} T^k is reduced modulo Z.
template <class Ring>
SkewOf<Ring> skew_reduce_central(const Ring& ring, const SkewOf<Ring>& a,
                                 const CommPoly<u64>& z) {
  const std::size_t r = ring.degree();
  const std::size_t dz = static_cast<std::size_t>(z.degree());
  if (z.degree() < 1 || z.coeffs.back() != 1) throw UsageError("skew_reduce_central: Z must be monic of degree >= 1");
  const std::size_t len = dz * r;
  if (a.coeffs.size() <= len) return a;
  std::vector<typename Ring::Elem> work = a.coeffs;
  // X^{r dz} = -sum_{k<dz} z_k X^{rk}.
  for (std::size_t i = work.size(); i-- > len;) {
    if (ring.is_zero(work[i])) continue;
    const auto c = work[i];
    for (std::size_t k = 0; k < dz; ++k) {
      if (z.coeffs[k] == 0) continue;
      auto& slot = work[i - len + k * r];
      slot = ring.sub(slot, ring.scale(z.coeffs[k], c));
    }
  }
  work.resize(len);
  SkewOf<Ring> out{std::move(work)};
  skew_trim(ring, out);
  return out;
}

// Z(X^r) as a skew polynomial over ring.
template <class Ring>
SkewOf<Ring> central_modulus(const Ring& ring, const CommPoly<u64>& z) {
  const std::size_t r = ring.degree();
  std::vector<typename Ring::Elem> c(static_cast<std::size_t>(z.degree()) * r + 1, ring.zero());
  for (std::size_t k = 0; k < z.coeffs.size(); ++k) c[k * r] = ring.from_u64(z.coeffs[k]);
  return skew_make(ring, std::move(c));
}

// Multiplication modulo Z(X^r), Z the minimal polynomial over F_p of
// a = N(lambda') in K' with K(a) = K', through L[X]/Z(X^r) = L'[X]/(X^r - a).
class ModZContext {
 public:
  using Poly = SkewOf<GfExt>;

  // Throws ConstructionError when a = 0, K(a) != K', or the twisted context
  // over L' cannot be built; callers resample lambda'.
  ModZContext(LiftedTower lift, LiftedRing::Elem lambda);

  const LiftedTower& lift() const { return lift_; }
  const CommPoly<u64>& Z() const { return z_; }
  ZechField::Elem a() const { return twisted_->a(); }
  const TwistedBasisContext<LiftedRing>& twisted() const { return *twisted_; }

  // L[X]/Z(X^r) -> L'[X]/(X^r - a): X^r -> a on every strand.
  SkewOf<LiftedRing> to_lifted(const Poly& a) const;
  // Inverse map, using the cached inverse of the matrix of powers of a.
  Poly from_lifted(const SkewOf<LiftedRing>& a) const;

  Poly multiply(const Poly& a1, const Poly& a2) const;

 private:
  LiftedTower lift_;
  CommPoly<u64> z_;
  std::optional<TwistedBasisContext<LiftedRing>> twisted_;
  std::vector<ZechField::Elem> a_powers_;
  Matrix<u64> powers_inverse_;
};

inline SkewOf<GfExt> mod_mul_Z(const ModZContext& ctx, const SkewOf<GfExt>& a1,
                               const SkewOf<GfExt>& a2) {
  return ctx.multiply(a1, a2);
}

}  // namespace skew
