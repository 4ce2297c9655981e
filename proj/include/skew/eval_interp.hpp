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
#include <utility>
#include <vector>

#include "skew/comm_poly.hpp"
#include "skew/errors.hpp"
#include "skew/matrix.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

// Data attached to a normal basis (b_0, ..., b_{r-1}) of a ring with
// automorphism sigma: B(T) = sum b_i T^i and its inverse modulo T^r - 1.
// Works for L and for a lifted L'; the basis is taken as given.
template <class Ring>
class NormalBasisContext {
 public:
  using Elem = typename Ring::Elem;
  using Poly = CommPoly<Elem>;

  NormalBasisContext(Ring ring, std::vector<Elem> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {
    if (basis_.size() != ring_.degree()) {
      throw UsageError("NormalBasisContext: basis has the wrong length");
    }
    for (const auto& b : basis_) ring_.check(b);
    b_ = comm::make(ring_, basis_);
    const auto inv = comm::inverse_mod(ring_, b_, comm::binomial(ring_, degree(), ring_.one()));
    if (!inv) throw ConstructionError("NormalBasisContext: B(T) is not invertible mod T^r - 1");
    b_inverse_ = *inv;
  }

  const Ring& ring() const { return ring_; }
  std::size_t degree() const { return ring_.degree(); }
  const std::vector<Elem>& basis() const { return basis_; }
  const Elem& basis(long i) const {
    const long r = static_cast<long>(degree());
    return basis_[static_cast<std::size_t>(((i % r) + r) % r)];
  }
  const Poly& B() const { return b_; }
  const Poly& B_inverse() const { return b_inverse_; }

  // B_n(T) = sum_{i<r} b_{i+n} T^i = T^{-n} B(T) mod T^r - 1.
  Poly B_shifted(std::size_t n) const {
    std::vector<Elem> c(degree());
    for (std::size_t i = 0; i < degree(); ++i) c[i] = basis(static_cast<long>(i + n));
    return comm::make(ring_, std::move(c));
  }

  // Plain Euclidean remainder sequence R_0 = T^r - 1, R_1 = B, ... up to the
  // last nonzero remainder.
  std::vector<Poly> remainder_sequence() const {
    std::vector<Poly> seq{comm::binomial(ring_, degree(), ring_.one()), b_};
    while (!seq.back().is_zero()) {
      seq.push_back(comm::divrem(ring_, seq[seq.size() - 2], seq.back()).second);
    }
    seq.pop_back();
    return seq;
  }

 private:
  Ring ring_;
  std::vector<Elem> basis_;
  Poly b_;
  Poly b_inverse_;
};

template <class Elem>
CommPoly<Elem> as_comm(const SkewPoly<Elem>& a) {
  return CommPoly<Elem>{a.coeffs};
}

template <class Elem>
SkewPoly<Elem> as_skew(const CommPoly<Elem>& a) {
  return SkewPoly<Elem>{a.coeffs};
}

// (A(b_0), ..., A(b_{r-1})) read off A~(T) B(T) mod T^r - 1. A is reduced
// modulo X^r - 1 first.
template <class Ring>
std::vector<typename Ring::Elem> eval_on_normal_basis(const NormalBasisContext<Ring>& ctx,
                                                      const SkewOf<Ring>& a) {
  const auto& ring = ctx.ring();
  const std::size_t r = ctx.degree();
  const auto red = skew_reduce_cyclic(ring, a);
  auto c = comm::mulmod_binomial(ring, as_comm(red), ctx.B(), r, ring.one());
  c.coeffs.resize(r, ring.zero());
  return c.coeffs;
}

// The unique A of degree < r with A(b_j) = values[j].
template <class Ring>
SkewOf<Ring> interpolate_full(const NormalBasisContext<Ring>& ctx,
                              const std::vector<typename Ring::Elem>& values) {
  const auto& ring = ctx.ring();
  if (values.size() != ctx.degree()) {
    throw UsageError("interpolate_full: expected r values");
  }
  const auto c = comm::make(ring, values);
  return as_skew(comm::mulmod_binomial(ring, c, ctx.B_inverse(), ctx.degree(), ring.one()));
}

// Matrix of A(sigma) on the working basis: the normal-basis images give the
// matrix from normal to working coordinates; omega converts the domain.
template <class Ring>
Matrix<typename Ring::Scalar> operator_matrix(const NormalBasisContext<Ring>& ctx,
                                              const Matrix<typename Ring::Scalar>& omega,
                                              const SkewOf<Ring>& a) {
  const auto images = eval_on_normal_basis(ctx, a);
  Matrix<typename Ring::Scalar> m(ctx.degree(), ctx.degree(), ctx.ring().base().zero());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t i = 0; i < ctx.degree(); ++i) m(i, j) = images[j][i];
  }
  return mat_mul(ctx.ring().base(), m, omega);
}

// (A(b_0), ..., A(b_{n-1})) for deg A <= n from two plain products:
// c_i = [T^i] A~ U + [T^{i+r}] A~ V with U = sum_{m=0}^{n} b_m T^m and
// V = sum_{m=1}^{n} b_{r-m} T^{r-m}.
template <class Ring>
std::vector<typename Ring::Elem> eval_truncated(const NormalBasisContext<Ring>& ctx,
                                                const SkewOf<Ring>& a, std::size_t n) {
  const auto& ring = ctx.ring();
  const std::size_t r = ctx.degree();
  if (n > r) throw UsageError("eval_truncated: n exceeds r");
  if (a.degree() > static_cast<long>(n)) {
    throw UsageError("eval_truncated: degree exceeds the number of points");
  }
  std::vector<typename Ring::Elem> u(n + 1), v(n + 1, ring.zero());
  for (std::size_t m = 0; m <= n; ++m) u[m] = ctx.basis(static_cast<long>(m));
  // V = T^{r-n} V' with V' = sum_{m=1}^{n} b_{r-m} T^{n-m}.
  for (std::size_t m = 1; m <= n; ++m) v[n - m] = ctx.basis(static_cast<long>(r - m));
  const auto at = as_comm(a);
  const auto gu = comm::mul(ring, at, comm::make(ring, std::move(u)));
  const auto gv = comm::mul(ring, at, comm::make(ring, std::move(v)));
  std::vector<typename Ring::Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = ring.add(comm::coeff(ring, gu, static_cast<int>(i)),
                      comm::coeff(ring, gv, static_cast<int>(i + n)));
  }
  return out;
}

// 2x2 matrix of commutative polynomials acting on column vectors (R0, R1).
template <class Elem>
struct PolyMat2 {
  CommPoly<Elem> m00, m01, m10, m11;
};

// Row vector (w0, w1) acting on (R0, R1).
template <class Elem>
struct PolyRow2 {
  CommPoly<Elem> w0, w1;
};

template <class Ring>
PolyMat2<typename Ring::Elem> polymat_identity(const Ring& ring) {
  using P = CommPoly<typename Ring::Elem>;
  const P one = comm::constant(ring, ring.one());
  return {one, P{}, P{}, one};
}

template <class Ring>
PolyMat2<typename Ring::Elem> polymat_mul(const Ring& ring,
                                          const PolyMat2<typename Ring::Elem>& a,
                                          const PolyMat2<typename Ring::Elem>& b) {
  auto dot = [&](const auto& x, const auto& y, const auto& z, const auto& w) {
    return comm::add(ring, comm::mul(ring, x, y), comm::mul(ring, z, w));
  };
  return {dot(a.m00, b.m00, a.m01, b.m10), dot(a.m00, b.m01, a.m01, b.m11),
          dot(a.m10, b.m00, a.m11, b.m10), dot(a.m10, b.m01, a.m11, b.m11)};
}

template <class Ring>
PolyRow2<typename Ring::Elem> polyrow_mul(const Ring& ring,
                                          const PolyRow2<typename Ring::Elem>& w,
                                          const PolyMat2<typename Ring::Elem>& m) {
  return {comm::add(ring, comm::mul(ring, w.w0, m.m00), comm::mul(ring, w.w1, m.m10)),
          comm::add(ring, comm::mul(ring, w.w0, m.m01), comm::mul(ring, w.w1, m.m11))};
}

template <class Ring>
CommPoly<typename Ring::Elem> polyrow_apply(const Ring& ring,
                                            const PolyRow2<typename Ring::Elem>& w,
                                            const CommPoly<typename Ring::Elem>& r0,
                                            const CommPoly<typename Ring::Elem>& r1) {
  return comm::add(ring, comm::mul(ring, w.w0, r0), comm::mul(ring, w.w1, r1));
}

template <class Elem>
struct SteerResult {
  PolyMat2<Elem> m;  // m (R0, R1) = (R_k, R_{k+1})
  PolyRow2<Elem> w;  // w (R0, R1) = sum_{i=1}^{k} c_i R_i
};

namespace detail {

// Recursive core of steer_remainders; n is deg R0 and deg R1 = n - 1.
template <class Ring>
SteerResult<typename Ring::Elem> steer_rec(const Ring& ring,
                                           const CommPoly<typename Ring::Elem>& r0,
                                           const CommPoly<typename Ring::Elem>& r1,
                                           std::size_t n,
                                           const std::vector<typename Ring::Elem>& targets,
                                           std::size_t lo, std::size_t hi) {
  using P = CommPoly<typename Ring::Elem>;
  const std::size_t k = hi - lo;
  if (k == 0) return {polymat_identity(ring), {P{}, P{}}};
  if (r0.degree() != static_cast<int>(n) || r1.degree() != static_cast<int>(n) - 1) {
    throw ConstructionError("steer_remainders: remainder sequence is not normal");
  }
  if (n > 2 * k) {
    // Only the top 2k coefficients influence the first k steps.
    const std::size_t m = n - 2 * k;
    return steer_rec(ring, comm::quo_tk(ring, r0, m), comm::quo_tk(ring, r1, m), 2 * k,
                     targets, lo, hi);
  }
  if (k == 1) {
    const auto q = comm::divrem(ring, r0, r1).first;
    const auto c = ring.div(targets[lo], r1.coeffs.back());
    const P one = comm::constant(ring, ring.one());
    return {{P{}, one, one, comm::neg(ring, q)}, {P{}, comm::constant(ring, c)}};
  }
  const std::size_t h = k / 2;
  auto first = steer_rec(ring, r0, r1, n, targets, lo, lo + h);
  const P rh = polyrow_apply(ring, {first.m.m00, first.m.m01}, r0, r1);
  const P rh1 = polyrow_apply(ring, {first.m.m10, first.m.m11}, r0, r1);
  const P s = polyrow_apply(ring, first.w, r0, r1);
  std::vector<typename Ring::Elem> rest(targets);
  for (std::size_t j = lo + h; j < hi; ++j) {
    rest[j] = ring.sub(targets[j], comm::coeff(ring, s, static_cast<int>(n - 1 - (j - lo))));
  }
  auto second = steer_rec(ring, rh, rh1, n - h, rest, lo + h, hi);
  PolyRow2<typename Ring::Elem> w = polyrow_mul(ring, second.w, first.m);
  w.w0 = comm::add(ring, w.w0, first.w.w0);
  w.w1 = comm::add(ring, w.w1, first.w.w1);
  return {polymat_mul(ring, second.m, first.m), std::move(w)};
}

}  // namespace detail

// Divide and conquer over the Euclidean remainder sequence R_0, R_1, R_2,
// ... of (r0, r1), assumed normal (deg R_i = deg r0 - i) for the first k + 1
// terms. targets[j] is the prescribed coefficient of degree deg r0 - 1 - j
// of the combination sum_{i=1}^{k} c_i R_i, k = targets.size().
template <class Ring>
SteerResult<typename Ring::Elem> steer_remainders(
    const Ring& ring, const CommPoly<typename Ring::Elem>& r0,
    const CommPoly<typename Ring::Elem>& r1,
    const std::vector<typename Ring::Elem>& targets) {
  if (r0.degree() < 1) throw UsageError("steer_remainders: deg R0 must be >= 1");
  if (targets.size() > static_cast<std::size_t>(r0.degree())) {
    throw UsageError("steer_remainders: too many targets");
  }
  return detail::steer_rec(ring, r0, r1, static_cast<std::size_t>(r0.degree()), targets,
                           0, targets.size());
}

// Same contract, one Euclidean step at a time.
template <class Ring>
SteerResult<typename Ring::Elem> steer_remainders_classical(
    const Ring& ring, const CommPoly<typename Ring::Elem>& r0,
    const CommPoly<typename Ring::Elem>& r1,
    const std::vector<typename Ring::Elem>& targets) {
  using P = CommPoly<typename Ring::Elem>;
  const int n = r0.degree();
  PolyMat2<typename Ring::Elem> m = polymat_identity(ring);
  PolyRow2<typename Ring::Elem> w{P{}, P{}};
  P a = r0, b = r1, s{};
  const P one = comm::constant(ring, ring.one());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (b.degree() != n - 1 - static_cast<int>(j)) {
      throw ConstructionError("steer_remainders: remainder sequence is not normal");
    }
    const auto need = ring.sub(targets[j], comm::coeff(ring, s, b.degree()));
    const auto c = ring.div(need, b.coeffs.back());
    s = comm::add(ring, s, comm::scale(ring, c, b));
    w.w0 = comm::add(ring, w.w0, comm::scale(ring, c, m.m10));
    w.w1 = comm::add(ring, w.w1, comm::scale(ring, c, m.m11));
    auto [q, rem] = comm::divrem(ring, a, b);
    m = polymat_mul(ring, PolyMat2<typename Ring::Elem>{P{}, one, one, comm::neg(ring, q)}, m);
    a = std::move(b);
    b = std::move(rem);
  }
  return {std::move(m), std::move(w)};
}

enum class SteerEngine { kHalfGcd, kClassical };

template <class Ring>
SteerResult<typename Ring::Elem> steer(SteerEngine engine, const Ring& ring,
                                       const CommPoly<typename Ring::Elem>& r0,
                                       const CommPoly<typename Ring::Elem>& r1,
                                       const std::vector<typename Ring::Elem>& targets) {
  return engine == SteerEngine::kHalfGcd ? steer_remainders(ring, r0, r1, targets)
                                         : steer_remainders_classical(ring, r0, r1, targets);
}

// Monic A of degree n vanishing on b_0, ..., b_{n-1}: the cofactor of B_n in
// the remainder R_{n+1} of (T^r - 1, B_n). For n = r this is X^r - 1.
template <class Ring>
SkewOf<Ring> min_subspace_poly_truncated(const NormalBasisContext<Ring>& ctx, std::size_t n,
                                         SteerEngine engine = SteerEngine::kHalfGcd) {
  const auto& ring = ctx.ring();
  const std::size_t r = ctx.degree();
  if (n < 1 || n > r) throw UsageError("min_subspace_poly_truncated: need 1 <= n <= r");
  const auto res = steer(engine, ring, comm::binomial(ring, r, ring.one()), ctx.B_shifted(n),
                         std::vector<typename Ring::Elem>(n, ring.zero()));
  return skew_monic(ring, as_skew(res.m.m11));
}

template <class Ring>
struct SmallInterpolation {
  SkewOf<Ring> poly;  // deg <= n - 1, poly(b_i) = alpha_i for i < n
  // U (T^r - 1) + V B = H + T^{r-n+1} (alpha_0 + ... + alpha_{n-1} T^{n-1})
  // with deg U <= n - 1, deg V <= n, deg H <= r - n.
  CommPoly<typename Ring::Elem> u, v, h;
};

// Interpolation at the first n elements of the normal basis in O~(rn).
//
// With B_n = T^{-n} B mod T^r - 1, A(b_i) = alpha_i for i < n holds iff
// A~ B_n mod T^r - 1 has coefficient alpha_i in degree r - n + i. The
// combination sum_{i=1}^{n} c_i R_i of the remainders of (T^r - 1, B_n) with
// those top coefficients has B_n-cofactor of degree <= n - 1, which is A.
template <class Ring>
SmallInterpolation<Ring> small_degree_interpolation(
    const NormalBasisContext<Ring>& ctx, const std::vector<typename Ring::Elem>& alpha,
    SteerEngine engine = SteerEngine::kHalfGcd) {
  using P = CommPoly<typename Ring::Elem>;
  const auto& ring = ctx.ring();
  const std::size_t r = ctx.degree();
  const std::size_t n = alpha.size();
  if (n < 1 || n > r) throw UsageError("small_degree_interpolation: need 1 <= n <= r");
  for (const auto& a : alpha) ring.check(a);
  const P r0 = comm::binomial(ring, r, ring.one());

  std::vector<typename Ring::Elem> targets(n);
  for (std::size_t j = 0; j < n; ++j) targets[j] = alpha[n - 1 - j];
  const auto res = steer(engine, ring, r0, ctx.B_shifted(n), targets);

  // Certificate on (T^r - 1, B): c_0 = alpha_{n-1} on R0, then the n - 1
  // coefficients below degree r are steered through R_1, ..., R_{n-1}.
  SmallInterpolation<Ring> out;
  out.poly = as_skew(res.w.w1);
  const auto c0 = alpha[n - 1];
  std::vector<typename Ring::Elem> rest(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    rest[j] = ring.sub(alpha[n - 2 - j],
                       ring.mul(c0, comm::coeff(ring, r0, static_cast<int>(r - 1 - j))));
  }
  const auto cert = steer(engine, ring, r0, ctx.B(), rest);
  out.u = comm::add(ring, comm::constant(ring, c0), cert.w.w0);
  out.v = cert.w.w1;
  P target = comm::shift(ring, comm::make(ring, alpha), r - n + 1);
  out.h = comm::sub(ring,
                    comm::add(ring, comm::mul(ring, out.u, r0), comm::mul(ring, out.v, ctx.B())),
                    target);
  return out;
}

// Least-degree A of degree <= m with A(x_i) = y_i, by a dense K-linear solve
// in the (m + 1) r coordinates of the coefficients of A. Throws
// SingularMatrixError when no such A exists.
template <class Ring>
SkewOf<Ring> interpolate_linear_oracle(
    const Ring& ring,
    const std::vector<std::pair<typename Ring::Elem, typename Ring::Elem>>& points,
    std::size_t m) {
  const auto& field = ring.base();
  const std::size_t r = ring.degree();
  std::vector<typename Ring::Scalar> rhs;
  for (const auto& [x, y] : points) {
    ring.check(x);
    ring.check(y);
    rhs.insert(rhs.end(), y.begin(), y.end());
  }
  auto monomial_elem = [&](std::size_t l) {
    typename Ring::Elem e = ring.zero();
    e[l] = field.one();
    return e;
  };
  for (std::size_t d = 0; d <= m; ++d) {
    const std::size_t unknowns = (d + 1) * r;
    // Column j r + l: coordinates of x^l sigma^j(x_i), stacked over i.
    Matrix<typename Ring::Scalar> a(points.size() * r, unknowns, field.zero());
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j <= d; ++j) {
        const auto sx = ring.sigma(points[i].first, static_cast<long long>(j));
        for (std::size_t l = 0; l < r; ++l) {
          const auto col = ring.mul(monomial_elem(l), sx);
          for (std::size_t t = 0; t < r; ++t) a(i * r + t, j * r + l) = col[t];
        }
      }
    }
    try {
      const auto sol = mat_solve(field, a, rhs);
      std::vector<typename Ring::Elem> coeffs(d + 1, ring.zero());
      for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t l = 0; l < r; ++l) coeffs[j][l] = sol[j * r + l];
      }
      return skew_make(ring, std::move(coeffs));
    } catch (const SingularMatrixError&) {
    }
  }
  throw SingularMatrixError("interpolate_linear_oracle: no interpolant of the given degree");
}

}  // namespace skew
