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

#ifndef SKEW_SKEW_ARITH_HPP_
#define SKEW_SKEW_ARITH_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skew/errors.hpp"
#include "skew/eval_interp.hpp"
#include "skew/fast_mult.hpp"
#include "skew/field_tower.hpp"
#include "skew/matrix.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

// Everything the fast routines need: the ring, a product, and optionally
// the normal-basis data used by the matrix multievaluation strategy.
template <class Ring>
struct SkewArith {
  using Poly = SkewOf<Ring>;
  using MulFn = std::function<Poly(const Poly&, const Poly&)>;

  const Ring* ring = nullptr;
  MulFn mul;
  const NormalBasisContext<Ring>* normal = nullptr;
  const Matrix<typename Ring::Scalar>* omega = nullptr;
  std::size_t div_threshold = 16;
  std::size_t gcd_threshold = 16;
};

template <class Ring>
SkewArith<Ring> naive_arith(const Ring& ring) {
  SkewArith<Ring> ar;
  ar.ring = &ring;
  ar.mul = [&ring](const SkewOf<Ring>& a, const SkewOf<Ring>& b) {
    return skew_mul_naive(ring, a, b);
  };
  return ar;
}

// Routes products through the multiplier's dispatcher. m must outlive the result.
inline SkewArith<GfExt> fast_arith(SkewMultiplier& m) {
  SkewArith<GfExt> ar;
  ar.ring = &m.L();
  ar.mul = [&m](const GfPoly& a, const GfPoly& b) { return m.multiply(a, b); };
  ar.normal = &m.normal_context();
  ar.omega = &m.tower().omega();
  return ar;
}

namespace detail {

template <class Ring>
SkewOf<Ring> quo_x(const SkewOf<Ring>& a, std::size_t k) {
  if (a.coeffs.size() <= k) return {};
  return SkewOf<Ring>{std::vector<typename Ring::Elem>(a.coeffs.begin() + k, a.coeffs.end())};
}

template <class Ring>
std::pair<SkewOf<Ring>, SkewOf<Ring>> rdiv_rec(const SkewArith<Ring>& ar, const SkewOf<Ring>& a,
                                               const SkewOf<Ring>& b) {
  const Ring& ring = *ar.ring;
  const long m = a.degree(), n = b.degree();
  if (m < n) return {SkewOf<Ring>{}, a};
  const std::size_t k = static_cast<std::size_t>(m - n);
  if (k <= ar.div_threshold || n == 0) return rdiv_naive(ring, a, b);
  if (static_cast<std::size_t>(n) > k) {
    // Q only sees the top k+1 coefficients of A and B.
    const std::size_t s = static_cast<std::size_t>(n) - k;
    auto q = rdiv_rec(ar, quo_x<Ring>(a, s), quo_x<Ring>(b, s)).first;
    auto rem = skew_sub(ring, a, ar.mul(q, b));
    return {std::move(q), std::move(rem)};
  }
  // Q = Q1 X^h + Q0 and X^h B = sigma^h(B) X^h.
  const std::size_t h = (k + 1) / 2;
  const auto bh = skew_twist(ring, b, static_cast<long long>(h));
  auto q1 = rdiv_rec(ar, quo_x<Ring>(a, h), bh).first;
  const auto a1 = skew_sub(ring, a, skew_shift(ring, ar.mul(q1, bh), h));
  auto [q0, rem] = rdiv_rec(ar, a1, b);
  return {skew_add(ring, skew_shift(ring, q1, h), q0), std::move(rem)};
}

}  // namespace detail

// Right division A = Q B + R with deg R < deg B, divide and conquer on Q.
template <class Ring>
std::pair<SkewOf<Ring>, SkewOf<Ring>> rdiv_fast(const SkewArith<Ring>& ar, const SkewOf<Ring>& a,
                                                const SkewOf<Ring>& b) {
  if (b.is_zero()) throw DivisionByZeroError("rdiv_fast: division by zero");
  return detail::rdiv_rec(ar, a, b);
}

// 2x2 matrix of skew polynomials acting on the left of a column (A, B).
template <class Ring>
struct SkewMat2 {
  SkewOf<Ring> m[2][2];
};

template <class Ring>
SkewMat2<Ring> skewmat_identity(const Ring& ring) {
  SkewMat2<Ring> out;
  out.m[0][0] = skew_constant(ring, ring.one());
  out.m[1][1] = skew_constant(ring, ring.one());
  return out;
}

template <class Ring>
bool skewmat_is_identity(const Ring& ring, const SkewMat2<Ring>& a) {
  const auto one = skew_constant(ring, ring.one());
  return a.m[0][0] == one && a.m[1][1] == one && a.m[0][1].is_zero() && a.m[1][0].is_zero();
}

template <class Ring>
SkewMat2<Ring> skewmat_mul(const SkewArith<Ring>& ar, const SkewMat2<Ring>& s,
                           const SkewMat2<Ring>& t) {
  SkewMat2<Ring> out;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      out.m[i][k] = skew_add(*ar.ring, ar.mul(s.m[i][0], t.m[0][k]), ar.mul(s.m[i][1], t.m[1][k]));
    }
  }
  return out;
}

template <class Ring>
std::pair<SkewOf<Ring>, SkewOf<Ring>> skewmat_apply(const SkewArith<Ring>& ar,
                                                    const SkewMat2<Ring>& s,
                                                    const SkewOf<Ring>& a,
                                                    const SkewOf<Ring>& b) {
  return {skew_add(*ar.ring, ar.mul(s.m[0][0], a), ar.mul(s.m[0][1], b)),
          skew_add(*ar.ring, ar.mul(s.m[1][0], a), ar.mul(s.m[1][1], b))};
}

// [[0, 1], [1, -q]] times s.
template <class Ring>
SkewMat2<Ring> skewmat_step(const SkewArith<Ring>& ar, const SkewOf<Ring>& q,
                            const SkewMat2<Ring>& s) {
  SkewMat2<Ring> out;
  out.m[0][0] = s.m[1][0];
  out.m[0][1] = s.m[1][1];
  out.m[1][0] = skew_sub(*ar.ring, s.m[0][0], ar.mul(q, s.m[1][0]));
  out.m[1][1] = skew_sub(*ar.ring, s.m[0][1], ar.mul(q, s.m[1][1]));
  return out;
}

namespace detail {

// Requires deg a > deg b. Returns M with (c, d) = M (a, b) consecutive
// remainders of (a, b) and deg c >= ceil(deg a / 2) > deg d.
template <class Ring>
SkewMat2<Ring> hgcd(const SkewArith<Ring>& ar, const SkewOf<Ring>& a, const SkewOf<Ring>& b) {
  const Ring& ring = *ar.ring;
  const long n = a.degree();
  const long m = (n + 1) / 2;
  auto mat = skewmat_identity(ring);
  if (b.degree() < m) return mat;
  if (static_cast<std::size_t>(n) <= ar.gcd_threshold) {
    SkewOf<Ring> c = a, d = b;
    while (d.degree() >= m) {
      auto [q, e] = rdiv_naive(ring, c, d);
      mat = skewmat_step(ar, q, mat);
      c = std::move(d);
      d = std::move(e);
    }
    return mat;
  }
  const auto sm = static_cast<std::size_t>(m);
  mat = hgcd(ar, quo_x<Ring>(a, sm), quo_x<Ring>(b, sm));
  auto [c, d] = skewmat_apply(ar, mat, a, b);
  if (d.degree() < m) return mat;
  auto [q, e] = rdiv_fast(ar, c, d);
  mat = skewmat_step(ar, q, mat);
  if (e.degree() < m) return mat;
  const long l = d.degree();
  const std::size_t k = static_cast<std::size_t>(2 * m - l);
  const auto s = hgcd(ar, quo_x<Ring>(d, k), quo_x<Ring>(e, k));
  return skewmat_mul(ar, s, mat);
}

// Runs Euclid to the end; returns the final matrix and the last nonzero
// remainder. Row 1 of the matrix annihilates (a, b).
template <class Ring>
std::pair<SkewMat2<Ring>, SkewOf<Ring>> euclid_fast(const SkewArith<Ring>& ar,
                                                    const SkewOf<Ring>& a,
                                                    const SkewOf<Ring>& b) {
  const Ring& ring = *ar.ring;
  auto mat = skewmat_identity(ring);
  SkewOf<Ring> r0 = a, r1 = b;
  auto naive_step = [&] {
    auto [q, r2] = rdiv_fast(ar, r0, r1);
    mat = skewmat_step(ar, q, mat);
    r0 = std::move(r1);
    r1 = std::move(r2);
  };
  while (!r1.is_zero()) {
    if (r0.degree() <= r1.degree() ||
        static_cast<std::size_t>(r0.degree()) <= ar.gcd_threshold) {
      naive_step();
      continue;
    }
    const auto h = hgcd(ar, r0, r1);
    if (skewmat_is_identity(ring, h)) {
      naive_step();
      continue;
    }
    const long before = r0.degree();
    auto [c, d] = skewmat_apply(ar, h, r0, r1);
    if (c.degree() > before || d.degree() >= c.degree()) {
      throw std::logic_error("rgcd_fast: half-gcd produced a non-decreasing remainder pair");
    }
    r0 = std::move(c);
    r1 = std::move(d);
    mat = skewmat_mul(ar, h, mat);
  }
  return {std::move(mat), std::move(r0)};
}

}  // namespace detail

// Monic right gcd G = U A + V B via half-gcd.
template <class Ring>
GcdResult<Ring> rgcd_fast(const SkewArith<Ring>& ar, const SkewOf<Ring>& a,
                          const SkewOf<Ring>& b) {
  if (a.is_zero() && b.is_zero()) throw UsageError("rgcd_fast: both inputs are zero");
  const Ring& ring = *ar.ring;
  auto [mat, g] = detail::euclid_fast(ar, a, b);
  const auto c = ring.inv(skew_lc<Ring>(g));
  return {skew_scale(ring, c, g), skew_scale(ring, c, mat.m[0][0]),
          skew_scale(ring, c, mat.m[0][1])};
}

// Monic least left common multiple.
template <class Ring>
SkewOf<Ring> llcm_fast(const SkewArith<Ring>& ar, const SkewOf<Ring>& a, const SkewOf<Ring>& b) {
  if (a.is_zero() || b.is_zero()) throw UsageError("llcm_fast: zero input");
  auto [mat, g] = detail::euclid_fast(ar, a, b);
  return skew_monic(*ar.ring, ar.mul(mat.m[1][0], a));
}

// X - sigma(x)/x; its right remainder on P is P(x)/x.
template <class Ring>
SkewOf<Ring> linear_modulus(const Ring& ring, const typename Ring::Elem& x) {
  if (ring.is_zero(x)) throw UsageError("linear_modulus: zero point");
  return skew_make(ring, {ring.neg(ring.div(ring.sigma(x, 1), x)), ring.one()});
}

template <class Ring>
typename Ring::Elem eval_rem_linear(const Ring& ring, const SkewOf<Ring>& p,
                                    const typename Ring::Elem& x) {
  if (ring.is_zero(x)) throw UsageError("eval_rem_linear: zero point");
  const auto rem = rdiv_naive(ring, p, linear_modulus(ring, x)).second;
  return rem.is_zero() ? ring.zero() : ring.mul(x, rem.coeffs[0]);
}

namespace detail {

// Node polynomials of the balanced llcm tree over [lo, hi).
template <class Ring>
struct SubspaceTree {
  std::size_t lo = 0, hi = 0;
  SkewOf<Ring> poly;
  std::unique_ptr<SubspaceTree> left, right;
};

template <class Ring>
std::unique_ptr<SubspaceTree<Ring>> build_subspace_tree(const SkewArith<Ring>& ar,
                                                        const std::vector<typename Ring::Elem>& xs,
                                                        std::size_t lo, std::size_t hi) {
  auto node = std::make_unique<SubspaceTree<Ring>>();
  node->lo = lo;
  node->hi = hi;
  if (hi - lo == 1) {
    node->poly = linear_modulus(*ar.ring, xs[lo]);
    return node;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  node->left = build_subspace_tree(ar, xs, lo, mid);
  node->right = build_subspace_tree(ar, xs, mid, hi);
  node->poly = llcm_fast(ar, node->left->poly, node->right->poly);
  if (node->poly.degree() != static_cast<long>(hi - lo)) {
    throw UsageError("min_subspace_poly: points " + std::to_string(lo) + ".." +
                     std::to_string(hi - 1) + " are linearly dependent over K");
  }
  return node;
}

template <class Ring>
void check_points(const Ring& ring, const std::vector<typename Ring::Elem>& xs,
                  const char* who) {
  if (xs.empty()) throw UsageError(std::string(who) + ": empty family");
  if (xs.size() > ring.degree()) {
    throw UsageError(std::string(who) + ": more than r points cannot be free");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ring.check(xs[i]);
    if (ring.is_zero(xs[i])) {
      throw UsageError(std::string(who) + ": point " + std::to_string(i) + " is zero");
    }
  }
}

template <class Ring>
void remainder_down(const SkewArith<Ring>& ar, const SubspaceTree<Ring>& node,
                    const SkewOf<Ring>& p, const std::vector<typename Ring::Elem>& xs,
                    std::vector<typename Ring::Elem>& out) {
  const auto rem = rdiv_fast(ar, p, node.poly).second;
  if (!node.left) {
    out[node.lo] = rem.is_zero() ? ar.ring->zero() : ar.ring->mul(xs[node.lo], rem.coeffs[0]);
    return;
  }
  remainder_down(ar, *node.left, rem, xs, out);
  remainder_down(ar, *node.right, rem, xs, out);
}

}  // namespace detail

// Monic P of degree d vanishing on the free family xs.
template <class Ring>
SkewOf<Ring> min_subspace_poly(const SkewArith<Ring>& ar,
                               const std::vector<typename Ring::Elem>& xs) {
  detail::check_points(*ar.ring, xs, "min_subspace_poly");
  return detail::build_subspace_tree(ar, xs, 0, xs.size())->poly;
}

enum class MultievalStrategy { kAuto, kRemainderTree, kMatrix };

template <class Ring>
std::vector<typename Ring::Elem> multieval(const SkewArith<Ring>& ar, const SkewOf<Ring>& p,
                                           const std::vector<typename Ring::Elem>& xs,
                                           MultievalStrategy strategy = MultievalStrategy::kAuto) {
  const Ring& ring = *ar.ring;
  detail::check_points(ring, xs, "multieval");
  const bool have_matrix = ar.normal != nullptr && ar.omega != nullptr;
  if (strategy == MultievalStrategy::kAuto) {
    strategy = have_matrix && 4 * xs.size() >= ring.degree() ? MultievalStrategy::kMatrix
                                                             : MultievalStrategy::kRemainderTree;
  }
  std::vector<typename Ring::Elem> out(xs.size(), ring.zero());
  if (strategy == MultievalStrategy::kRemainderTree) {
    const auto tree = detail::build_subspace_tree(ar, xs, 0, xs.size());
    detail::remainder_down(ar, *tree, p, xs, out);
    return out;
  }
  if (!have_matrix) throw UsageError("multieval: matrix strategy needs a normal basis context");
  // X^r acts as the identity on L.
  const auto op = operator_matrix(*ar.normal, *ar.omega, skew_reduce_cyclic(ring, p));
  const auto vals = mat_mul(ring.base(), op, coordinate_matrix(ring, xs));
  for (std::size_t j = 0; j < xs.size(); ++j) out[j] = vals.column(j);
  return out;
}

namespace detail {

template <class Ring>
SkewOf<Ring> interpolate_rec(const SkewArith<Ring>& ar, const std::vector<typename Ring::Elem>& xs,
                             const std::vector<typename Ring::Elem>& ys) {
  const Ring& ring = *ar.ring;
  const std::size_t d = xs.size();
  if (d == 1) return skew_constant(ring, ring.div(ys[0], xs[0]));
  const std::size_t mid = d / 2;
  const std::vector<typename Ring::Elem> xl(xs.begin(), xs.begin() + mid),
      yl(ys.begin(), ys.begin() + mid), xr(xs.begin() + mid, xs.end()),
      yr(ys.begin() + mid, ys.end());
  const auto pl = interpolate_rec(ar, xl, yl);
  const auto ml = min_subspace_poly(ar, xl);
  // P = PL + W ML with W(ML(x_j)) = y_j - PL(x_j) on the right half.
  const auto at_ml = multieval(ar, ml, xr);
  const auto at_pl = multieval(ar, pl, xr);
  std::vector<typename Ring::Elem> targets(xr.size());
  for (std::size_t j = 0; j < xr.size(); ++j) {
    if (ring.is_zero(at_ml[j])) {
      throw UsageError("interpolate_general: points are linearly dependent over K");
    }
    targets[j] = ring.sub(yr[j], at_pl[j]);
  }
  const auto w = interpolate_rec(ar, at_ml, targets);
  return skew_add(ring, pl, ar.mul(w, ml));
}

}  // namespace detail

// P of degree <= d-1 with P(x_i) = y_i.
template <class Ring>
SkewOf<Ring> interpolate_general(const SkewArith<Ring>& ar,
                                 const std::vector<std::pair<typename Ring::Elem,
                                                             typename Ring::Elem>>& points) {
  std::vector<typename Ring::Elem> xs, ys;
  for (const auto& [x, y] : points) {
    ar.ring->check(y);
    xs.push_back(x);
    ys.push_back(y);
  }
  detail::check_points(*ar.ring, xs, "interpolate_general");
  return detail::interpolate_rec(ar, xs, ys);
}

}  // namespace skew

#endif  // SKEW_SKEW_ARITH_HPP_
