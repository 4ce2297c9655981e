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

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "skew/comm_poly.hpp"
#include "skew/errors.hpp"
#include "skew/matrix.hpp"

namespace skew {

// A = sum a_i X^i with X a = sigma(a) X. Constant term first; the zero
// polynomial is empty and has degree kZeroDegree.
template <class Elem>
struct SkewPoly {
  std::vector<Elem> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

template <class Ring>
using SkewOf = SkewPoly<typename Ring::Elem>;

template <class Ring>
void skew_trim(const Ring& ring, SkewOf<Ring>& a) {
  while (!a.coeffs.empty() && ring.is_zero(a.coeffs.back())) a.coeffs.pop_back();
}

template <class Ring>
SkewOf<Ring> skew_make(const Ring& ring, std::vector<typename Ring::Elem> coeffs) {
  for (const auto& c : coeffs) ring.check(c);
  SkewOf<Ring> a{std::move(coeffs)};
  skew_trim(ring, a);
  return a;
}

template <class Ring>
SkewOf<Ring> skew_constant(const Ring& ring, const typename Ring::Elem& c) {
  return skew_make(ring, {c});
}

// c X^k.
template <class Ring>
SkewOf<Ring> skew_monomial(const Ring& ring, std::size_t k,
                           const typename Ring::Elem& c) {
  std::vector<typename Ring::Elem> v(k + 1, ring.zero());
  v[k] = c;
  return skew_make(ring, std::move(v));
}

template <class Ring>
typename Ring::Elem skew_coeff(const Ring& ring, const SkewOf<Ring>& a, long i) {
  if (i < 0 || i > a.degree()) return ring.zero();
  return a.coeffs[static_cast<std::size_t>(i)];
}

template <class Ring>
const typename Ring::Elem& skew_lc(const SkewOf<Ring>& a) {
  return a.coeffs.back();
}

template <class Ring>
SkewOf<Ring> skew_add(const Ring& ring, const SkewOf<Ring>& a, const SkewOf<Ring>& b) {
  const auto& longer = a.coeffs.size() >= b.coeffs.size() ? a : b;
  const auto& shorter = a.coeffs.size() >= b.coeffs.size() ? b : a;
  SkewOf<Ring> out = longer;
  for (std::size_t i = 0; i < shorter.coeffs.size(); ++i) {
    out.coeffs[i] = ring.add(out.coeffs[i], shorter.coeffs[i]);
  }
  skew_trim(ring, out);
  return out;
}

template <class Ring>
SkewOf<Ring> skew_neg(const Ring& ring, SkewOf<Ring> a) {
  for (auto& c : a.coeffs) c = ring.neg(c);
  return a;
}

template <class Ring>
SkewOf<Ring> skew_sub(const Ring& ring, const SkewOf<Ring>& a, const SkewOf<Ring>& b) {
  return skew_add(ring, a, skew_neg(ring, b));
}

// Left scalar multiple c A.
template <class Ring>
SkewOf<Ring> skew_scale(const Ring& ring, const typename Ring::Elem& c,
                        const SkewOf<Ring>& a) {
  SkewOf<Ring> out = a;
  for (auto& v : out.coeffs) v = ring.mul(c, v);
  skew_trim(ring, out);
  return out;
}

// Right scalar multiple A c = sum a_i sigma^i(c) X^i.
template <class Ring>
SkewOf<Ring> skew_scale_right(const Ring& ring, const SkewOf<Ring>& a,
                              const typename Ring::Elem& c) {
  SkewOf<Ring> out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = ring.mul(out.coeffs[i], ring.sigma(c, static_cast<long long>(i)));
  }
  skew_trim(ring, out);
  return out;
}

// A X^k.
template <class Ring>
SkewOf<Ring> skew_shift(const Ring& ring, const SkewOf<Ring>& a, std::size_t k) {
  if (a.is_zero()) return a;
  SkewOf<Ring> out;
  out.coeffs.assign(k, ring.zero());
  out.coeffs.insert(out.coeffs.end(), a.coeffs.begin(), a.coeffs.end());
  return out;
}

// A quo X^k (drop the k lowest coefficients).
template <class Ring>
SkewOf<Ring> skew_quo_xk(const Ring&, const SkewOf<Ring>& a, std::size_t k) {
  if (a.coeffs.size() <= k) return {};
  return SkewOf<Ring>{std::vector<typename Ring::Elem>(a.coeffs.begin() + k, a.coeffs.end())};
}

// A rem X^k.
template <class Ring>
SkewOf<Ring> skew_low(const Ring& ring, const SkewOf<Ring>& a, std::size_t k) {
  SkewOf<Ring> out;
  out.coeffs.assign(a.coeffs.begin(),
                    a.coeffs.begin() + static_cast<long>(std::min(k, a.coeffs.size())));
  skew_trim(ring, out);
  return out;
}

// Applies sigma^k to every coefficient: X^k A = sigma^k(A) X^k.
template <class Ring>
SkewOf<Ring> skew_twist(const Ring& ring, const SkewOf<Ring>& a, long long k) {
  SkewOf<Ring> out = a;
  for (auto& c : out.coeffs) c = ring.sigma(c, k);
  return out;
}

// Schoolbook product sum_{i,j} a_i sigma^i(b_j) X^{i+j}.
template <class Ring>
SkewOf<Ring> skew_mul_naive(const Ring& ring, const SkewOf<Ring>& a,
                            const SkewOf<Ring>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t r = ring.degree();
  const std::size_t na = a.coeffs.size(), nb = b.coeffs.size();
  std::vector<typename Ring::Elem> out(na + nb - 1, ring.zero());
  const std::size_t twists = std::min(na, r);
  for (std::size_t s = 0; s < twists; ++s) {
    std::vector<typename Ring::Elem> tb(nb);
    for (std::size_t j = 0; j < nb; ++j) tb[j] = ring.sigma(b.coeffs[j], static_cast<long long>(s));
    for (std::size_t i = s; i < na; i += r) {
      if (ring.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < nb; ++j) {
        out[i + j] = ring.add(out[i + j], ring.mul(a.coeffs[i], tb[j]));
      }
    }
  }
  SkewOf<Ring> res{std::move(out)};
  skew_trim(ring, res);
  return res;
}

// A(sigma)(v) = sum a_i sigma^i(v).
template <class Ring>
typename Ring::Elem skew_eval(const Ring& ring, const SkewOf<Ring>& a,
                              const typename Ring::Elem& v) {
  auto acc = ring.zero();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (ring.is_zero(a.coeffs[i])) continue;
    acc = ring.add(acc, ring.mul(a.coeffs[i], ring.sigma(v, static_cast<long long>(i))));
  }
  return acc;
}

// A mod (X^r - c) for c in the fixed ring; X^r - c is central, so the
// reduction is a fold of coefficients.
template <class Ring>
SkewOf<Ring> skew_reduce_binomial(const Ring& ring, const SkewOf<Ring>& a,
                                  const typename Ring::Elem& c) {
  const std::size_t r = ring.degree();
  if (a.coeffs.size() <= r) return a;
  std::vector<typename Ring::Elem> out(a.coeffs.begin(), a.coeffs.end());
  for (std::size_t i = out.size(); i-- > r;) {
    out[i - r] = ring.add(out[i - r], ring.mul(c, out[i]));
  }
  out.resize(r);
  SkewOf<Ring> res{std::move(out)};
  skew_trim(ring, res);
  return res;
}

template <class Ring>
SkewOf<Ring> skew_reduce_cyclic(const Ring& ring, const SkewOf<Ring>& a) {
  return skew_reduce_binomial(ring, a, ring.one());
}

// Matrix of v -> A(sigma)(v) on the working basis, after reduction modulo
// X^r - 1. Column j is A(sigma)(x^j).
template <class Ring>
Matrix<typename Ring::Scalar> operator_matrix_naive(const Ring& ring,
                                                    const SkewOf<Ring>& a) {
  const std::size_t r = ring.degree();
  const auto red = skew_reduce_cyclic(ring, a);
  Matrix<typename Ring::Scalar> m(r, r, ring.base().zero());
  for (std::size_t j = 0; j < r; ++j) {
    typename Ring::Elem e = ring.zero();
    e[j] = ring.base().one();
    const auto col = skew_eval(ring, red, e);
    for (std::size_t i = 0; i < r; ++i) m(i, j) = col[i];
  }
  return m;
}

// Right division A = Q B + R, deg R < deg B.
template <class Ring>
std::pair<SkewOf<Ring>, SkewOf<Ring>> rdiv_naive(const Ring& ring, const SkewOf<Ring>& a,
                                                 const SkewOf<Ring>& b) {
  if (b.is_zero()) throw DivisionByZeroError("rdiv: division by zero");
  const long db = b.degree();
  if (a.degree() < db) return {SkewOf<Ring>{}, a};
  const auto lcb = skew_lc<Ring>(b);
  // inverses of sigma^k(lc B) = sigma^k(lc B^{-1}).
  const auto lcb_inv = ring.inv(lcb);
  std::vector<typename Ring::Elem> q(static_cast<std::size_t>(a.degree() - db + 1), ring.zero());
  std::vector<typename Ring::Elem> rem = a.coeffs;
  for (long m = a.degree(); m >= db; --m) {
    const auto top = rem[static_cast<std::size_t>(m)];
    if (ring.is_zero(top)) continue;
    const long k = m - db;
    const auto c = ring.mul(top, ring.sigma(lcb_inv, k));
    q[static_cast<std::size_t>(k)] = c;
    for (long i = 0; i <= db; ++i) {
      const auto& bi = b.coeffs[static_cast<std::size_t>(i)];
      if (ring.is_zero(bi)) continue;
      auto& slot = rem[static_cast<std::size_t>(i + k)];
      slot = ring.sub(slot, ring.mul(c, ring.sigma(bi, k)));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  SkewOf<Ring> qq{std::move(q)}, rr{std::move(rem)};
  skew_trim(ring, qq);
  skew_trim(ring, rr);
  return {std::move(qq), std::move(rr)};
}

// Left division A = B Q + R, deg R < deg B.
template <class Ring>
std::pair<SkewOf<Ring>, SkewOf<Ring>> ldiv_naive(const Ring& ring, const SkewOf<Ring>& a,
                                                 const SkewOf<Ring>& b) {
  if (b.is_zero()) throw DivisionByZeroError("ldiv: division by zero");
  const long db = b.degree();
  if (a.degree() < db) return {SkewOf<Ring>{}, a};
  const auto lcb_inv = ring.inv(skew_lc<Ring>(b));
  std::vector<typename Ring::Elem> q(static_cast<std::size_t>(a.degree() - db + 1), ring.zero());
  std::vector<typename Ring::Elem> rem = a.coeffs;
  // B (c X^k) = sum b_i sigma^i(c) X^{i+k}.
  for (long m = a.degree(); m >= db; --m) {
    const auto top = rem[static_cast<std::size_t>(m)];
    if (ring.is_zero(top)) continue;
    const long k = m - db;
    const auto c = ring.sigma(ring.mul(lcb_inv, top), -db);
    q[static_cast<std::size_t>(k)] = c;
    for (long i = 0; i <= db; ++i) {
      const auto& bi = b.coeffs[static_cast<std::size_t>(i)];
      if (ring.is_zero(bi)) continue;
      auto& slot = rem[static_cast<std::size_t>(i + k)];
      slot = ring.sub(slot, ring.mul(bi, ring.sigma(c, i)));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  SkewOf<Ring> qq{std::move(q)}, rr{std::move(rem)};
  skew_trim(ring, qq);
  skew_trim(ring, rr);
  return {std::move(qq), std::move(rr)};
}

template <class Ring>
SkewOf<Ring> skew_monic(const Ring& ring, const SkewOf<Ring>& a) {
  if (a.is_zero()) return a;
  return skew_scale(ring, ring.inv(skew_lc<Ring>(a)), a);
}

template <class Ring>
struct GcdResult {
  SkewOf<Ring> g;  // monic right gcd
  SkewOf<Ring> u;  // g = u a + v b
  SkewOf<Ring> v;
};

// Extended right Euclid. Returns the monic right gcd with left Bezout
// cofactors, and the monic left lcm (zero if either input is zero).
template <class Ring>
std::pair<GcdResult<Ring>, SkewOf<Ring>> rgcd_llcm_naive(const Ring& ring,
                                                         const SkewOf<Ring>& a,
                                                         const SkewOf<Ring>& b) {
  if (a.is_zero() && b.is_zero()) throw UsageError("rgcd: both inputs are zero");
  using P = SkewOf<Ring>;
  P r0 = a, r1 = b;
  P u0 = skew_constant(ring, ring.one()), u1{};
  P v0{}, v1 = skew_constant(ring, ring.one());
  while (!r1.is_zero()) {
    auto [q, r2] = rdiv_naive(ring, r0, r1);
    P u2 = skew_sub(ring, u0, skew_mul_naive(ring, q, u1));
    P v2 = skew_sub(ring, v0, skew_mul_naive(ring, q, v1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const auto c = ring.inv(skew_lc<Ring>(r0));
  GcdResult<Ring> g{skew_scale(ring, c, r0), skew_scale(ring, c, u0),
                    skew_scale(ring, c, v0)};
  P lcm;
  if (!a.is_zero() && !b.is_zero()) lcm = skew_monic(ring, skew_mul_naive(ring, u1, a));
  return {std::move(g), std::move(lcm)};
}

template <class Ring>
GcdResult<Ring> rgcd_naive(const Ring& ring, const SkewOf<Ring>& a, const SkewOf<Ring>& b) {
  return rgcd_llcm_naive(ring, a, b).first;
}

template <class Ring>
SkewOf<Ring> llcm_naive(const Ring& ring, const SkewOf<Ring>& a, const SkewOf<Ring>& b) {
  return rgcd_llcm_naive(ring, a, b).second;
}

}  // namespace skew
