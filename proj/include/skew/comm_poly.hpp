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
#include <optional>
#include <utility>
#include <vector>

#include "skew/errors.hpp"
#include "skew/matrix.hpp"

namespace skew {

// Degree reported for the zero polynomial. It compares below every real
// degree, which is all the algorithms rely on.
inline constexpr int kZeroDegree = -1;

// Ordinary polynomial in a commutative variable T, constant term first.
// Canonical form has no trailing zero coefficients.
template <class Elem>
struct CommPoly {
  std::vector<Elem> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const CommPoly&, const CommPoly&) = default;
};

namespace comm {

inline constexpr std::size_t kKaratsubaThreshold = 32;

template <RingLike R>
void trim(const R& ring, CommPoly<typename R::Elem>& p) {
  while (!p.coeffs.empty() && ring.is_zero(p.coeffs.back())) p.coeffs.pop_back();
}

template <RingLike R>
CommPoly<typename R::Elem> make(const R& ring,
                                std::vector<typename R::Elem> coeffs) {
  CommPoly<typename R::Elem> p{std::move(coeffs)};
  trim(ring, p);
  return p;
}

template <RingLike R>
CommPoly<typename R::Elem> constant(const R& ring, const typename R::Elem& c) {
  return make(ring, {c});
}

// T^k.
template <RingLike R>
CommPoly<typename R::Elem> monomial(const R& ring, std::size_t k,
                                    const typename R::Elem& c) {
  std::vector<typename R::Elem> v(k + 1, ring.zero());
  v[k] = c;
  return make(ring, std::move(v));
}

template <RingLike R>
typename R::Elem coeff(const R& ring, const CommPoly<typename R::Elem>& p,
                       int i) {
  if (i < 0 || i > p.degree()) return ring.zero();
  return p.coeffs[static_cast<std::size_t>(i)];
}

template <RingLike R>
bool equal(const R& ring, const CommPoly<typename R::Elem>& a,
           const CommPoly<typename R::Elem>& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (!ring.equal(a.coeffs[i], b.coeffs[i])) return false;
  }
  return true;
}

template <RingLike R>
CommPoly<typename R::Elem> add(const R& ring, const CommPoly<typename R::Elem>& a,
                               const CommPoly<typename R::Elem>& b) {
  const auto& big = a.coeffs.size() >= b.coeffs.size() ? a : b;
  const auto& small = a.coeffs.size() >= b.coeffs.size() ? b : a;
  CommPoly<typename R::Elem> out = big;
  for (std::size_t i = 0; i < small.coeffs.size(); ++i) {
    out.coeffs[i] = ring.add(out.coeffs[i], small.coeffs[i]);
  }
  trim(ring, out);
  return out;
}

template <RingLike R>
CommPoly<typename R::Elem> neg(const R& ring, CommPoly<typename R::Elem> a) {
  for (auto& c : a.coeffs) c = ring.neg(c);
  return a;
}

template <RingLike R>
CommPoly<typename R::Elem> sub(const R& ring, const CommPoly<typename R::Elem>& a,
                               const CommPoly<typename R::Elem>& b) {
  CommPoly<typename R::Elem> out = a;
  if (out.coeffs.size() < b.coeffs.size()) {
    out.coeffs.resize(b.coeffs.size(), ring.zero());
  }
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
    out.coeffs[i] = ring.sub(out.coeffs[i], b.coeffs[i]);
  }
  trim(ring, out);
  return out;
}

template <RingLike R>
CommPoly<typename R::Elem> scale(const R& ring, const typename R::Elem& c,
                                 const CommPoly<typename R::Elem>& a) {
  CommPoly<typename R::Elem> out = a;
  for (auto& v : out.coeffs) v = ring.mul(c, v);
  trim(ring, out);
  return out;
}

// Multiplies by T^k.
template <RingLike R>
CommPoly<typename R::Elem> shift(const R& ring,
                                 const CommPoly<typename R::Elem>& a,
                                 std::size_t k) {
  if (a.is_zero()) return a;
  CommPoly<typename R::Elem> out;
  out.coeffs.assign(k, ring.zero());
  out.coeffs.insert(out.coeffs.end(), a.coeffs.begin(), a.coeffs.end());
  return out;
}

// a quo T^k.
template <RingLike R>
CommPoly<typename R::Elem> quo_tk(const R&, const CommPoly<typename R::Elem>& a,
                                  std::size_t k) {
  if (a.coeffs.size() <= k) return {};
  return {std::vector<typename R::Elem>(a.coeffs.begin() + k, a.coeffs.end())};
}

// a mod T^k.
template <RingLike R>
CommPoly<typename R::Elem> low(const R& ring, const CommPoly<typename R::Elem>& a,
                               std::size_t k) {
  CommPoly<typename R::Elem> out;
  out.coeffs.assign(a.coeffs.begin(),
                    a.coeffs.begin() + std::min(k, a.coeffs.size()));
  trim(ring, out);
  return out;
}

namespace detail {

template <RingLike R>
void mul_schoolbook(const R& ring, const typename R::Elem* a, std::size_t na,
                    const typename R::Elem* b, std::size_t nb,
                    typename R::Elem* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
    }
  }
}

// out[0 .. 2n-1) += a[0..n) * b[0..n).
template <RingLike R>
void mul_karatsuba(const R& ring, const typename R::Elem* a,
                   const typename R::Elem* b, std::size_t n,
                   typename R::Elem* out) {
  if (n < kKaratsubaThreshold) {
    mul_schoolbook(ring, a, n, b, n, out);
    return;
  }
  const std::size_t h = n / 2, hi = n - h;
  using E = typename R::Elem;
  std::vector<E> z0(2 * h, ring.zero()), z2(2 * hi, ring.zero()),
      z1(2 * hi, ring.zero());
  mul_karatsuba(ring, a, b, h, z0.data());
  mul_karatsuba(ring, a + h, b + h, hi, z2.data());
  std::vector<E> sa(hi, ring.zero()), sb(hi, ring.zero());
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = i < h ? ring.add(a[i], a[h + i]) : a[h + i];
    sb[i] = i < h ? ring.add(b[i], b[h + i]) : b[h + i];
  }
  mul_karatsuba(ring, sa.data(), sb.data(), hi, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = ring.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = ring.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = ring.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) {
    out[h + i] = ring.add(out[h + i], z1[i]);
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    out[2 * h + i] = ring.add(out[2 * h + i], z2[i]);
  }
}

}  // namespace detail

template <RingLike R>
CommPoly<typename R::Elem> mul(const R& ring, const CommPoly<typename R::Elem>& a,
                               const CommPoly<typename R::Elem>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t na = a.coeffs.size(), nb = b.coeffs.size();
  CommPoly<typename R::Elem> out;
  out.coeffs.assign(na + nb - 1, ring.zero());
  if (std::min(na, nb) < kKaratsubaThreshold) {
    detail::mul_schoolbook(ring, a.coeffs.data(), na, b.coeffs.data(), nb,
                           out.coeffs.data());
  } else {
    // Balanced pieces of the longer operand against the shorter one.
    const auto& lng = na >= nb ? a.coeffs : b.coeffs;
    std::vector<typename R::Elem> sht = na >= nb ? b.coeffs : a.coeffs;
    const std::size_t n = sht.size();
    std::vector<typename R::Elem> piece(n), prod(2 * n);
    for (std::size_t off = 0; off < lng.size(); off += n) {
      const std::size_t len = std::min(n, lng.size() - off);
      std::fill(piece.begin(), piece.end(), ring.zero());
      std::copy(lng.begin() + off, lng.begin() + off + len, piece.begin());
      std::fill(prod.begin(), prod.end(), ring.zero());
      detail::mul_karatsuba(ring, piece.data(), sht.data(), n, prod.data());
      for (std::size_t i = 0; i < prod.size() && off + i < out.coeffs.size();
           ++i) {
        out.coeffs[off + i] = ring.add(out.coeffs[off + i], prod[i]);
      }
    }
  }
  trim(ring, out);
  return out;
}

// Reduction modulo T^r - a (r >= 1).
template <RingLike R>
CommPoly<typename R::Elem> reduce_binomial(const R& ring,
                                           const CommPoly<typename R::Elem>& p,
                                           std::size_t r,
                                           const typename R::Elem& a) {
  if (p.coeffs.size() <= r) return p;
  std::vector<typename R::Elem> out(p.coeffs.begin(), p.coeffs.begin() + r);
  // Fold from the top so each T^{i} with i >= r becomes a * T^{i-r}.
  std::vector<typename R::Elem> work = p.coeffs;
  for (std::size_t i = work.size(); i-- > r;) {
    if (ring.is_zero(work[i])) continue;
    work[i - r] = ring.add(work[i - r], ring.mul(a, work[i]));
  }
  std::copy(work.begin(), work.begin() + r, out.begin());
  return make(ring, std::move(out));
}

template <RingLike R>
CommPoly<typename R::Elem> mulmod_binomial(const R& ring,
                                           const CommPoly<typename R::Elem>& x,
                                           const CommPoly<typename R::Elem>& y,
                                           std::size_t r,
                                           const typename R::Elem& a) {
  return reduce_binomial(ring, mul(ring, x, y), r, a);
}

// T^r - a.
template <RingLike R>
CommPoly<typename R::Elem> binomial(const R& ring, std::size_t r,
                                    const typename R::Elem& a) {
  std::vector<typename R::Elem> v(r + 1, ring.zero());
  v[0] = ring.neg(a);
  v[r] = ring.one();
  return make(ring, std::move(v));
}

// Euclidean division. The leading coefficient of b must be a unit; over a
// non-field ring a zero-divisor leading coefficient raises
// NotInvertibleError.
template <RingLike R>
std::pair<CommPoly<typename R::Elem>, CommPoly<typename R::Elem>> divrem(
    const R& ring, const CommPoly<typename R::Elem>& a,
    const CommPoly<typename R::Elem>& b) {
  if (b.is_zero()) throw DivisionByZeroError("comm::divrem: zero divisor");
  if (a.degree() < b.degree()) return {{}, a};
  const auto inv_opt = ring.try_inv(b.coeffs.back());
  if (!inv_opt) {
    throw NotInvertibleError("comm::divrem: leading coefficient is not a unit");
  }
  const auto lc_inv = *inv_opt;
  const int db = b.degree();
  std::vector<typename R::Elem> rem = a.coeffs;
  std::vector<typename R::Elem> quo(static_cast<std::size_t>(a.degree() - db + 1),
                                    ring.zero());
  for (int i = a.degree(); i >= db; --i) {
    const auto& top = rem[static_cast<std::size_t>(i)];
    if (ring.is_zero(top)) continue;
    const auto q = ring.mul(top, lc_inv);
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = ring.sub(slot, ring.mul(q, b.coeffs[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {make(ring, std::move(quo)), make(ring, std::move(rem))};
}

template <RingLike R>
CommPoly<typename R::Elem> rem(const R& ring, const CommPoly<typename R::Elem>& a,
                               const CommPoly<typename R::Elem>& b) {
  return divrem(ring, a, b).second;
}

template <RingLike R>
CommPoly<typename R::Elem> mulmod(const R& ring, const CommPoly<typename R::Elem>& a,
                                  const CommPoly<typename R::Elem>& b,
                                  const CommPoly<typename R::Elem>& m) {
  return rem(ring, mul(ring, a, b), m);
}

template <RingLike R>
CommPoly<typename R::Elem> monic(const R& ring, const CommPoly<typename R::Elem>& a) {
  if (a.is_zero()) return a;
  const auto inv = ring.try_inv(a.coeffs.back());
  if (!inv) throw NotInvertibleError("comm::monic: leading coefficient");
  return scale(ring, *inv, a);
}

// Monic gcd over a field.
template <RingLike R>
CommPoly<typename R::Elem> gcd(const R& ring, CommPoly<typename R::Elem> a,
                               CommPoly<typename R::Elem> b) {
  while (!b.is_zero()) {
    auto r = rem(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ring, a);
}

// Inverse of a modulo m by the extended Euclidean algorithm. Returns nullopt
// when a is not a unit mod m, or when the remainder sequence meets a
// non-unit leading coefficient (possible only over non-field rings).
template <RingLike R>
std::optional<CommPoly<typename R::Elem>> inverse_mod(
    const R& ring, const CommPoly<typename R::Elem>& a,
    const CommPoly<typename R::Elem>& m) {
  using P = CommPoly<typename R::Elem>;
  P r0 = m, r1 = rem(ring, a, m);
  P v0{}, v1 = constant(ring, ring.one());
  try {
    while (r1.degree() > 0) {
      auto [q, r2] = divrem(ring, r0, r1);
      P v2 = sub(ring, v0, mul(ring, q, v1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      v0 = std::move(v1);
      v1 = std::move(v2);
    }
  } catch (const NotInvertibleError&) {
    return std::nullopt;
  }
  if (r1.is_zero()) return std::nullopt;
  const auto inv = ring.try_inv(r1.coeffs[0]);
  if (!inv) return std::nullopt;
  return rem(ring, scale(ring, *inv, v1), m);
}

template <RingLike R>
typename R::Elem eval(const R& ring, const CommPoly<typename R::Elem>& p,
                      const typename R::Elem& x) {
  auto acc = ring.zero();
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    acc = ring.add(ring.mul(acc, x), p.coeffs[i]);
  }
  return acc;
}

// base^e mod m by square and multiply; e is a machine word.
template <RingLike R>
CommPoly<typename R::Elem> powmod(const R& ring, CommPoly<typename R::Elem> base,
                                  unsigned long long e,
                                  const CommPoly<typename R::Elem>& m) {
  auto result = rem(ring, constant(ring, ring.one()), m);
  base = rem(ring, base, m);
  while (e != 0) {
    if ((e & 1) != 0) result = mulmod(ring, result, base, m);
    e >>= 1;
    if (e != 0) base = mulmod(ring, base, base, m);
  }
  return result;
}

}  // namespace comm
}  // namespace skew
