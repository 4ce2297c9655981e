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
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "skew/comm_poly.hpp"
#include "skew/errors.hpp"
#include "skew/matrix.hpp"
#include "skew/prime_field.hpp"

namespace skew {

// Matrices of sigma^k, 0 <= k < r, in the power basis of F_p[x]/(f). They
// have F_p entries and are shared between L and every scalar extension of
// it.
struct FrobeniusPowers {
  std::vector<Matrix<u64>> powers;
};

// Quotient ring Base[x]/(f) for a monic f with F_p coefficients, together
// with the automorphism sigma = id (x) (x -> x^p).
//
// With Base = F_p and f irreducible this is the field L = F_{p^r}. With Base
// = K' = F_{p^n} it is L' = K' (x) L, which is in general only a product of
// fields: try_inv may then fail on nonzero elements.
template <class Base>
class ExtRing {
 public:
  using BaseField = Base;
  using Scalar = typename Base::Elem;
  using Elem = std::vector<Scalar>;

  ExtRing(Base base, PrimeField fp, std::vector<u64> f,
          std::shared_ptr<const FrobeniusPowers> frobenius)
      : base_(std::move(base)),
        fp_(fp),
        f_(std::move(f)),
        r_(f_.size() - 1),
        frobenius_(std::move(frobenius)) {
    if (f_.size() < 2 || f_.back() != 1) {
      throw UsageError("ExtRing: modulus must be monic of degree >= 1");
    }
    if (!frobenius_ || frobenius_->powers.size() != r_) {
      throw UsageError("ExtRing: Frobenius table does not match the degree");
    }
    std::vector<Scalar> fb(f_.size());
    for (std::size_t i = 0; i < f_.size(); ++i) fb[i] = base_.from_u64(f_[i]);
    modulus_ = comm::make(base_, std::move(fb));
  }

  const Base& base() const { return base_; }
  const PrimeField& prime_field() const { return fp_; }
  std::size_t degree() const { return r_; }
  const std::vector<u64>& modulus() const { return f_; }
  const FrobeniusPowers& frobenius() const { return *frobenius_; }
  const std::shared_ptr<const FrobeniusPowers>& frobenius_ptr() const {
    return frobenius_;
  }

  Elem zero() const { return Elem(r_, base_.zero()); }
  Elem one() const { return from_base(base_.one()); }
  Elem from_base(const Scalar& c) const {
    Elem e(r_, base_.zero());
    e[0] = c;
    return e;
  }
  Elem from_u64(u64 v) const { return from_base(base_.from_u64(v)); }
  // The class of x.
  Elem generator() const {
    Elem e(r_, base_.zero());
    if (r_ == 1) {
      e[0] = base_.neg(base_.from_u64(f_[0]));
    } else {
      e[1] = base_.one();
    }
    return e;
  }

  void check(const Elem& a) const {
    if (a.size() != r_) {
      throw UsageError("ExtRing: element does not belong to this ring");
    }
  }

  bool is_zero(const Elem& a) const {
    for (const auto& c : a) {
      if (!base_.is_zero(c)) return false;
    }
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const {
    for (std::size_t i = 0; i < r_; ++i) {
      if (!base_.equal(a[i], b[i])) return false;
    }
    return true;
  }
  // True when the element lies in the base (all higher coordinates vanish).
  bool is_scalar(const Elem& a) const {
    for (std::size_t i = 1; i < r_; ++i) {
      if (!base_.is_zero(a[i])) return false;
    }
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem out(r_);
    for (std::size_t i = 0; i < r_; ++i) out[i] = base_.add(a[i], b[i]);
    return out;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem out(r_);
    for (std::size_t i = 0; i < r_; ++i) out[i] = base_.sub(a[i], b[i]);
    return out;
  }
  Elem neg(const Elem& a) const {
    Elem out(r_);
    for (std::size_t i = 0; i < r_; ++i) out[i] = base_.neg(a[i]);
    return out;
  }
  Elem scale(u64 s, const Elem& a) const {
    Elem out(r_);
    for (std::size_t i = 0; i < r_; ++i) out[i] = base_.scale(s, a[i]);
    return out;
  }
  Elem mul_base(const Scalar& c, const Elem& a) const {
    Elem out(r_);
    for (std::size_t i = 0; i < r_; ++i) out[i] = base_.mul(c, a[i]);
    return out;
  }

  // Schoolbook product followed by reduction modulo f; Karatsuba for large r.
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<Scalar> prod;
    if (r_ >= comm::kKaratsubaThreshold) {
      auto p = comm::mul(base_, CommPoly<Scalar>{a}, CommPoly<Scalar>{b});
      prod = std::move(p.coeffs);
      prod.resize(2 * r_ - 1, base_.zero());
    } else {
      prod.assign(2 * r_ - 1, base_.zero());
      for (std::size_t i = 0; i < r_; ++i) {
        if (base_.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < r_; ++j) {
          if (base_.is_zero(b[j])) continue;
          prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
        }
      }
    }
    for (std::size_t i = prod.size(); i-- > r_;) {
      const Scalar c = prod[i];
      if (base_.is_zero(c)) continue;
      for (std::size_t j = 0; j < r_; ++j) {
        if (f_[j] == 0) continue;
        prod[i - r_ + j] = base_.sub(prod[i - r_ + j], base_.scale(f_[j], c));
      }
    }
    prod.resize(r_);
    return prod;
  }

  Elem pow(Elem a, unsigned long long e) const {
    Elem result = one();
    while (e != 0) {
      if ((e & 1) != 0) result = mul(result, a);
      e >>= 1;
      if (e != 0) a = mul(a, a);
    }
    return result;
  }

  std::optional<Elem> try_inv(const Elem& a) const {
    auto inv = comm::inverse_mod(base_, CommPoly<Scalar>{trimmed(a)}, modulus_);
    if (!inv) return std::nullopt;
    Elem out = inv->coeffs;
    out.resize(r_, base_.zero());
    return out;
  }
  Elem inv(const Elem& a) const {
    auto out = try_inv(a);
    if (!out) {
      throw NotInvertibleError(is_zero(a) ? "ExtRing: inverse of zero"
                                          : "ExtRing: element is a zero divisor");
    }
    return std::move(*out);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  // sigma^k(a); k may be negative and is reduced modulo r.
  Elem sigma(const Elem& a, long long k = 1) const {
    const long long r = static_cast<long long>(r_);
    const auto idx = static_cast<std::size_t>(((k % r) + r) % r);
    if (idx == 0) return a;
    const Matrix<u64>& m = frobenius_->powers[idx];
    Elem out(r_, base_.zero());
    for (std::size_t j = 0; j < r_; ++j) {
      if (base_.is_zero(a[j])) continue;
      for (std::size_t i = 0; i < r_; ++i) {
        const u64 s = m(i, j);
        if (s != 0) out[i] = base_.add(out[i], base_.scale(s, a[j]));
      }
    }
    return out;
  }

  template <class Rng>
  Elem random(Rng& rng) const {
    Elem out(r_);
    for (auto& c : out) c = random_scalar(rng);
    return out;
  }

  template <class Rng>
  Scalar random_scalar(Rng& rng) const {
    std::uniform_int_distribution<u64> digit(0, fp_.modulus() - 1);
    if constexpr (requires(const Base& b) { b.from_coords(std::span<const u64>{}); }) {
      std::vector<u64> c(base_.degree());
      for (auto& v : c) v = digit(rng);
      return base_.from_coords(c);
    } else {
      return base_.from_u64(digit(rng));
    }
  }

 private:
  std::vector<Scalar> trimmed(const Elem& a) const {
    std::vector<Scalar> v = a;
    while (!v.empty() && base_.is_zero(v.back())) v.pop_back();
    return v;
  }

  Base base_;
  PrimeField fp_;
  std::vector<u64> f_;
  std::size_t r_;
  std::shared_ptr<const FrobeniusPowers> frobenius_;
  CommPoly<Scalar> modulus_;
};

// Computes the powers of x -> x^p on F_p[x]/(f).
std::shared_ptr<const FrobeniusPowers> compute_frobenius_powers(
    const PrimeField& fp, const std::vector<u64>& f);

}  // namespace skew
