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

#include <cstdint>
#include <optional>

namespace skew {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime_u64(u64 n);

// The prime field F_p for a word-size prime p. Elements are residues in
// [0, p) stored as plain integers.
class PrimeField {
 public:
  using Elem = u64;

  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }
  u64 characteristic() const { return p_; }
  // Number of elements.
  u64 order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_u64(u64 v) const { return v % p_; }
  Elem from_int(std::int64_t v) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<u128>(a) * b) % p_);
  }
  // Multiplication by an F_p scalar; identical to mul here.
  Elem scale(u64 s, Elem a) const { return mul(s, a); }

  Elem pow(Elem a, u64 e) const;
  std::optional<Elem> try_inv(Elem a) const;
  // Throws DivisionByZeroError on zero.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  u64 p_;
};

}  // namespace skew
