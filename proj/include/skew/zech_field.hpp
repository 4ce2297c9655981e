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
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "skew/prime_field.hpp"

namespace skew {

// F_{p^n} = F_p[y]/(g) with elements stored as discrete logarithms to a
// primitive element. Multiplication is an index addition and addition goes
// through a Zech logarithm table, so every operation is O(1).
//
// Element encoding: 0 is zero, k + 1 is alpha^k for 0 <= k < q - 1.
class ZechField {
 public:
  using Elem = std::uint32_t;

  // Largest field order for which tables are built.
  static constexpr u64 kMaxOrder = u64{1} << 22;

  // g must be monic irreducible over F_p (constant term first).
  ZechField(PrimeField fp, std::vector<u64> modulus);

  const PrimeField& prime_field() const { return fp_; }
  std::size_t degree() const { return n_; }
  u64 order() const { return q_; }
  const std::vector<u64>& modulus() const { return tables_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    u64 s = u64{a} - 1 + (u64{b} - 1);
    if (s >= q_ - 1) s -= q_ - 1;
    return static_cast<Elem>(s + 1);
  }
  Elem add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const u64 i = a - 1, j = b - 1;
    const u64 d = j >= i ? j - i : j + (q_ - 1) - i;
    const Elem z = tables_->zech[d];
    if (z == 0) return 0;
    u64 s = i + (z - 1);
    if (s >= q_ - 1) s -= q_ - 1;
    return static_cast<Elem>(s + 1);
  }
  Elem neg(Elem a) const {
    if (a == 0 || fp_.modulus() == 2) return a;
    u64 s = u64{a} - 1 + (q_ - 1) / 2;
    if (s >= q_ - 1) s -= q_ - 1;
    return static_cast<Elem>(s + 1);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  std::optional<Elem> try_inv(Elem a) const {
    if (a == 0) return std::nullopt;
    return inv(a);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, u64 e) const;

  // Image of an F_p value.
  Elem from_u64(u64 v) const { return tables_->embed[v % fp_.modulus()]; }
  Elem scale(u64 s, Elem a) const { return mul(from_u64(s), a); }

  // Coordinates in the power basis 1, y, ..., y^{n-1}.
  std::vector<u64> coords(Elem a) const;
  Elem from_coords(std::span<const u64> c) const;
  // The class of y.
  Elem generator() const;

  friend bool operator==(const ZechField& a, const ZechField& b) {
    return a.tables_ == b.tables_ ||
           (a.fp_ == b.fp_ && a.modulus() == b.modulus());
  }

 private:
  struct Tables {
    std::vector<u64> modulus;
    std::vector<std::uint32_t> exp;   // packed coordinates of alpha^k
    std::vector<Elem> log;            // packed coordinates -> element
    std::vector<Elem> zech;           // d -> element 1 + alpha^d
    std::vector<Elem> embed;          // F_p -> element
  };

  u64 pack(std::span<const u64> c) const;

  PrimeField fp_;
  std::size_t n_;
  u64 q_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace skew
