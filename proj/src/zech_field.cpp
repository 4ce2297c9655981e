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

#include "skew/zech_field.hpp"

#include <string>

#include "skew/comm_poly.hpp"
#include "skew/errors.hpp"

namespace skew {
namespace {

std::vector<u64> prime_factors(u64 m) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

ZechField::ZechField(PrimeField fp, std::vector<u64> modulus) : fp_(fp) {
  using P = CommPoly<u64>;
  const P g = comm::make(fp_, modulus);
  if (g.degree() < 1 || g.coeffs.back() != 1) {
    throw UsageError("ZechField: modulus must be monic of degree >= 1");
  }
  n_ = static_cast<std::size_t>(g.degree());
  q_ = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (q_ > kMaxOrder / fp_.modulus()) {
      throw UsageError("ZechField: field order exceeds table limit");
    }
    q_ *= fp_.modulus();
  }

  auto tables = std::make_shared<Tables>();
  tables->modulus = g.coeffs;

  auto to_poly = [&](u64 packed) {
    std::vector<u64> c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      c[i] = packed % fp_.modulus();
      packed /= fp_.modulus();
    }
    return comm::make(fp_, std::move(c));
  };
  auto to_packed = [&](const P& poly) {
    u64 v = 0;
    for (std::size_t i = poly.coeffs.size(); i-- > 0;) {
      v = v * fp_.modulus() + poly.coeffs[i];
    }
    return v;
  };

  // Smallest packed value generating the multiplicative group.
  const auto factors = prime_factors(q_ - 1);
  u64 alpha_packed = 0;
  for (u64 cand = 1; cand < q_; ++cand) {
    const P a = to_poly(cand);
    bool primitive = true;
    for (u64 l : factors) {
      const P t = comm::powmod(fp_, a, (q_ - 1) / l, g);
      if (t.degree() == 0 && t.coeffs[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (q_ == 2 || primitive) {
      alpha_packed = cand;
      break;
    }
  }
  if (alpha_packed == 0) {
    throw UsageError("ZechField: modulus is not irreducible");
  }

  tables->exp.resize(q_ - 1);
  tables->log.assign(q_, 0);
  const P alpha = to_poly(alpha_packed);
  P cur = comm::constant(fp_, fp_.one());
  for (u64 k = 0; k + 1 < q_; ++k) {
    const u64 packed = to_packed(cur);
    if (tables->log[packed] != 0) {
      throw UsageError("ZechField: modulus is not irreducible");
    }
    tables->exp[k] = static_cast<std::uint32_t>(packed);
    tables->log[packed] = static_cast<Elem>(k + 1);
    cur = comm::mulmod(fp_, cur, alpha, g);
  }

  // 1 + alpha^d, computed digitwise on packed coordinates.
  tables->zech.resize(q_ - 1);
  for (u64 d = 0; d + 1 < q_; ++d) {
    P s = comm::add(fp_, to_poly(tables->exp[d]), comm::constant(fp_, fp_.one()));
    tables->zech[d] = tables->log[to_packed(s)];
  }
  tables->embed.resize(fp_.modulus());
  for (u64 v = 0; v < fp_.modulus(); ++v) tables->embed[v] = tables->log[v];
  tables_ = std::move(tables);
}

ZechField::Elem ZechField::inv(Elem a) const {
  if (a == 0) throw DivisionByZeroError("ZechField: inverse of zero");
  const u64 k = a - 1;
  return static_cast<Elem>((k == 0 ? 0 : (q_ - 1) - k) + 1);
}

ZechField::Elem ZechField::pow(Elem a, u64 e) const {
  if (e == 0) return one();
  if (a == 0) return 0;
  const u64 order = q_ - 1;
  const u64 k = static_cast<u64>((static_cast<u128>(a - 1) * (e % order)) % order);
  return static_cast<Elem>(k + 1);
}

ZechField::Elem ZechField::generator() const {
  if (n_ == 1) return from_u64(fp_.neg(tables_->modulus[0]));
  return from_coords(std::vector<u64>{0, 1});
}

u64 ZechField::pack(std::span<const u64> c) const {
  u64 v = 0;
  for (std::size_t i = std::min(c.size(), n_); i-- > 0;) {
    v = v * fp_.modulus() + (c[i] % fp_.modulus());
  }
  return v;
}

std::vector<u64> ZechField::coords(Elem a) const {
  std::vector<u64> c(n_, 0);
  if (a == 0) return c;
  u64 packed = tables_->exp[a - 1];
  for (std::size_t i = 0; i < n_; ++i) {
    c[i] = packed % fp_.modulus();
    packed /= fp_.modulus();
  }
  return c;
}

ZechField::Elem ZechField::from_coords(std::span<const u64> c) const {
  if (c.size() > n_) {
    for (std::size_t i = n_; i < c.size(); ++i) {
      if (c[i] % fp_.modulus() != 0) {
        throw UsageError("ZechField: coordinate vector longer than degree");
      }
    }
  }
  return tables_->log[pack(c)];
}

}  // namespace skew
