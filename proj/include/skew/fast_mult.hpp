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
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "skew/comm_poly.hpp"
#include "skew/eval_interp.hpp"
#include "skew/field_tower.hpp"
#include "skew/mod_mult.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

using GfPoly = SkewOf<GfExt>;

// Least n with p^n >= max(64 n, 8 r), (8d/(nr)) (2d/(nr) + 1) <= n p^n and
// 4 t^2 <= n p^n for the resulting t; d bounds the operand degrees.
std::size_t choose_lift_degree(u64 p, std::size_t r, std::size_t d);

// Number of moduli Z_i(X^r), deg Z_i = n, needed for a product of degree
// <= 2d: t = ceil((2d + 1) / (n r)), at least 1.
std::size_t modulus_count(std::size_t n, std::size_t r, std::size_t d);

// Norms a_i = N(lambda'_i) all generate K' and have pairwise distinct
// minimal polynomials over F_p.
bool norms_admissible(const LiftedTower& lift, const std::vector<LiftedRing::Elem>& lambdas);

struct ModulusSet {
  std::size_t n = 0;
  std::vector<ModZContext> moduli;
  std::size_t batch_attempts = 0;  // batches drawn, including the accepted one
};

// Draws t = modulus_count(n, r, d) elements of L' until the batch is
// admissible and every per-modulus context can be built; at most 64
// batches, then ConstructionError.
ModulusSet sample_moduli(const LiftedTower& lift, std::size_t d, std::mt19937_64& rng);

// Unique P of degree < sum deg Z_i(X^r) with P = residues[i] mod Z_i(X^r),
// solved strand by strand in L[T] with the idempotents of F_p[T]/(prod Z_i).
GfPoly skew_crt_reconstruct(const GfExt& L, const std::vector<GfPoly>& residues,
                            const std::vector<CommPoly<u64>>& moduli);

struct MultConfig {
  std::size_t naive_max_degree = 8;  // d = deg A1 + deg A2 at or below: naive
  bool strict_verify = false;        // compare mult_crt with the naive product
  std::uint64_t seed = 0x5eed5eedULL;
};

struct MultStats {
  std::size_t crt_calls = 0;
  std::size_t crt_retries = 0;      // extra rounds after a failed check
  std::size_t batch_attempts = 0;   // modulus batches drawn in total
  std::size_t last_lift_degree = 0;
  std::size_t last_modulus_count = 0;
  std::size_t lift_bumps = 0;       // n raised after sample_moduli gave up
};

// Multiplication engine bound to one tower: caches the normal-basis context
// and the lifted towers, owns the generator used by mult_crt.
class SkewMultiplier {
 public:
  explicit SkewMultiplier(FieldTower tower, MultConfig config = {});

  const FieldTower& tower() const { return tower_; }
  const GfExt& L() const { return tower_.L(); }
  const NormalBasisContext<GfExt>& normal_context() const { return nctx_; }
  const MultConfig& config() const { return config_; }
  const MultStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }
  std::mt19937_64& rng() { return rng_; }

  // K' of degree n, built once per n.
  const LiftedTower& lift(std::size_t n);

  GfPoly naive(const GfPoly& a1, const GfPoly& a2) const;
  GfPoly cyclic(const GfPoly& a1, const GfPoly& a2) const;
  GfPoly crt(const GfPoly& a1, const GfPoly& a2);
  GfPoly small_degree(const GfPoly& a1, const GfPoly& a2) const;
  GfPoly multiply(const GfPoly& a1, const GfPoly& a2);

 private:
  FieldTower tower_;
  MultConfig config_;
  NormalBasisContext<GfExt> nctx_;
  std::mt19937_64 rng_;
  std::map<std::size_t, std::unique_ptr<LiftedTower>> lifts_;
  MultStats stats_;
};

inline GfPoly mult_crt(SkewMultiplier& m, const GfPoly& a1, const GfPoly& a2) {
  return m.crt(a1, a2);
}
inline GfPoly mult_small_degree(const SkewMultiplier& m, const GfPoly& a1, const GfPoly& a2) {
  return m.small_degree(a1, a2);
}
inline GfPoly multiply(SkewMultiplier& m, const GfPoly& a1, const GfPoly& a2) {
  return m.multiply(a1, a2);
}

}  // namespace skew
