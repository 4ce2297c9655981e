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

#ifndef SKEW_GABIDULIN_HPP_
#define SKEW_GABIDULIN_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "skew/fast_mult.hpp"
#include "skew/skew_arith.hpp"

namespace skew {

struct DecodeResult {
  bool ok = false;
  GfPoly message;
  std::size_t error_rank = 0;
  std::string failure;  // empty when ok
};

// Generalized Gabidulin code: messages of degree < k evaluated at n
// K-linearly independent points of L. Corrects rank errors up to (n-k)/2.
class GabidulinCode {
 public:
  GabidulinCode(SkewMultiplier& mult, std::vector<GfExt::Elem> points, std::size_t k);

  // Points b_0..b_{n-1} of the tower's normal basis.
  static GabidulinCode with_normal_basis(SkewMultiplier& mult, std::size_t n, std::size_t k);

  std::size_t n() const { return points_.size(); }
  std::size_t k() const { return k_; }
  std::size_t t_max() const { return (n() - k_) / 2; }
  const std::vector<GfExt::Elem>& points() const { return points_; }
  const GfExt& L() const { return mult_->L(); }

  std::vector<GfExt::Elem> encode(const GfPoly& msg) const;
  DecodeResult decode(const std::vector<GfExt::Elem>& received) const;

 private:
  SkewMultiplier* mult_;
  SkewArith<GfExt> arith_;
  std::vector<GfExt::Elem> points_;
  std::size_t k_;
  GfPoly vanishing_;
};

// Rank of a vector of L over K (rank of its coordinate matrix).
std::size_t rank_over_base(const GfExt& L, const std::vector<GfExt::Elem>& v);

// n entries spanning a random K-subspace of dimension exactly t.
std::vector<GfExt::Elem> random_rank_error(const GfExt& L, std::size_t n, std::size_t t,
                                           std::mt19937_64& rng);

}  // namespace skew

#endif  // SKEW_GABIDULIN_HPP_
