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

#ifndef SKEW_IO_HPP_
#define SKEW_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "skew/field_tower.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

// Text formats. Whitespace is allowed between tokens.
//   field:       p=<prime>;f=<c_0>,...,<c_r>     (constant first, c_r = 1)
//   element:     [<k_0>,...,<k_{r-1}>]            (short lists are zero-padded)
//   polynomial:  [<element>,<element>,...]        ([] is zero)
struct FieldSpec {
  u64 p = 0;
  std::vector<u64> f;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

FieldSpec parse_field(std::string_view text);
std::string format_field(const FieldSpec& spec);

GfExt::Elem parse_element(const GfExt& L, std::string_view text);
std::string format_element(const GfExt& L, const GfExt::Elem& a);

SkewOf<GfExt> parse_poly(const GfExt& L, std::string_view text);
std::string format_poly(const GfExt& L, const SkewOf<GfExt>& a);

// A word is a fixed-length list of elements in the polynomial syntax, not trimmed.
std::vector<GfExt::Elem> parse_word(const GfExt& L, std::string_view text);
std::string format_word(const GfExt& L, const std::vector<GfExt::Elem>& w);

// Reads a whole file; throws UsageError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace skew

#endif  // SKEW_IO_HPP_
