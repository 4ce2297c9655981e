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

#ifndef SKEW_TOOLS_SELFTEST_HPP_
#define SKEW_TOOLS_SELFTEST_HPP_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

namespace skew::tools {

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  std::size_t r_min = 1;
  std::size_t r_max = 8;
  std::size_t max_degree = 64;
  std::size_t trials = 2;
  bool inject_fault = false;  // perturbs the naive product oracle
};

struct SelftestSummary {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

// One JSON object per line and per check: suite, check, p, r, trial, verdict
// (and detail on failure).
SelftestSummary run_selftest(const SelftestOptions& opts, std::ostream& jsonl);

}  // namespace skew::tools

#endif  // SKEW_TOOLS_SELFTEST_HPP_
