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

#ifndef SKEW_TOOLS_BENCH_HPP_
#define SKEW_TOOLS_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace skew::tools {

struct BenchOptions {
  std::uint64_t p = 2;
  std::vector<std::size_t> rs{16};
  std::vector<std::size_t> degrees{16, 32, 64, 128};
  std::vector<std::string> modes{"naive", "crt"};
  std::size_t reps = 5;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::uint64_t p;
  std::size_t r;
  std::size_t d;
  std::string mode;
  std::uint64_t nanos;  // median over reps, after one discarded warm-up
  std::size_t crt_retries;
};

// Both operands have degree d. Throws UsageError for an unknown mode or a
// mode that does not apply (small needs 2d < r).
std::vector<BenchRow> run_bench(const BenchOptions& opts);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

// Least-squares slope of log(nanos) against log(d), per (p, r, mode).
std::map<std::string, double> loglog_slopes(const std::vector<BenchRow>& rows);

}  // namespace skew::tools

#endif  // SKEW_TOOLS_BENCH_HPP_
