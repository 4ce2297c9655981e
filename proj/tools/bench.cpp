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

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "skew/errors.hpp"
#include "skew/fast_mult.hpp"

namespace skew::tools {
namespace {

GfPoly random_poly(const GfExt& L, std::size_t deg, std::mt19937_64& rng) {
  std::vector<GfExt::Elem> c(deg + 1);
  for (auto& v : c) v = L.random(rng);
  while (L.is_zero(c.back())) c.back() = L.random(rng);
  return skew_make(L, std::move(c));
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  for (const auto& m : opts.modes) {
    if (m != "naive" && m != "cyclic" && m != "crt" && m != "small" && m != "auto") {
      throw UsageError("bench: unknown mode " + m);
    }
  }
  if (opts.reps == 0) throw UsageError("bench: reps must be positive");
  std::vector<BenchRow> rows;
  for (std::size_t r : opts.rs) {
    std::mt19937_64 rng(opts.seed ^ (opts.p << 32) ^ r);
    MultConfig cfg;
    cfg.seed = rng();
    SkewMultiplier mult(FieldTower::random(PrimeField(opts.p), r, rng), cfg);
    const auto& L = mult.L();
    for (std::size_t d : opts.degrees) {
      const auto a = random_poly(L, d, rng);
      const auto b = random_poly(L, d, rng);
      for (const auto& mode : opts.modes) {
        if (mode == "small" && 2 * d >= r) {
          throw UsageError("bench: mode small needs 2d < r (d=" + std::to_string(d) + ")");
        }
        auto once = [&] {
          if (mode == "naive") return mult.naive(a, b);
          if (mode == "cyclic") return mult.cyclic(a, b);
          if (mode == "crt") return mult.crt(a, b);
          if (mode == "small") return mult.small_degree(a, b);
          return mult.multiply(a, b);
        };
        once();
        const std::size_t retries_before = mult.stats().crt_retries;
        std::vector<std::uint64_t> times;
        for (std::size_t i = 0; i < opts.reps; ++i) {
          const auto t0 = std::chrono::steady_clock::now();
          const auto prod = once();
          const auto t1 = std::chrono::steady_clock::now();
          (void)prod;
          times.push_back(static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        rows.push_back({opts.p, r, d, mode, times[times.size() / 2],
                        mult.stats().crt_retries - retries_before});
      }
    }
  }
  return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "p,r,d,mode,nanos,crt_retries\n";
  for (const auto& row : rows) {
    out << row.p << ',' << row.r << ',' << row.d << ',' << row.mode << ',' << row.nanos << ','
        << row.crt_retries << '\n';
  }
}

std::map<std::string, double> loglog_slopes(const std::vector<BenchRow>& rows) {
  struct Acc {
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  };
  std::map<std::string, Acc> acc;
  for (const auto& row : rows) {
    const std::string key = "p=" + std::to_string(row.p) + " r=" + std::to_string(row.r) +
                            " mode=" + row.mode;
    const double x = std::log(static_cast<double>(row.d));
    const double y = std::log(static_cast<double>(std::max<std::uint64_t>(row.nanos, 1)));
    auto& a = acc[key];
    a.n += 1;
    a.sx += x;
    a.sy += y;
    a.sxx += x * x;
    a.sxy += x * y;
  }
  std::map<std::string, double> out;
  for (const auto& [key, a] : acc) {
    const double den = a.n * a.sxx - a.sx * a.sx;
    out[key] = den == 0 ? 0.0 : (a.n * a.sxy - a.sx * a.sy) / den;
  }
  return out;
}

}  // namespace skew::tools
