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

// Acceptance harness: one PASS/FAIL line per criterion on stdout, details
// on stderr. Exit status is nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/bench.hpp"
#include "skew/eval_interp.hpp"
#include "skew/fast_mult.hpp"
#include "skew/gabidulin.hpp"
#include "skew/mod_mult.hpp"
#include "skew/skew_arith.hpp"

namespace {

using namespace skew;
using Elem = GfExt::Elem;

struct Verdict {
  bool pass = true;
  std::string summary;
};

GfPoly random_poly(const GfExt& L, long deg, std::mt19937_64& rng) {
  if (deg < 0) return {};
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = L.random(rng);
  while (L.is_zero(c.back())) c.back() = L.random(rng);
  return skew_make(L, std::move(c));
}

Elem random_unit(const GfExt& L, std::mt19937_64& rng) {
  auto v = L.random(rng);
  while (L.is_zero(v)) v = L.random(rng);
  return v;
}

std::vector<Elem> random_free_family(const GfExt& L, std::size_t d, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Elem> xs(d);
    for (auto& x : xs) x = L.random(rng);
    if (rank_over_base(L, xs) == d) return xs;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<u64> kPrimes{2, 3, 5, 7};

// 1. Every product path equals the naive product (reduced where applicable).
Verdict criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  const char* names[] = {"cyclic", "mod_a", "mod_Z", "crt", "small_degree", "multiply"};
  std::size_t checks[6] = {}, bad[6] = {};
  std::size_t pairs = 0;
  for (u64 p : kPrimes) {
    for (std::size_t r = 1; r <= 8; ++r) {
      MultConfig cfg;
      cfg.seed = rng();
      SkewMultiplier m(FieldTower::random(PrimeField(p), r, rng), cfg);
      const auto& L = m.L();
      const auto& lt = m.lift(choose_lift_degree(p, r, 64));
      std::vector<ModZContext> zs;
      while (zs.size() < 4) {
        auto set = sample_moduli(lt, 64, rng);
        zs.push_back(std::move(set.moduli.front()));
      }
      for (int trial = 0; trial < 200; ++trial) {
        const auto a1 = random_poly(L, static_cast<long>(rng() % 65), rng);
        const auto a2 = random_poly(L, static_cast<long>(rng() % 65), rng);
        const auto want = skew_mul_naive(L, a1, a2);
        ++pairs;
        auto tally = [&](int k, bool ok) {
          ++checks[k];
          if (!ok) ++bad[k];
        };
        tally(0, m.cyclic(a1, a2) == skew_reduce_cyclic(L, want));
        TwistedBasisContext<GfExt> tw(L, m.tower().normal_basis(), random_unit(L, rng));
        tally(1, mod_mul_a(tw, a1, a2) == skew_reduce_binomial(L, want, tw.a_elem()));
        const auto& z = zs[static_cast<std::size_t>(trial) % zs.size()];
        tally(2, mod_mul_Z(z, a1, a2) == skew_reduce_central(L, want, z.Z()));
        tally(3, m.crt(a1, a2) == want);
        tally(5, m.multiply(a1, a2) == want);
        const long d1 = static_cast<long>(rng() % r);
        const auto s1 = random_poly(L, d1, rng);
        const auto s2 = random_poly(L, static_cast<long>(rng() % (r - static_cast<std::size_t>(d1))), rng);
        tally(4, m.small_degree(s1, s2) == skew_mul_naive(L, s1, s2));
      }
    }
  }
  Verdict v;
  std::ostringstream os;
  os << pairs << " pairs over 32 cells;";
  for (int k = 0; k < 6; ++k) {
    os << ' ' << names[k] << ' ' << (checks[k] - bad[k]) << '/' << checks[k];
    if (bad[k] != 0) v.pass = false;
  }
  os << "; " << std::fixed;
  os.precision(1);
  os << seconds_since(t0) << " s";
  v.summary = os.str();
  return v;
}

// 2. Remainder sequence of (T^r - 1, B) drops degree by exactly one.
Verdict criterion2() {
  std::mt19937_64 rng(102);
  std::size_t ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const u64 p = kPrimes[static_cast<std::size_t>(trial) % 4];
    const std::size_t r = 1 + static_cast<std::size_t>(trial / 4) % 8;
    FieldTower t = FieldTower::random(PrimeField(p), r, rng);
    NormalBasisContext<GfExt> ctx(t.L(), t.normal_basis());
    const auto seq = ctx.remainder_sequence();
    bool good = seq.size() == r + 1;
    for (std::size_t i = 0; good && i <= r; ++i) good = seq[i].degree() == static_cast<int>(r - i);
    ok += good;
  }
  return {ok == 50, std::to_string(ok) + "/50 normal bases with deg R_i = r - i"};
}

// 3. operator_matrix is multiplicative, injective below degree r, and
// matrix -> interpolate_full -> matrix is the identity.
Verdict criterion3() {
  std::mt19937_64 rng(103);
  std::size_t mult_ok = 0, inj_ok = 0, round_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const u64 p = kPrimes[static_cast<std::size_t>(trial) % 4];
    const std::size_t r = 1 + static_cast<std::size_t>(trial / 4) % 8;
    FieldTower t = FieldTower::random(PrimeField(p), r, rng);
    const auto& L = t.L();
    const auto& fp = L.base();
    NormalBasisContext<GfExt> ctx(L, t.normal_basis());
    const auto a = random_poly(L, static_cast<long>(rng() % r), rng);
    const auto b = random_poly(L, static_cast<long>(rng() % r), rng);
    const auto ma = operator_matrix(ctx, t.omega(), a);
    const auto mb = operator_matrix(ctx, t.omega(), b);
    const auto mab = operator_matrix(ctx, t.omega(), skew_reduce_cyclic(L, skew_mul_naive(L, a, b)));
    mult_ok += mat_equal(fp, mab, mat_mul(fp, ma, mb));
    // c = a + delta with delta nonzero must give a different matrix.
    const auto c = skew_add(L, a, random_poly(L, static_cast<long>(rng() % r), rng));
    inj_ok += !mat_is_zero(fp, ma) && !mat_equal(fp, ma, operator_matrix(ctx, t.omega(), c));
    std::vector<Elem> values;
    for (const auto& bi : t.normal_basis()) values.push_back(mat_apply(fp, ma, bi));
    const auto back = interpolate_full(ctx, values);
    round_ok += back == a && mat_equal(fp, operator_matrix(ctx, t.omega(), back), ma);
  }
  const bool pass = mult_ok == 100 && inj_ok == 100 && round_ok == 100;
  return {pass, "multiplicative " + std::to_string(mult_ok) + "/100, injective " +
                    std::to_string(inj_ok) + "/100, roundtrip " + std::to_string(round_ok) +
                    "/100"};
}

// 4. Small-degree interpolation certificate and agreement with the
// linear-algebra oracle, all n <= r <= 6, p in {2, 3, 5}.
Verdict criterion4() {
  std::mt19937_64 rng(104);
  std::size_t total = 0, ok = 0;
  for (u64 p : {2u, 3u, 5u}) {
    for (std::size_t r = 1; r <= 6; ++r) {
      FieldTower t = FieldTower::random(PrimeField(p), r, rng);
      const auto& L = t.L();
      NormalBasisContext<GfExt> ctx(L, t.normal_basis());
      for (std::size_t n = 1; n <= r; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
          std::vector<Elem> alpha(n);
          for (auto& a : alpha) a = L.random(rng);
          const auto res = small_degree_interpolation(ctx, alpha);
          const auto lhs = comm::add(L, comm::mul(L, res.u, comm::binomial(L, r, L.one())),
                                     comm::mul(L, res.v, ctx.B()));
          const auto rhs =
              comm::add(L, res.h, comm::shift(L, comm::make(L, alpha), r - n + 1));
          std::vector<std::pair<Elem, Elem>> pts;
          for (std::size_t i = 0; i < n; ++i) pts.emplace_back(t.normal_basis()[i], alpha[i]);
          const bool good = lhs == rhs && res.u.degree() <= static_cast<int>(n) - 1 &&
                            res.v.degree() <= static_cast<int>(n) &&
                            res.h.degree() <= static_cast<int>(r - n) &&
                            res.poly.degree() <= static_cast<long>(n) - 1 &&
                            res.poly == interpolate_linear_oracle(L, pts, n - 1);
          ++total;
          ok += good;
        }
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " certificates valid and matching the oracle"};
}

// 5. Single-shot modulus-batch acceptance under the sampling regime. The
// grid is the degree bound of criterion 1 at small, middle and large r.
Verdict criterion5() {
  std::mt19937_64 rng(105);
  const std::size_t d = 64;
  double worst = 1.0;
  std::string worst_at;
  std::size_t passing = 0, configs = 0;
  for (u64 p : kPrimes) {
    for (std::size_t r : {1u, 4u, 8u}) {
      FieldTower tower = FieldTower::random(PrimeField(p), r, rng);
      const std::size_t n = choose_lift_degree(p, r, d);
      const std::size_t t = modulus_count(n, r, d);
      LiftedTower lt = lift_tower(tower, n, rng);
      std::size_t ok = 0;
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<LiftedRing::Elem> lambdas(t);
        for (auto& lam : lambdas) lam = lt.Lp().random(rng);
        bool good = norms_admissible(lt, lambdas);
        if (good) {
          try {
            for (auto& lam : lambdas) ModZContext(lt, lam);
          } catch (const ConstructionError&) {
            good = false;
          }
        }
        ok += good;
      }
      const double rate = ok / 200.0;
      std::cerr << "  [5] p=" << p << " r=" << r << " d=" << d << " n=" << n << " t=" << t
                << " rate=" << rate << '\n';
      ++configs;
      passing += rate >= 0.5;
      if (rate < worst) {
        worst = rate;
        worst_at = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " n=" +
                   std::to_string(n) + " t=" + std::to_string(t);
      }
    }
  }
  std::ostringstream os;
  os << passing << "/" << configs << " configurations with rate >= 0.5; lowest " << worst
     << " at " << worst_at;
  return {passing == configs, os.str()};
}

// 6. Higher arithmetic against naive and linear-algebra oracles.
Verdict criterion6() {
  std::mt19937_64 rng(106);
  const char* names[] = {"rdiv", "rgcd", "llcm", "min_subspace", "multieval", "interpolate"};
  std::size_t checks[6] = {}, bad[6] = {};
  std::size_t bezout = 0;
  for (u64 p : kPrimes) {
    for (std::size_t r = 1; r <= 8; ++r) {
      MultConfig cfg;
      cfg.seed = rng();
      SkewMultiplier m(FieldTower::random(PrimeField(p), r, rng), cfg);
      const auto& L = m.L();
      for (int trial = 0; trial < 16; ++trial) {
        auto ar = fast_arith(m);
        if (trial % 2 == 1) {
          ar.div_threshold = 1;
          ar.gcd_threshold = 2;
        }
        auto tally = [&](int k, bool ok) {
          ++checks[k];
          if (!ok) ++bad[k];
        };
        const auto a = random_poly(L, static_cast<long>(rng() % 129), rng);
        const auto b = random_poly(L, static_cast<long>(rng() % 65), rng);
        tally(0, rdiv_fast(ar, a, b) == rdiv_naive(L, a, b));

        const auto g0 = random_poly(L, static_cast<long>(rng() % 9), rng);
        const auto x = skew_mul_naive(L, random_poly(L, static_cast<long>(rng() % 57), rng), g0);
        const auto y = skew_mul_naive(L, random_poly(L, static_cast<long>(rng() % 57), rng), g0);
        const auto g = rgcd_fast(ar, x, y);
        const bool bz = skew_add(L, skew_mul_naive(L, g.u, x), skew_mul_naive(L, g.v, y)) == g.g;
        bezout += bz;
        tally(1, bz && g.g == rgcd_naive(L, x, y).g);
        tally(2, llcm_fast(ar, x, y) == llcm_naive(L, x, y));

        const std::size_t d = 1 + rng() % r;
        const auto xs = random_free_family(L, d, rng);
        // X^d - Q with Q(x_i) = sigma^d(x_i), deg Q < d.
        std::vector<std::pair<Elem, Elem>> shifted;
        for (const auto& xi : xs) shifted.emplace_back(xi, L.sigma(xi, static_cast<long long>(d)));
        const auto msp = skew_sub(L, skew_monomial(L, d, L.one()),
                                  interpolate_linear_oracle(L, shifted, d - 1));
        tally(3, min_subspace_poly(ar, xs) == msp);

        const auto pe = random_poly(L, static_cast<long>(rng() % 65), rng);
        const auto v1 = multieval(ar, pe, xs, MultievalStrategy::kRemainderTree);
        const auto v2 = multieval(ar, pe, xs, MultievalStrategy::kMatrix);
        bool me = true;
        for (std::size_t i = 0; i < d; ++i) {
          const auto want = skew_eval(L, pe, xs[i]);
          me = me && L.equal(v1[i], want) && L.equal(v2[i], want);
        }
        tally(4, me);

        std::vector<std::pair<Elem, Elem>> pts;
        for (const auto& xi : xs) pts.emplace_back(xi, L.random(rng));
        tally(5, interpolate_general(ar, pts) == interpolate_linear_oracle(L, pts, d - 1));
      }
    }
  }
  Verdict v;
  std::ostringstream os;
  for (int k = 0; k < 6; ++k) {
    os << (k ? ", " : "") << names[k] << ' ' << (checks[k] - bad[k]) << '/' << checks[k];
    if (bad[k] != 0 || checks[k] < 500) v.pass = false;
  }
  os << "; Bezout " << bezout << '/' << checks[1];
  v.summary = os.str();
  return v;
}

// 7. Gabidulin (8, 4) over F_{2^8}.
Verdict criterion7() {
  std::mt19937_64 rng(107);
  SkewMultiplier m(FieldTower::random(PrimeField(2), 8, rng));
  const auto& L = m.L();
  const auto code = GabidulinCode::with_normal_basis(m, 8, 4);
  std::ostringstream os;
  bool pass = true;
  for (std::size_t t : {0u, 1u, 2u, 4u}) {
    std::size_t recovered = 0, failures = 0, nearby = 0, silent_wrong = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto msg = random_poly(L, static_cast<long>(rng() % 4), rng);
      auto rx = code.encode(msg);
      const auto err = random_rank_error(L, 8, t, rng);
      for (std::size_t i = 0; i < 8; ++i) rx[i] = L.add(rx[i], err[i]);
      const auto res = code.decode(rx);
      if (!res.ok) {
        ++failures;
        continue;
      }
      if (res.message == msg) {
        ++recovered;
        continue;
      }
      auto cw = code.encode(res.message);
      for (std::size_t i = 0; i < 8; ++i) cw[i] = L.sub(rx[i], cw[i]);
      if (rank_over_base(L, cw) <= code.t_max()) {
        ++nearby;
      } else {
        ++silent_wrong;
      }
    }
    if (t <= 2) {
      pass = pass && recovered == 100;
      os << "t=" << t << " " << recovered << "/100; ";
    } else {
      pass = pass && silent_wrong == 0;
      os << "t=" << t << " failures " << failures << ", nearby " << nearby << ", recovered "
         << recovered << ", silent wrong " << silent_wrong;
    }
  }
  return {pass, os.str()};
}

// 8. Log-log slope in d at r = 16, p = 2.
Verdict criterion8() {
  tools::BenchOptions opts;
  opts.p = 2;
  opts.rs = {16};
  opts.degrees = {16, 32, 64, 128};
  opts.modes = {"naive", "crt"};
  opts.reps = 5;
  const auto rows = tools::run_bench(opts);
  for (const auto& row : rows) {
    std::cerr << "  [8] d=" << row.d << " mode=" << row.mode << " nanos=" << row.nanos
              << " crt_retries=" << row.crt_retries << '\n';
  }
  const auto slopes = tools::loglog_slopes(rows);
  const double naive = slopes.at("p=2 r=16 mode=naive");
  const double crt = slopes.at("p=2 r=16 mode=crt");
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << "naive slope " << naive << " (want 2 +- 0.4), crt slope " << crt
     << " (want 1 +- 0.4)";
  return {std::abs(naive - 2.0) <= 0.4 && std::abs(crt - 1.0) <= 0.4, os.str()};
}

// 9. Two selftest runs with the same seed give byte-identical reports.
Verdict criterion9() {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "skewmul_acceptance";
  fs::create_directories(dir);
  std::string reports[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("selftest_" + std::to_string(i) + ".jsonl");
    const std::string cmd = std::string(SKEWMUL_CLI) + " selftest --seed 7 --report " +
                            path.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    codes[i] = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    reports[i] = ss.str();
  }
  std::size_t lines = 0;
  for (char c : reports[0]) lines += c == '\n';
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same && codes[0] == 0 && codes[1] == 0,
          std::string(same ? "identical" : "different") + " reports, " + std::to_string(lines) +
              " lines, exit codes " + std::to_string(codes[0]) + "/" + std::to_string(codes[1])};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3,
                                                       criterion4, criterion5, criterion6,
                                                       criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << (i + 1) << ": " << (v.pass ? "PASS" : "FAIL") << "  "
              << v.summary << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
