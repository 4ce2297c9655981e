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

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "bench.hpp"
#include "selftest.hpp"
#include "skew/errors.hpp"
#include "skew/fast_mult.hpp"
#include "skew/gabidulin.hpp"
#include "skew/io.hpp"

namespace {

using namespace skew;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// A field argument is a file path if one exists, otherwise inline text.
FieldTower load_tower(const std::string& arg, u64 seed) {
  const std::string text =
      std::filesystem::is_regular_file(arg) ? read_text_file(arg) : arg;
  const FieldSpec spec = parse_field(text);
  std::mt19937_64 rng(seed);
  return FieldTower(PrimeField(spec.p), spec.f, rng);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

struct MulArgs {
  std::string field, a, b, mode = "auto";
  u64 seed = 1;
};

int cmd_mul(const MulArgs& args) {
  SkewMultiplier mult(load_tower(args.field, args.seed));
  const auto& L = mult.L();
  const auto a = parse_poly(L, read_text_file(args.a));
  const auto b = parse_poly(L, read_text_file(args.b));
  GfPoly out;
  if (args.mode == "naive") {
    out = mult.naive(a, b);
  } else if (args.mode == "cyclic") {
    out = mult.cyclic(a, b);
  } else if (args.mode == "crt") {
    out = mult.crt(a, b);
  } else if (args.mode == "small") {
    out = mult.small_degree(a, b);
  } else {
    out = mult.multiply(a, b);
  }
  std::cout << format_poly(L, out) << '\n';
  return kExitOk;
}

struct SelftestArgs {
  tools::SelftestOptions opts;
  std::string report = "-";
};

int cmd_selftest(const SelftestArgs& args) {
  tools::SelftestSummary sum;
  if (args.report == "-") {
    sum = tools::run_selftest(args.opts, std::cout);
  } else {
    std::ofstream f(args.report, std::ios::binary);
    if (!f) throw UsageError("cannot write " + args.report);
    sum = tools::run_selftest(args.opts, f);
  }
  std::cerr << "selftest: " << sum.checks << " checks, " << sum.failures << " failures\n";
  return sum.failures == 0 ? kExitOk : kExitFailure;
}

struct BenchArgs {
  tools::BenchOptions opts;
  std::string csv = "-";
};

int cmd_bench(const BenchArgs& args) {
  const auto rows = tools::run_bench(args.opts);
  std::ostream* summary = &std::cout;
  if (args.csv == "-") {
    tools::write_csv(rows, std::cout);
    summary = &std::cerr;
  } else {
    std::ofstream f(args.csv, std::ios::binary);
    if (!f) throw UsageError("cannot write " + args.csv);
    tools::write_csv(rows, f);
  }
  for (const auto& [key, slope] : tools::loglog_slopes(rows)) {
    *summary << "slope " << key << ": " << std::fixed << std::setprecision(3) << slope << '\n';
  }
  return kExitOk;
}

struct GabArgs {
  std::string field, msg, received, out = "-";
  u64 p = 2, seed = 1;
  std::size_t r = 8, n = 8, k = 4, t = 2, trials = 100;
};

int cmd_gab_encode(const GabArgs& args) {
  SkewMultiplier mult(load_tower(args.field, args.seed));
  const auto code = GabidulinCode::with_normal_basis(mult, args.n, args.k);
  const auto msg = parse_poly(mult.L(), read_text_file(args.msg));
  write_output(args.out, format_word(mult.L(), code.encode(msg)) + "\n");
  return kExitOk;
}

int cmd_gab_decode(const GabArgs& args) {
  SkewMultiplier mult(load_tower(args.field, args.seed));
  const auto code = GabidulinCode::with_normal_basis(mult, args.n, args.k);
  const auto rx = parse_word(mult.L(), read_text_file(args.received));
  const auto res = code.decode(rx);
  if (!res.ok) {
    std::cerr << "decoding failure: " << res.failure << '\n';
    return kExitFailure;
  }
  write_output(args.out, format_poly(mult.L(), res.message) + "\n");
  return kExitOk;
}

int cmd_gab_demo(const GabArgs& args) {
  std::mt19937_64 rng(args.seed);
  FieldTower tower = args.field.empty() ? FieldTower::random(PrimeField(args.p), args.r, rng)
                                        : load_tower(args.field, args.seed);
  SkewMultiplier mult(std::move(tower));
  const auto& L = mult.L();
  const auto code = GabidulinCode::with_normal_basis(mult, args.n, args.k);
  std::size_t decoded = 0, failures = 0, other = 0;
  for (std::size_t i = 0; i < args.trials; ++i) {
    std::vector<GfExt::Elem> c(args.k);
    for (auto& v : c) v = L.random(rng);
    const auto msg = skew_make(L, std::move(c));
    auto word = code.encode(msg);
    const auto err = random_rank_error(L, args.n, args.t, rng);
    for (std::size_t j = 0; j < args.n; ++j) word[j] = L.add(word[j], err[j]);
    const auto res = code.decode(word);
    if (!res.ok) {
      ++failures;
    } else if (res.message == msg) {
      ++decoded;
    } else {
      ++other;  // a different codeword within the radius
    }
  }
  std::cout << decoded << "/" << args.trials << " decoded";
  std::cout << ", " << failures << " failures reported";
  std::cout << ", " << other << " other codewords within radius " << code.t_max() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewmul: arithmetic in skew polynomial rings over finite fields"};
  app.require_subcommand(1);

  SelftestArgs st;
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites over a grid");
  selftest->add_option("--seed", st.opts.seed, "grid seed")->capture_default_str();
  selftest->add_option("--primes", st.opts.primes, "primes p")->capture_default_str();
  selftest->add_option("--r-min", st.opts.r_min)->capture_default_str();
  selftest->add_option("--r-max", st.opts.r_max)->capture_default_str();
  selftest->add_option("--max-degree", st.opts.max_degree)->capture_default_str();
  selftest->add_option("--trials", st.opts.trials, "trials per check and cell")
      ->capture_default_str();
  selftest->add_option("--report", st.report, "JSON-lines report path, - for stdout")
      ->capture_default_str();
  selftest->add_flag("--inject-fault", st.opts.inject_fault,
                     "perturb the naive product oracle (testing the harness)");

  MulArgs ma;
  auto* mul = app.add_subcommand("mul", "multiply two skew polynomials read from files");
  mul->add_option("field", ma.field, "field file or inline p=..;f=..")->required();
  mul->add_option("a", ma.a, "left operand file")->required();
  mul->add_option("b", ma.b, "right operand file")->required();
  mul->add_option("--mode", ma.mode)
      ->check(CLI::IsMember({"naive", "cyclic", "crt", "small", "auto"}))
      ->capture_default_str();
  mul->add_option("--seed", ma.seed, "seed for the normal basis search")->capture_default_str();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "time products and print CSV");
  bench->add_option("--p", ba.opts.p)->capture_default_str();
  bench->add_option("--r", ba.opts.rs)->delimiter(',')->capture_default_str();
  bench->add_option("--degrees", ba.opts.degrees)->delimiter(',')->capture_default_str();
  bench->add_option("--modes", ba.opts.modes)->delimiter(',')->capture_default_str();
  bench->add_option("--reps", ba.opts.reps)->capture_default_str();
  bench->add_option("--seed", ba.opts.seed)->capture_default_str();
  bench->add_option("--csv", ba.csv, "CSV path, - for stdout")->capture_default_str();

  GabArgs ga;
  auto* gab = app.add_subcommand("gabidulin", "Gabidulin codes on normal-basis points");
  gab->require_subcommand(1);
  auto add_code_opts = [&](CLI::App* sub) {
    sub->add_option("--n", ga.n)->capture_default_str();
    sub->add_option("--k", ga.k)->capture_default_str();
    sub->add_option("--seed", ga.seed)->capture_default_str();
  };
  auto* enc = gab->add_subcommand("encode", "encode a message polynomial");
  enc->add_option("--field", ga.field)->required();
  enc->add_option("--msg", ga.msg)->required();
  enc->add_option("--out", ga.out)->capture_default_str();
  add_code_opts(enc);
  auto* dec = gab->add_subcommand("decode", "decode a received word");
  dec->add_option("--field", ga.field)->required();
  dec->add_option("--received", ga.received)->required();
  dec->add_option("--out", ga.out)->capture_default_str();
  add_code_opts(dec);
  auto* demo = gab->add_subcommand("demo", "plant rank errors and decode");
  demo->add_option("--field", ga.field, "field; default is random of degree r over F_p");
  demo->add_option("--p", ga.p)->capture_default_str();
  demo->add_option("--r", ga.r)->capture_default_str();
  demo->add_option("--t", ga.t, "rank of the planted error")->capture_default_str();
  demo->add_option("--trials", ga.trials)->capture_default_str();
  add_code_opts(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*selftest) return cmd_selftest(st);
    if (*mul) return cmd_mul(ma);
    if (*bench) return cmd_bench(ba);
    if (*enc) return cmd_gab_encode(ga);
    if (*dec) return cmd_gab_decode(ga);
    if (*demo) return cmd_gab_demo(ga);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
