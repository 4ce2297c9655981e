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

#include "selftest.hpp"

#include <exception>
#include <functional>
#include <random>
#include <string>

#include "json.hpp"
#include "skew/eval_interp.hpp"
#include "skew/fast_mult.hpp"
#include "skew/gabidulin.hpp"
#include "skew/io.hpp"
#include "skew/mod_mult.hpp"
#include "skew/skew_arith.hpp"

namespace skew::tools {
namespace {

using Elem = GfExt::Elem;

class Reporter {
 public:
  Reporter(std::ostream& out, SelftestSummary& sum) : out_(out), sum_(sum) {}

  void run(const char* suite, const char* check, u64 p, std::size_t r, std::size_t trial,
           const std::function<bool()>& body) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["check"] = check;
    j["p"] = p;
    j["r"] = r;
    j["trial"] = trial;
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    j["verdict"] = ok ? "pass" : "fail";
    if (!detail.empty()) j["detail"] = detail;
    out_ << j.dump() << '\n';
    ++sum_.checks;
    if (!ok) ++sum_.failures;
  }

 private:
  std::ostream& out_;
  SelftestSummary& sum_;
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

void run_cell(const SelftestOptions& opts, u64 p, std::size_t r, Reporter& rep) {
  std::seed_seq seq{opts.seed, p, static_cast<u64>(r)};
  std::mt19937_64 rng(seq);
  MultConfig cfg;
  cfg.seed = rng();
  SkewMultiplier mult(FieldTower::random(PrimeField(p), r, rng), cfg);
  const auto& tower = mult.tower();
  const auto& L = mult.L();
  const auto& ctx = mult.normal_context();
  const auto ar = fast_arith(mult);
  const long dmax = static_cast<long>(opts.max_degree);
  auto rdeg = [&](long hi) { return static_cast<long>(rng() % static_cast<u64>(hi + 1)); };
  auto oracle = [&](const GfPoly& a, const GfPoly& b) {
    auto out = skew_mul_naive(L, a, b);
    if (opts.inject_fault) out = skew_add(L, out, skew_constant(L, L.one()));
    return out;
  };

  rep.run("gf-tower", "normal_basis_rank", p, r, 0, [&] {
    return rank_over_base(L, tower.normal_basis()) == r;
  });
  rep.run("gf-tower", "norm_in_base", p, r, 0, [&] {
    const auto x = random_unit(L, rng);
    return L.equal(L.sigma(x, static_cast<long long>(r)), x) && L.is_scalar(norm(L, x)) &&
           !L.is_zero(norm(L, x));
  });
  rep.run("eval-interp", "normal_sequence_degrees", p, r, 0, [&] {
    const auto s = ctx.remainder_sequence();
    if (s.size() != r + 1) return false;
    for (std::size_t i = 0; i <= r; ++i) {
      if (s[i].degree() != static_cast<int>(r - i)) return false;
    }
    return true;
  });
  rep.run("io", "roundtrip", p, r, 0, [&] {
    const auto a = random_poly(L, rdeg(8), rng);
    const FieldSpec spec{p, tower.modulus()};
    return parse_poly(L, format_poly(L, a)) == a && parse_field(format_field(spec)) == spec;
  });

  for (std::size_t t = 0; t < opts.trials; ++t) {
    rep.run("skew-core", "mul_associative", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(10), rng), b = random_poly(L, rdeg(10), rng),
                 c = random_poly(L, rdeg(10), rng);
      return skew_mul_naive(L, skew_mul_naive(L, a, b), c) ==
             skew_mul_naive(L, a, skew_mul_naive(L, b, c));
    });
    rep.run("skew-core", "eval_homomorphism", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(12), rng), b = random_poly(L, rdeg(12), rng);
      const auto x = L.random(rng);
      return L.equal(skew_eval(L, skew_mul_naive(L, a, b), x),
                     skew_eval(L, a, skew_eval(L, b, x)));
    });
    rep.run("skew-core", "rdiv_identity", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(dmax), rng), b = random_poly(L, rdeg(20), rng);
      const auto [q, rem] = rdiv_naive(L, a, b);
      return skew_add(L, skew_mul_naive(L, q, b), rem) == a && rem.degree() < b.degree();
    });
    rep.run("eval-interp", "interpolate_full_roundtrip", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(static_cast<long>(r) - 1), rng);
      return interpolate_full(ctx, eval_on_normal_basis(ctx, a)) == a;
    });
    rep.run("eval-interp", "small_certificate", p, r, t, [&] {
      const std::size_t n = 1 + rng() % r;
      std::vector<Elem> alpha(n);
      for (auto& a : alpha) a = L.random(rng);
      const auto res = small_degree_interpolation(ctx, alpha);
      const auto lhs = comm::add(L, comm::mul(L, res.u, comm::binomial(L, r, L.one())),
                                 comm::mul(L, res.v, ctx.B()));
      const auto rhs = comm::add(L, res.h, comm::shift(L, comm::make(L, alpha), r - n + 1));
      std::vector<std::pair<Elem, Elem>> pts;
      for (std::size_t i = 0; i < n; ++i) pts.emplace_back(ctx.basis(static_cast<long>(i)), alpha[i]);
      return lhs == rhs && res.h.degree() <= static_cast<int>(r - n) &&
             res.poly == interpolate_linear_oracle(L, pts, n - 1);
    });
    rep.run("mod-mult", "cyclic_vs_naive", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(dmax), rng), b = random_poly(L, rdeg(dmax), rng);
      return mult.cyclic(a, b) == skew_reduce_cyclic(L, oracle(a, b));
    });
    rep.run("mod-mult", "mod_a_vs_naive", p, r, t, [&] {
      TwistedBasisContext<GfExt> tw(L, tower.normal_basis(), random_unit(L, rng));
      const auto a = random_poly(L, rdeg(dmax), rng), b = random_poly(L, rdeg(dmax), rng);
      return mod_mul_a(tw, a, b) == skew_reduce_binomial(L, oracle(a, b), tw.a_elem());
    });
    rep.run("fast-mult", "crt_vs_naive", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(dmax), rng), b = random_poly(L, rdeg(dmax), rng);
      return mult.crt(a, b) == oracle(a, b);
    });
    rep.run("fast-mult", "multiply_vs_naive", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(dmax), rng), b = random_poly(L, rdeg(dmax), rng);
      return mult.multiply(a, b) == oracle(a, b);
    });
    rep.run("fast-mult", "small_degree_vs_naive", p, r, t, [&] {
      const long d1 = rdeg(static_cast<long>(r) - 1);
      const auto a = random_poly(L, d1, rng);
      const auto b = random_poly(L, rdeg(static_cast<long>(r) - 1 - d1), rng);
      return mult.small_degree(a, b) == oracle(a, b);
    });
    rep.run("skew-arith", "rdiv_fast_vs_naive", p, r, t, [&] {
      const auto a = random_poly(L, rdeg(2 * dmax), rng), b = random_poly(L, rdeg(dmax), rng);
      return rdiv_fast(ar, a, b) == rdiv_naive(L, a, b);
    });
    rep.run("skew-arith", "rgcd_bezout", p, r, t, [&] {
      const auto g0 = random_poly(L, rdeg(8), rng);
      const auto a = skew_mul_naive(L, random_poly(L, rdeg(dmax), rng), g0);
      const auto b = skew_mul_naive(L, random_poly(L, rdeg(dmax), rng), g0);
      if (a.is_zero() && b.is_zero()) return true;
      const auto g = rgcd_fast(ar, a, b);
      return g.g == rgcd_naive(L, a, b).g &&
             skew_add(L, skew_mul_naive(L, g.u, a), skew_mul_naive(L, g.v, b)) == g.g;
    });
    rep.run("skew-arith", "llcm_degree_law", p, r, t, [&] {
      const auto a = random_poly(L, 1 + rdeg(dmax / 2), rng);
      const auto b = random_poly(L, 1 + rdeg(dmax / 2), rng);
      const auto l = llcm_fast(ar, a, b);
      return l == llcm_naive(L, a, b) &&
             l.degree() + rgcd_fast(ar, a, b).g.degree() == a.degree() + b.degree();
    });
    rep.run("skew-arith", "multieval_strategies", p, r, t, [&] {
      const auto xs = random_free_family(L, 1 + rng() % r, rng);
      const auto a = random_poly(L, rdeg(dmax), rng);
      const auto t1 = multieval(ar, a, xs, MultievalStrategy::kRemainderTree);
      const auto t2 = multieval(ar, a, xs, MultievalStrategy::kMatrix);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!L.equal(t1[i], t2[i]) || !L.equal(t1[i], skew_eval(L, a, xs[i]))) return false;
      }
      return true;
    });
    rep.run("skew-arith", "interpolate_general", p, r, t, [&] {
      const auto xs = random_free_family(L, 1 + rng() % r, rng);
      std::vector<std::pair<Elem, Elem>> pts;
      for (const auto& x : xs) pts.emplace_back(x, L.random(rng));
      return interpolate_general(ar, pts) == interpolate_linear_oracle(L, pts, xs.size() - 1);
    });
    if (r >= 2) {
      rep.run("gabidulin", "plant_and_recover", p, r, t, [&] {
        const std::size_t k = std::max<std::size_t>(1, r / 2);
        const auto code = GabidulinCode::with_normal_basis(mult, r, k);
        const auto msg = random_poly(L, rdeg(static_cast<long>(k) - 1), rng);
        auto word = code.encode(msg);
        const auto err = random_rank_error(L, r, code.t_max(), rng);
        for (std::size_t i = 0; i < r; ++i) word[i] = L.add(word[i], err[i]);
        const auto res = code.decode(word);
        return res.ok && res.message == msg;
      });
    }
  }
}

}  // namespace

SelftestSummary run_selftest(const SelftestOptions& opts, std::ostream& jsonl) {
  SelftestSummary sum;
  Reporter rep(jsonl, sum);
  for (u64 p : opts.primes) {
    for (std::size_t r = opts.r_min; r <= opts.r_max; ++r) run_cell(opts, p, r, rep);
  }
  return sum;
}

}  // namespace skew::tools
