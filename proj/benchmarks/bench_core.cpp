#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"
#include "g2lab/geng2.hpp"
#include "g2lab/parse.hpp"
#include "g2lab/registry.hpp"
#include "g2lab/su3.hpp"

namespace {

using namespace g2lab;

// Deterministic mixed-degree forms with small rational coefficients.
Form<Rational> random_form(int n, std::mt19937_64& gen) {
  Form<Rational> f(n);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::bernoulli_distribution keep(0.4);
  for (int p = 0; p <= n; ++p)
    for (const auto& idx : degree_indices(n, p))
      if (keep(gen)) f.add_term(idx, Rational(num(gen), den(gen)));
  return f;
}

void BM_WedgeMixed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 gen(0xbe9cbe9c);
  Form<Rational> a = random_form(n, gen);
  Form<Rational> b = random_form(n, gen);
  for (auto _ : state) {
    Form<Rational> c = wedge(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_WedgeMixed)->Arg(6)->Arg(7)->Arg(8);

void BM_Companion7(benchmark::State& state) {
  Frame<Rational> fr(7);
  std::mt19937_64 gen(0xc09a9107);
  Form<Rational> f = random_form(7, gen);
  for (auto _ : state) {
    Form<Rational> c = fr.box_companion(f);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Companion7);

void BM_RunSuiteRankOne(benchmark::State& state) {
  for (auto _ : state) {
    auto report = run_suite("m-beta");
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_RunSuiteRankOne);

void BM_StrongProductFamily(benchmark::State& state) {
  const Fixture& fx = fixture("dbt-family");
  Frame<RatFunc> fr6 = lift_to_ratfunc(parse_frame(fx.frame), "mu");
  Su3Structure<RatFunc> s6{lift_to_ratfunc(parse_form(fx.forms.at("omega"), 6), "mu"),
                           lift_to_ratfunc(parse_form(fx.forms.at("psi-plus"), 6), "mu"),
                           lift_to_ratfunc(parse_form(fx.forms.at("psi-minus"), 6), "mu"),
                           std::nullopt};
  for (auto _ : state) {
    auto an = strong_product_analysis(fr6, s6);
    benchmark::DoNotOptimize(an);
  }
}
BENCHMARK(BM_StrongProductFamily);

}  // namespace

BENCHMARK_MAIN();
