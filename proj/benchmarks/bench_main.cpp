#include <benchmark/benchmark.h>

#include "cfree/verify.hpp"

namespace {

using cfree::CumulantTable;
using cfree::Letter;
using cfree::Rational;
using cfree::RationalSampler;
using cfree::TruncatedSeries;
using cfree::VariableSpec;
using cfree::Word;

void BM_EnumerateNC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    cfree::for_each_noncrossing(n, [&](const auto&, const auto&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateNC)->Arg(8)->Arg(10)->Arg(12);

void BM_WordMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RationalSampler sampler(1);
  const auto vx = cfree::random_variable_spec(sampler, "x", n);
  const auto vy = cfree::random_variable_spec(sampler, "y", n);
  Word w;
  for (int i = 0; i < n; ++i) {
    w.push_back(Letter({{"x", sampler.rational()}, {"y", sampler.rational()}}));
  }
  for (auto _ : state) {
    // fresh table per iteration: the memo cache would trivialize the loop
    CumulantTable table({vx, vy});
    benchmark::DoNotOptimize(table.phi_moment(w));
  }
}
BENCHMARK(BM_WordMoment)->Arg(8)->Arg(11)->Arg(14);

void BM_WordMomentByEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RationalSampler sampler(2);
  const auto vx = cfree::random_variable_spec(sampler, "x", n);
  const auto vy = cfree::random_variable_spec(sampler, "y", n);
  CumulantTable table({vx, vy});
  Word w;
  for (int i = 0; i < n; ++i) {
    w.push_back(Letter({{"x", sampler.rational()}, {"y", sampler.rational()}}));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfree::phi_moment_by_enumeration(w, table));
  }
}
BENCHMARK(BM_WordMomentByEnumeration)->Arg(6)->Arg(8)->Arg(10);

void BM_SingleVariableMoments(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  RationalSampler sampler(3);
  const auto v = cfree::random_variable_spec(sampler, "x", order);
  for (auto _ : state) {
    cfree::SingleVariableMoments sv(v, order);
    benchmark::DoNotOptimize(sv.phi(order));
  }
}
BENCHMARK(BM_SingleVariableMoments)->Arg(10)->Arg(12);

void BM_SeriesMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  RationalSampler sampler(4);
  TruncatedSeries a(order), b(order);
  for (int i = 0; i <= order; ++i) {
    a.set_coeff(i, sampler.rational(50, 30));
    b.set_coeff(i, sampler.rational(50, 30));
  }
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(BM_SeriesMul)->Arg(12)->Arg(64);

void BM_StieltjesRoundtrip(benchmark::State& state) {
  RationalSampler sampler(5);
  cfree::JacobiParams j;
  for (int i = 0; i < 6; ++i) {
    j.alpha.push_back(sampler.rational());
    j.beta.push_back(sampler.positive_rational());
  }
  for (auto _ : state) {
    const auto m = cfree::moments_from_jacobi(j, 12);
    benchmark::DoNotOptimize(cfree::jacobi_from_moments(m));
  }
}
BENCHMARK(BM_StieltjesRoundtrip);

void BM_MainTheoremCheck(benchmark::State& state) {
  cfree::TheoremCheckSpec spec;
  spec.theorem = "main-2.10";
  spec.maxN = static_cast<int>(state.range(0));
  spec.parameters = {{"a", cfree::make_rational(1, 2)},
                     {"b", cfree::make_rational(3, 4)},
                     {"alpha", cfree::make_rational(1, 3)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfree::check_main_theorem(spec));
  }
}
BENCHMARK(BM_MainTheoremCheck)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
