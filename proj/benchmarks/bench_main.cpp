#include <benchmark/benchmark.h>

#include "bayesbound/informativity.hpp"
#include "bayesbound/models.hpp"
#include "bayesbound/oracle.hpp"
#include "bayesbound/phi.hpp"

using namespace bayesbound;

static void BM_ExactBayesRisk(benchmark::State& state) {
  DiscreteProblem p = make_random(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)), true, 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_bayes_risk(p).risk);
}
BENCHMARK(BM_ExactBayesRisk)->Arg(4)->Arg(8);

static void BM_InvertPhi(benchmark::State& state) {
  const ConvexGenerator kl = kl_generator();
  for (auto _ : state)
    benchmark::DoNotOptimize(invert_phi(kl, 0.1, 0.9).lower_bound);
}
BENCHMARK(BM_InvertPhi);

static void BM_Chi2Informativity(benchmark::State& state) {
  DiscreteProblem p = make_random(8, 8, 4, true, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(chi2_informativity_exact(p).value);
}
BENCHMARK(BM_Chi2Informativity);

static void BM_MutualInformation(benchmark::State& state) {
  DiscreteProblem p = make_random(8, 8, 4, true, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(mutual_information_exact(p).value);
}
BENCHMARK(BM_MutualInformation);

static void BM_UfGeneric(benchmark::State& state) {
  const ConvexGenerator kl = kl_generator();
  for (auto _ : state) benchmark::DoNotOptimize(u_f_generic(kl, 0.7));
}
BENCHMARK(BM_UfGeneric);

static void BM_TutuChi2Pipeline(benchmark::State& state) {
  GaussianLocationFamily fam;
  fam.d = static_cast<int>(state.range(0));
  fam.sigma = 1.0;
  fam.gamma = 10.0 * std::sqrt(static_cast<double>(fam.d));
  for (auto _ : state)
    benchmark::DoNotOptimize(tutu_pipeline(fam, TutuRoute::chi2).value);
}
BENCHMARK(BM_TutuChi2Pipeline)->Arg(1)->Arg(8);

BENCHMARK_MAIN();
