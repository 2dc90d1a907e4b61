#include <benchmark/benchmark.h>

#include <qclt/dynamics.hpp>
#include <qclt/entropy.hpp>
#include <qclt/observables.hpp>
#include <qclt/oracle.hpp>

namespace {

using namespace qclt;

WaveFunction bench_state(std::size_t n_points) {
  return build_state(GaussianPacket{0.0, 0.0, 0.5, 1.0}, {-16.0, 16.0, n_points}, {});
}

void BM_SplitOperatorStep(benchmark::State& state) {
  const WaveFunction psi = bench_state(static_cast<std::size_t>(state.range(0)));
  const SystemSpec osc{SystemKind::oscillator, 0.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(psi, osc, 0.001, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SplitOperatorStep)->Arg(1024)->Arg(4096);

void BM_ConvolveDensity(benchmark::State& state) {
  const WaveFunction psi = bench_state(1024);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_density(psi, n));
  }
}
BENCHMARK(BM_ConvolveDensity)->Arg(4)->Arg(64)->Arg(1024);

void BM_ExtractMoments(benchmark::State& state) {
  const WaveFunction psi = bench_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_moments(psi));
  }
}
BENCHMARK(BM_ExtractMoments)->Arg(1024)->Arg(4096);

void BM_Gaussian2DMoment(benchmark::State& state) {
  const Gaussian2D g = gaussian2d_from_cov(0.3, -0.2, 1.0, 0.4, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian2d_moment(g, 4, 4));
  }
}
BENCHMARK(BM_Gaussian2DMoment);

void BM_DentQuadrature(benchmark::State& state) {
  MomentSet ms;
  ms.var_x = 0.5;
  ms.var_p = 1.0;
  ms.cov_c = -0.5;
  ms.comm_m = -1.0;
  const Gaussian2D dist = joint_re_density(ms, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dent_quadrature(dist));
  }
}
BENCHMARK(BM_DentQuadrature);

void BM_ImMomentQuadrature(benchmark::State& state) {
  MomentSet ms;
  ms.var_x = 0.5;
  ms.var_p = 0.5;
  ms.comm_m = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(im_moment_quadrature(ms, 10, 1, 1));
  }
}
BENCHMARK(BM_ImMomentQuadrature);

void BM_ExprEvaluate(benchmark::State& state) {
  const expr::Ast ast = expr::parse("exp(-(1+i)*x^2/2)*cos(x/3)");
  double x = -12.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expr::evaluate(ast, x));
    x += 0.01;
    if (x > 12.0) x = -12.0;
  }
}
BENCHMARK(BM_ExprEvaluate);

void BM_EntropySeries(benchmark::State& state) {
  MomentSet ms;
  ms.var_x = 0.5;
  ms.var_p = 1.0;
  ms.cov_c = -0.5;
  ms.comm_m = -1.0;
  const SystemSpec osc{SystemKind::oscillator, 0.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy_series(osc, ms, 0.0, 6.3, 1001));
  }
}
BENCHMARK(BM_EntropySeries);

}  // namespace

BENCHMARK_MAIN();
