#include <benchmark/benchmark.h>

#include <vector>

#include "detkern/detkern.hpp"

namespace dk = detkern;

namespace {

dk::Fixture fixture_for(int n) {
  return dk::get_fixture("mixed-polys-n" + std::to_string(n));
}

void BM_GramBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dk::Fixture fx = fixture_for(n);
  const dk::QuadratureRule rule = fx.rule(64);
  for (auto _ : state) {
    dk::GramMatrix g = dk::compute_gram(fx.phi, fx.psi, rule);
    benchmark::DoNotOptimize(g.det());
  }
}
BENCHMARK(BM_GramBuild)->Arg(2)->Arg(4)->Arg(6);

void BM_KernelEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dk::GeneralizedKernel kern = fixture_for(n).kernel(64);
  double p = -0.7, q = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kern.eval(p, q));
    p += 1e-9;  // defeat caching of a constant argument
  }
}
BENCHMARK(BM_KernelEval)->Arg(2)->Arg(4)->Arg(6);

void BM_KernelDet(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const dk::GeneralizedKernel kern = fixture_for(6).kernel(64);
  const std::vector<double> p = dk::free_points(kern.domain(), k, 1);
  const std::vector<double> q = dk::free_points(kern.domain(), k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kern.det(p, q));
}
BENCHMARK(BM_KernelDet)->Arg(1)->Arg(3)->Arg(6);

void BM_TensorIntegrate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const dk::QuadratureRule rule =
      dk::lebesgue_rule(dk::Interval::finite(0.0, 1.0), 24);
  for (auto _ : state) {
    const double v = dk::integrate_nd(
        [](std::span<const double> x) {
          double s = 1.0;
          for (double xi : x) s *= 1.0 + xi * xi;
          return s;
        },
        rule, d);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_TensorIntegrate)->Arg(1)->Arg(2)->Arg(3);

void BM_ReductionOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dk::Fixture fx = fixture_for(n);
  const dk::GeneralizedKernel kern = fx.kernel(64);
  const dk::QuadratureRule rule = fx.rule(16);
  for (auto _ : state) {
    const dk::TheoremReport r = dk::verify_reduction(kern, n - 2, rule, 42);
    benchmark::DoNotOptimize(r.abs_residual);
  }
}
BENCHMARK(BM_ReductionOracle)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
