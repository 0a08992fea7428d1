// Fused OpenMP stencil apply() against the axis-by-axis serial reference.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "delta_atom/grid_kernels.hpp"

namespace {

delta_atom::kernels::GridHamiltonian make(int n, int order) {
  const double h = 2.0 * std::numbers::pi / n;
  std::vector<double> u(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double p = -std::numbers::pi + h * i;
      const double m = -std::numbers::pi + h * j;
      u[static_cast<std::size_t>(i) * n + j] =
          2.0 * (1.0 - std::cos(p) * std::cos(m)) + 0.8 * (1.0 - std::cos(0.9 * std::numbers::pi + 2.0 * m));
    }
  }
  return {n, n, h, h, 3.0, 3.0 * 2.6, std::move(u), order};
}

void BM_apply_parallel(benchmark::State& state) {
  const auto h = make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<double> x(static_cast<std::size_t>(h.size()), 1.0), y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.01 * static_cast<double>(i));
  for (auto _ : state) {
    h.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * h.size());
}

void BM_apply_serial(benchmark::State& state) {
  const auto h = make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<double> x(static_cast<std::size_t>(h.size()), 1.0), y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.01 * static_cast<double>(i));
  for (auto _ : state) {
    h.apply_serial(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * h.size());
}

}  // namespace

BENCHMARK(BM_apply_parallel)->ArgsProduct({{64, 128, 256, 512}, {2, 4}});
BENCHMARK(BM_apply_serial)->ArgsProduct({{64, 128, 256, 512}, {2, 4}});

BENCHMARK_MAIN();
