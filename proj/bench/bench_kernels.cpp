// Serial reference vs OpenMP for the three hot kernels.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "nckc/kernels.hpp"
#include "nckc/spectrum.hpp"

namespace k = nckc::kernels;

namespace {

k::AlphaIntegralInput alpha_input(int points) {
  return {1.0, {1, 1, 1}, {0.6, 0.7}, {1.1, 0.4}, points};
}

k::GramInput gram_input(int l_max) {
  const nckc::ChannelSpec c{1, 1, 0, 1.0};
  return {c, nckc::angular_labels(c, l_max), 64};
}

template <auto Fn>
void bm_alpha(benchmark::State& st) {
  const auto in = alpha_input(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(in));
  st.counters["threads"] = omp_get_max_threads();
}

template <auto Fn>
void bm_partial_wave(benchmark::State& st) {
  const k::PartialWaveInput in{{1, 1, 1, 1.0}, {0.6, 0.7}, {1.1, 0.4}, static_cast<int>(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(Fn(in));
  st.counters["threads"] = omp_get_max_threads();
}

template <auto Fn>
void bm_gram(benchmark::State& st) {
  const auto in = gram_input(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(in));
  st.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(bm_alpha<k::serial::alpha_integral>)->Name("alpha/serial")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_alpha<k::parallel::alpha_integral>)->Name("alpha/omp")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_partial_wave<k::serial::partial_wave_coefficients>)->Name("partial_wave/serial")->Arg(200)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_partial_wave<k::parallel::partial_wave_coefficients>)->Name("partial_wave/omp")->Arg(200)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_gram<k::serial::angular_gram>)->Name("gram/serial")->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_gram<k::parallel::angular_gram>)->Name("gram/omp")->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
