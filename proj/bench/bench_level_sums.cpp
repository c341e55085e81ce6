#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "relqhe/constants.hpp"
#include "relqhe/level_kernels.hpp"

namespace {

// Half-width giving alpha*beta = ab at 150 K for an electron.
relqhe::EngineConfig config_for(double ab) {
    const relqhe::EngineConfig base = relqhe::make_engine_config(relqhe::electron_mass_kg, 1e-10);
    const double alpha = ab * base.constants().k_B * 150.0;
    const double L = std::numbers::pi * base.constants().hbar / std::sqrt(8.0 * base.mass() * alpha);
    return base.with_half_width(L);
}

template <relqhe::LevelMoments (*Kernel)(const relqhe::LevelSeries&, const relqhe::Tolerances&)>
void bm_level_sums(benchmark::State& state) {
    const double ab = std::pow(10.0, -static_cast<double>(state.range(0)));
    const relqhe::EngineConfig cfg = config_for(ab);
    const relqhe::LevelSeries s{&cfg, relqhe::Well::Single, relqhe::SpectrumMode::Expanded, cfg.beta(150.0)};
    std::size_t terms = 0;
    for (auto _ : state) {
        const relqhe::LevelMoments m = Kernel(s, cfg.tolerances());
        benchmark::DoNotOptimize(m.weight);
        terms = m.terms;
    }
    state.counters["terms"] = static_cast<double>(terms);
    state.SetItemsProcessed(static_cast<long>(state.iterations() * terms));
}

}  // namespace

BENCHMARK(bm_level_sums<relqhe::level_moments_serial>)->Name("serial")->DenseRange(4, 10, 2);
BENCHMARK(bm_level_sums<relqhe::level_moments_parallel>)->Name("parallel")->DenseRange(4, 10, 2);

BENCHMARK_MAIN();
