#include <benchmark/benchmark.h>

#include <optional>

#include "mirrorfield/decay.hpp"
#include "mirrorfield/mirror.hpp"
#include "mirrorfield/oracle.hpp"
#include "mirrorfield/wavepacket.hpp"

using namespace mirrorfield;

static void BM_RelativeDecayRate(benchmark::State& state) {
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(relative_decay_rate(u, 0.5, 1.2));
        u += 1e-3;
    }
}
BENCHMARK(BM_RelativeDecayRate);

static void BM_XiMapRow(benchmark::State& state) {
    MirrorSpec spec;
    spec.r_a = 0.6;
    spec.r_b = 0.8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mirror_parameter(spec).xi);
    }
}
BENCHMARK(BM_XiMapRow);

static void BM_PairPowerRatio(benchmark::State& state) {
    const ImagePairConfig config{3.14, 1.0, Orientation::PerpendicularToMirror};
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::pair_power_ratio_nodes(config, state.range(0)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairPowerRatio)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void BM_ScatterField(benchmark::State& state) {
    const SpatialGrid grid(40.0, state.range(0));
    GaussianPulse pulse;
    pulse.center = 10.0;
    const auto packet =
        WavePacket::gaussian(grid, Side::A, Direction::TowardMirror, 20.0, pulse);
    const MirrorSpec spec = build_mirror(0.6, 0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scatter(packet, std::nullopt, spec, 12.0));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScatterField)->RangeMultiplier(4)->Range(1024, 16384)->Complexity();

BENCHMARK_MAIN();
