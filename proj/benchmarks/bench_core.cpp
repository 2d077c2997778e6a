#include <benchmark/benchmark.h>

#include "liarwalk/chip_config.hpp"
#include "liarwalk/combinatorics.hpp"
#include "liarwalk/discrepancy.hpp"
#include "liarwalk/liar_game.hpp"
#include "liarwalk/parity_forge.hpp"
#include "liarwalk/random_config.hpp"

namespace {

using namespace liarwalk;

void bm_liar_run(benchmark::State& state) {
    chip_configuration f0 = random_configuration(7);
    const unsigned long steps = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(liar_run(f0, steps));
}
BENCHMARK(bm_liar_run)->Arg(64)->Arg(256);

void bm_chi_compute(benchmark::State& state) {
    chip_configuration f = liar_run(random_configuration(7), 256);
    for (auto _ : state) benchmark::DoNotOptimize(chi_compute(f));
}
BENCHMARK(bm_chi_compute);

void bm_discrepancy_tracker(benchmark::State& state) {
    chip_configuration f0 = random_configuration(7);
    const unsigned long steps = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        discrepancy_tracker tracker(f0);
        tracker.run_to(steps);
        benchmark::DoNotOptimize(tracker.max_abs_numerator());
    }
}
BENCHMARK(bm_discrepancy_tracker)->Arg(256)->Arg(1024);

void bm_hb_scan(benchmark::State& state) {
    const unsigned long s = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hB_scan(s, 8));
}
BENCHMARK(bm_hb_scan)->Arg(500)->Arg(2000);

void bm_binom_le(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(binom_le(4096, 1024));
}
BENCHMARK(bm_binom_le);

void bm_adversarial_config(benchmark::State& state) {
    const unsigned long steps = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(adversarial_config(steps, 0L));
}
BENCHMARK(bm_adversarial_config)->Arg(64)->Arg(256);

void bm_solve_game(benchmark::State& state) {
    state_vector x0;
    x0.x = {1, 11};
    for (auto _ : state) benchmark::DoNotOptimize(solve_game(x0, 4, 1));
}
BENCHMARK(bm_solve_game);

}  // namespace

BENCHMARK_MAIN();
