#include <cstdio>
#include <random>
#include <vector>

#include "liarwalk/arith.hpp"
#include "liarwalk/chip_config.hpp"
#include "liarwalk/combinatorics.hpp"
#include "liarwalk/discrepancy.hpp"
#include "liarwalk/errors.hpp"
#include "liarwalk/parity_forge.hpp"
#include "liarwalk/random_config.hpp"
#include "support.hpp"

using namespace liarwalk;

namespace {

// Check f against the grid by direct simulation, row by row.
bool parities_match(const parity_grid& g, const chip_configuration& f0) {
    chip_configuration f = f0;
    for (long t = 0; t < g.t_steps; ++t) {
        if (t > 0) f = liar_step(f);
        for (long n = 0; n < g.n_sites; ++n) {
            bool want = g.cell_valid(n, t) && g.bit(n, t);
            if (mpz_odd_p(f.at(n).get_mpz_t()) != want) return false;
        }
    }
    return true;
}

parity_grid random_grid(std::uint64_t seed, long max_n, long max_t) {
    std::mt19937_64 rng(seed);
    parity_grid g;
    g.n_sites = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_n));
    g.t_steps = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_t));
    g.support_parity = (rng() & 1) ? parity_class::odd : parity_class::even;
    g.bits.assign(static_cast<std::size_t>(g.n_sites * g.t_steps), 0);
    for (long t = 0; t < g.t_steps; ++t)
        for (long n = 0; n < g.n_sites; ++n)
            if (g.cell_valid(n, t) && (rng() & 1)) g.set_bit(n, t, true);
    return g;
}

// Independent slice kernel: kappa(z) = p_s(alpha - z) - p_s(beta - z) as exact
// rationals, maximized by scanning every z with nonzero kernel.
mpq_class p_s(unsigned long s, long j) {
    long sj = static_cast<long>(s) + j;
    if (((sj % 2) + 2) % 2 != 0 || sj < 0 || sj > 2 * static_cast<long>(s)) return 0;
    mpq_class r(binom(static_cast<long>(s), sj / 2), mpz_class(1) << s);
    r.canonicalize();
    return r;
}

struct kernel_brute {
    mpq_class max_value;
    long z_plus = 0;
};

kernel_brute kernel_peak_oracle(unsigned long s, long a, long b) {
    long bp = b - (((b - a) % 2 + 2) % 2 == 1 ? 1 : 0);
    long alpha = a - 1, beta = bp + 1;
    kernel_brute best;
    best.max_value = 0;
    for (long z = alpha - 2 * static_cast<long>(s) - 2; z <= beta + 2 * static_cast<long>(s) + 2;
         ++z) {
        mpq_class v = p_s(s, alpha - z) - p_s(s, beta - z);
        if (v > best.max_value) {
            best.max_value = v;
            best.z_plus = z;
        }
    }
    return best;
}

void test_grid_type() {
    std::printf("=== parity_grid ===\n");
    parity_grid g;
    g.n_sites = 3;
    g.t_steps = 2;
    g.support_parity = parity_class::even;
    g.bits.assign(6, 0);
    CHECK(g.cell_valid(0, 0) && !g.cell_valid(1, 0) && g.cell_valid(1, 1),
          "cell validity follows (n + t) mod 2");
    g.set_bit(1, 0, true);  // off the parity class
    CHECK_THROWS(g.validate(), input_error);
    g.set_bit(1, 0, false);
    g.set_bit(2, 0, true);
    g.validate();
    CHECK(g.bit(2, 0) && !g.bit(0, 0), "set_bit round-trips");
}

void test_force_parity() {
    std::printf("=== force_parity ===\n");
    parity_grid zero;
    zero.n_sites = 5;
    zero.t_steps = 4;
    zero.support_parity = parity_class::even;
    zero.bits.assign(20, 0);
    CHECK(force_parity(zero).support_empty(), "all-zero grid forces the empty configuration");

    // T = 1 reduces to copying row zero
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        parity_grid g = random_grid(seed, 12, 1);
        chip_configuration f0 = force_parity(g);
        bool copied = true;
        for (long n = 0; n < g.n_sites; ++n) {
            mpz_class want = g.cell_valid(n, 0) && g.bit(n, 0) ? 1 : 0;
            if (f0.at(n) != want) copied = false;
        }
        CHECK(copied, "T=1 grid copies row zero, seed %llu", (unsigned long long)seed);
    }

    // the single-cell induction: demand an odd count at (0,1) only
    parity_grid tall;
    tall.n_sites = 1;
    tall.t_steps = 2;
    tall.support_parity = parity_class::odd;
    tall.bits.assign(2, 0);
    tall.set_bit(0, 1, true);
    chip_configuration forced = force_parity(tall);
    CHECK(support_map(forced) == config_map({{1, 2}}), "N=1, T=2 demand yields {1:2}");
    CHECK(parities_match(tall, forced), "the {1:2} configuration satisfies its grid");

    // seeded battery with the simulation check and the chip-count bound
    for (std::uint64_t seed = 20; seed < 40; ++seed) {
        parity_grid g = random_grid(seed, 8, 8);
        chip_configuration f0 = force_parity(g);
        CHECK(parities_match(g, f0), "forced parities match, seed %llu",
              (unsigned long long)seed);
        mpz_class cap = mpz_class(g.n_sites) * g.t_steps * (mpz_class(1) << g.t_steps);
        CHECK(f0.mass() <= cap, "chip count within N T 2^T, seed %llu",
              (unsigned long long)seed);
    }

    parity_grid bad;
    bad.n_sites = 2;
    bad.t_steps = 1;
    bad.support_parity = parity_class::even;
    bad.bits = {1, 1};  // site 1 at t=0 is off the even class
    CHECK_THROWS(force_parity(bad), input_error);

    parity_grid huge;
    huge.n_sites = 1;
    huge.t_steps = 40;
    huge.support_parity = parity_class::even;
    huge.bits.assign(40, 0);
    CHECK_THROWS(force_parity(huge), resource_limit_error);
}

void test_kernel_peak() {
    std::printf("=== interval_kernel_peak ===\n");
    bool peaks_ok = true, pairing_ok = true;
    for (unsigned long s = 0; s <= 24; ++s)
        for (const interval_spec target : {interval_spec{0, 0}, interval_spec{0, 2},
                                           interval_spec{-3, 3}, interval_spec{2, 7}}) {
            kernel_peak got = interval_kernel_peak(s, target);
            kernel_brute want = kernel_peak_oracle(s, target.a, target.b);
            if (dyadic(got.num, s) != want.max_value) peaks_ok = false;
            // the demanded pair: kappa(z+) is the max, kappa(z-) its negative
            long bp = target.b - ((target.b - target.a) % 2 != 0 ? 1 : 0);
            mpq_class at_plus = p_s(s, target.a - 1 - got.z_plus) - p_s(s, bp + 1 - got.z_plus);
            mpq_class at_minus = p_s(s, target.a - 1 - got.z_minus) - p_s(s, bp + 1 - got.z_minus);
            if (at_plus != want.max_value || at_minus != -want.max_value) pairing_ok = false;
            if (got.z_plus >= got.z_minus) pairing_ok = false;
        }
    CHECK(peaks_ok, "kernel peak equals the brute-force slice maximum");
    CHECK(pairing_ok, "z+ / z- carry the antisymmetric extreme pair");
}

void test_adversarial() {
    std::printf("=== adversarial_config ===\n");
    // T=1 pointwise: the two-chip configuration realizing one maximal term
    adversarial_verification v1 = adversarial_verify(1, {0, 0});
    CHECK(v1.chi_pattern_ok, "T=1 chi pattern holds");
    CHECK(v1.measured == 1 && v1.predicted == 1, "T=1 discrepancy is exactly 1");

    // the construction realizes its predicted value exactly across shapes
    for (unsigned long steps : {2ul, 3ul, 4ul, 5ul, 8ul, 13ul, 16ul, 33ul}) {
        for (const interval_spec target :
             {interval_spec{0, 0}, interval_spec{0, 4}, interval_spec{-5, 2}}) {
            adversarial_verification v = adversarial_verify(steps, target);
            CHECK(v.chi_pattern_ok, "chi pattern holds at T=%lu [%ld,%ld]", steps, target.a,
                  target.b);
            CHECK(v.measured == v.predicted, "measured equals predicted at T=%lu [%ld,%ld]",
                  steps, target.a, target.b);
        }
    }

    // predicted value is the slice-peak sum
    for (unsigned long steps : {1ul, 2ul, 6ul, 12ul}) {
        mpq_class sum = 0;
        for (unsigned long s = 0; s < steps; ++s)
            sum += kernel_peak_oracle(s, 0, 0).max_value;
        CHECK(adversarial_predicted_value(steps, {0, 0}) == sum,
              "predicted value at T=%lu is the kernel-peak sum", steps);
    }

    // site overload targets the pointwise kernel
    CHECK(support_map(adversarial_config(4, 3)) == support_map(adversarial_config(4, {3, 3})),
          "site target matches the degenerate interval");

    // a steps horizon beyond the configured cap is refused
    CHECK_THROWS(adversarial_config(1ul << 20, {0, 0}), resource_limit_error);

    // the T=64 pointwise adversary beats a battery of random starts at (0, 64)
    discrepancy_tracker adv(adversarial_config(64, 0));
    adv.run_to(64);
    mpz_class adv_num = abs(adv.numerator_at(0));
    bool dominates = true;
    for (std::uint64_t seed = 900; seed < 1000; ++seed) {
        discrepancy_tracker rnd(random_configuration(seed));
        rnd.run_to(64);
        if (abs(rnd.numerator_at(0)) > adv_num) dominates = false;
    }
    CHECK(dominates, "adversarial start dominates 100 random starts at (0, 64)");

    // growth of the predicted optimum in the horizon
    mpq_class prev = 0;
    bool nondecreasing = true;
    for (unsigned long k = 1; k <= 8; ++k) {
        mpq_class cur = adversarial_predicted_value(1ul << k, {0, 0});
        if (cur < prev) nondecreasing = false;
        prev = cur;
    }
    CHECK(nondecreasing, "predicted optimum is nondecreasing over doubling horizons");
}

}  // namespace

int main() {
    test_grid_type();
    test_force_parity();
    test_kernel_peak();
    test_adversarial();
    return check_summary();
}
