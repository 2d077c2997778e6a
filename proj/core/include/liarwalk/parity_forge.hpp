#pragma once

// Constructive parity control of liar-machine trajectories, and the
// adversarial initial configurations it yields.  force_parity realizes any
// parity-respecting space-time pattern g(n,t) by a double induction: a
// mismatch at (n,t) is repaired by adding 2^t chips at site n+t, which
// reaches row t as the binomial row binom(t, .) spread over n, n+2, ...
// (odd exactly at n), while every earlier row sees only even contributions.
//
// adversarial_config drives the same induction over the sign pattern that
// maximizes the interval discrepancy at a chosen horizon: at each row the
// demanded chi is +1 at z+, -1 at z-, 0 elsewhere across the window, with a
// guard cell just left of the window absorbing the alternation phase of the
// stray odd cells further left (which provably never reach the target).

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "liarwalk/chip_config.hpp"
#include "liarwalk/discrepancy.hpp"
#include "liarwalk/limits.hpp"

namespace liarwalk {

// A 0/1 demand g(n,t) on sites 0..N-1 and times 0..T-1, supported on one
// space-time parity class: bit(n,t) = 1 requires (n+t) % 2 == support_parity.
struct parity_grid {
    long n_sites = 0;  // N
    long t_steps = 0;  // T
    parity_class support_parity = parity_class::even;
    std::vector<std::uint8_t> bits;  // row-major: bits[t*N + n]

    bool bit(long n, long t) const;
    void set_bit(long n, long t, bool value);
    bool cell_valid(long n, long t) const;
    void validate() const;
};

// f0 such that liar_run(f0, t) has f_t(n) = g(n,t) mod 2 for all grid cells.
// Chip counts grow like 2^t, so t_steps is capped (resource_limit_error).
chip_configuration force_parity(const parity_grid& g);

// Peak of the slice-s interval kernel kappa(z) = p_s(alpha-z) - p_s(beta-z)
// with alpha = a-1, beta = b+1 around the (parity-normalized) interval:
// num = 2^s kappa(z_plus) >= 1, and kappa(z_minus) = -kappa(z_plus).
struct kernel_peak {
    mpz_class num;
    long k_star = 0;  // smallest maximizing index in the binomial-row scan
    long z_plus = 0;
    long z_minus = 0;
};
kernel_peak interval_kernel_peak(unsigned long s, const interval_spec& target);

// The exact discrepancy the adversarial construction attains at `steps`:
// sum_{s < steps} peak_num(s) / 2^s.
mpq_class adversarial_predicted_value(unsigned long steps, const interval_spec& target);

// Initial configuration whose run realizes the maximizing chi pattern over
// the window [min(I)-T, max(I)+T] for every row t < T = steps.
chip_configuration adversarial_config(unsigned long steps, const interval_spec& target);
chip_configuration adversarial_config(unsigned long steps, long target_site);

// Replays the construction at full precision: checks the demanded chi
// pattern row by row and measures the interval discrepancy at `steps`,
// which equals the predicted value exactly when the pattern holds.
struct adversarial_verification {
    mpq_class measured;
    mpq_class predicted;
    bool chi_pattern_ok = false;
};
adversarial_verification adversarial_verify(unsigned long steps, const interval_spec& target,
                                            unsigned long max_window = default_max_window);

}  // namespace liarwalk
