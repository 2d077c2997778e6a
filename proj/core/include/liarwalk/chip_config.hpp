#pragma once

// The liar machine and its linearization.  A configuration f_t: Z -> N with
// finite support lives on one parity class of Z; one machine step sends
// floor(k/2) chips from each site to each neighbor and routes the leftover
// odd chips by the alternating sign sequence chi_t:
//
//   chi_t(j)   = 0 if f_t(j) is even, else (-1)^(number of odd sites left of j)
//   f_{t+1}(j) = ( f_t(j-1) + f_t(j+1) + chi_t(j-1) - chi_t(j+1) ) / 2
//
// The linear machine is the expectation process: g_{t+1}(j) = g_t(j-1)/2 +
// g_t(j+1)/2, kept exact as numerators over 2^t.

#include <gmpxx.h>

#include <vector>

#include "liarwalk/limits.hpp"

namespace liarwalk {

enum class parity_class : int { even = 0, odd = 1 };

inline parity_class flip(parity_class p) {
    return p == parity_class::even ? parity_class::odd : parity_class::even;
}

inline bool site_matches(long site, parity_class p) {
    // ((site % 2) + 2) % 2 == 0 iff site even
    return ((site % 2 + 2) % 2) == (p == parity_class::even ? 0 : 1);
}

// Chip counts on a dense window of consecutive sites.  counts[i] is the count
// at site offset+i; sites off the occupied parity class are structural zeros.
struct chip_configuration {
    long offset = 0;
    std::vector<mpz_class> counts;
    parity_class parity = parity_class::even;
    long step = 0;

    const mpz_class& at(long site) const;
    void set(long site, const mpz_class& value);  // grows the window as needed
    mpz_class mass() const;
    bool support_empty() const;
    long support_min() const;  // requires nonempty support
    long support_max() const;
    bool all_even() const;
    void trim();            // shrink the window to the support
    void validate() const;  // parity + nonnegativity invariants
};

// chi over a window; values in {-1, 0, +1}.
struct sign_vector {
    long offset = 0;
    std::vector<signed char> values;

    int at(long site) const;
};

// Exact dyadic profile: value at site offset+i is numerators[i] / 2^scale_exponent.
struct linear_profile {
    long offset = 0;
    std::vector<mpz_class> numerators;
    unsigned long scale_exponent = 0;
    parity_class parity = parity_class::even;
    long step = 0;

    mpq_class at(long site) const;
    mpz_class numerator_at(long site) const;
    void trim();
};

// The alternating sign sequence of f: k-th odd-count site from the left
// (0-indexed) carries sign (-1)^k.
sign_vector chi_compute(const chip_configuration& f);

// One liar-machine step.  Exactness of the halving and nonnegativity are
// checked and raise internal_error on failure.
chip_configuration liar_step(const chip_configuration& f);

// `steps` liar-machine steps with a window cap (resource_limit_error).
chip_configuration liar_run(const chip_configuration& f, unsigned long steps,
                            unsigned long max_window = default_max_window);

// The profile with g = f exactly (scale 0).
linear_profile linear_of(const chip_configuration& f);

// One linear-machine step: numerators convolve, scale_exponent increments.
linear_profile linear_step(const linear_profile& g);

linear_profile linear_run(const linear_profile& g, unsigned long steps,
                          unsigned long max_window = default_max_window);

// Sum of counts / values over sites a..b inclusive; error if a > b.
mpz_class interval_sum(const chip_configuration& f, long a, long b);
mpq_class interval_sum(const linear_profile& g, long a, long b);

}  // namespace liarwalk
