#pragma once

// Seeded test-configuration generator.  Draws use masked rejection on the
// raw mt19937_64 stream, so a seed produces the same configuration on every
// platform and standard library.

#include <cstdint>

#include "liarwalk/chip_config.hpp"

namespace liarwalk {

struct random_config_params {
    unsigned support_max = 64;            // at most this many occupied sites
    long site_range = 128;                // sites drawn from [-site_range, site_range]
    unsigned long count_max = 1ul << 20;  // counts drawn from [1, count_max]
    bool even_counts_only = false;
    parity_class parity = parity_class::even;
};

chip_configuration random_configuration(std::uint64_t seed,
                                        const random_config_params& params = {});

}  // namespace liarwalk
