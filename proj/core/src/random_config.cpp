#include "liarwalk/random_config.hpp"

#include <random>
#include <set>

#include "liarwalk/errors.hpp"

namespace liarwalk {

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~0ull >> __builtin_clzll(n - 1);
    for (;;) {
        std::uint64_t r = rng() & mask;
        if (r < n) return r;
    }
}

}  // namespace

chip_configuration random_configuration(std::uint64_t seed,
                                        const random_config_params& params) {
    require_input(params.support_max >= 1, "support_max must be at least 1");
    require_input(params.site_range >= 0, "site_range must be nonnegative");
    require_input(params.count_max >= (params.even_counts_only ? 2ul : 1ul),
                  "count_max leaves no drawable count");

    // Valid sites of the parity class within [-R, R], ascending.
    const long r = params.site_range;
    const long lo = -r + ((site_matches(-r, params.parity)) ? 0 : 1);
    require_input(lo <= r, "no site of the requested parity in range");
    const std::uint64_t valid = static_cast<std::uint64_t>((r - lo) / 2) + 1;

    std::mt19937_64 rng(seed);
    const std::uint64_t want =
        1 + draw_below(rng, std::min<std::uint64_t>(params.support_max, valid));
    std::set<long> sites;
    while (sites.size() < want)
        sites.insert(lo + 2 * static_cast<long>(draw_below(rng, valid)));

    chip_configuration f;
    f.parity = params.parity;
    f.step = 0;
    for (long site : sites) {
        unsigned long count;
        if (params.even_counts_only)
            count = 2 * (1 + draw_below(rng, params.count_max / 2));
        else
            count = 1 + draw_below(rng, params.count_max);
        f.set(site, mpz_class(count));
    }
    return f;
}

}  // namespace liarwalk
