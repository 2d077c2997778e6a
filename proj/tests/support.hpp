#pragma once

// Tiny check harness shared by the test mains, plus the configuration
// plumbing they all need.  Each test binary reports a pass/fail tally and
// returns nonzero when anything failed.

#include <gmpxx.h>

#include <cstdio>
#include <map>
#include <utility>
#include <vector>

#include "liarwalk/chip_config.hpp"

inline int g_pass = 0;
inline int g_fail = 0;

#define CHECK(cond, ...)                                     \
    do {                                                     \
        if (cond) {                                          \
            ++g_pass;                                        \
        } else {                                             \
            ++g_fail;                                        \
            std::printf("FAIL %s:%d: ", __FILE__, __LINE__); \
            std::printf(__VA_ARGS__);                        \
            std::printf("\n");                               \
        }                                                    \
    } while (0)

#define CHECK_THROWS(expr, exception_type)                                         \
    do {                                                                           \
        bool thrown = false;                                                       \
        try {                                                                      \
            (void)(expr);                                                          \
        } catch (const exception_type&) {                                          \
            thrown = true;                                                         \
        }                                                                          \
        CHECK(thrown, "expected %s from %s", #exception_type, #expr);              \
    } while (0)

inline int check_summary() {
    std::printf("Total: %d passed, %d failed\n", g_pass, g_fail);
    if (g_fail == 0) {
        std::printf("ALL TESTS PASSED\n");
        return 0;
    }
    return 1;
}

using config_map = std::map<long, mpz_class>;

inline liarwalk::chip_configuration make_config(const config_map& cells) {
    liarwalk::chip_configuration f;
    if (!cells.empty())
        f.parity = ((cells.begin()->first % 2 + 2) % 2) == 0 ? liarwalk::parity_class::even
                                                             : liarwalk::parity_class::odd;
    for (const auto& [site, count] : cells) f.set(site, count);
    f.trim();
    f.validate();
    return f;
}

inline config_map support_map(const liarwalk::chip_configuration& f) {
    config_map m;
    if (f.support_empty()) return m;
    for (long j = f.support_min(); j <= f.support_max(); ++j)
        if (f.at(j) != 0) m[j] = f.at(j);
    return m;
}
