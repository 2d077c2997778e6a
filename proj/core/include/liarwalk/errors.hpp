#pragma once

#include <stdexcept>
#include <string>

namespace liarwalk {

// Malformed or out-of-range input (CLI exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap (window size, node budget, precision) was hit
// before the computation finished (CLI exit code 3).
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug, not bad input (CLI exit code 4).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require_input(bool ok, const std::string& what) {
    if (!ok) throw input_error(what);
}

inline void require_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace liarwalk
