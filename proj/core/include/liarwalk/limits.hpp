#pragma once

namespace liarwalk {

// Default resource caps; every long-running operation takes one of these as a
// parameter so callers (and the CLI flags) can tighten or relax them.
inline constexpr unsigned long default_max_window = 1ul << 22;       // tracked cells
inline constexpr unsigned long default_max_nodes = 1ul << 22;        // solver positions
inline constexpr unsigned long default_max_materialize = 1ul << 24;  // position entries

}  // namespace liarwalk
