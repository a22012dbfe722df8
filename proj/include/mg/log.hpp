#pragma once

#include <cstddef>
#include <string_view>

namespace mg {

/// Writes one line to stderr when the MG_LOG environment variable is set.
void debug_log(std::string_view message);
bool debug_enabled();

/// Coordinate bit-length cap for multi-bounce propagation (MG_BIT_CAP, default 4096).
std::size_t bit_cap();

}  // namespace mg
