#include "mg/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace mg {

bool debug_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("MG_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
  }();
  return on;
}

void debug_log(std::string_view message) {
  if (debug_enabled()) std::cerr << "[mg] " << message << '\n';
}

std::size_t bit_cap() {
  if (const char* v = std::getenv("MG_BIT_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
  }
  return 4096;
}

}  // namespace mg
