#pragma once

#include <cstdio>
#include <string>

namespace entanglekit::detail {

/// Compact decimal for error messages; %g keeps magnitudes like 1e-09 legible
/// where std::to_string would print 0.000000.
inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace entanglekit::detail
