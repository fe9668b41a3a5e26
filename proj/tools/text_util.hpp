#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace ektool {

/// Input text that failed to parse; message names the offending token.
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a comma-separated list of decimals ("0.46,0.306,0.234").
/// Whitespace around tokens is tolerated.
inline std::vector<double> parse_coeff_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t begin = pos, end = comma;
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string token = text.substr(begin, end - begin);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw ParseFailure("not a decimal number: '" + token + "'");
    }
    out.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

/// Shortest decimal string that parses back to exactly the same double.
/// Used for CSV cells so identical runs emit identical bytes.
inline std::string format_shortest(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

/// Nine significant digits with trailing zeros kept, for stdout tables.
inline std::string format_table(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%#.9g", x);
  return std::string(buf);
}

/// Coefficients joined with ';' so the list occupies one CSV cell.
inline std::string join_coeffs(std::span<const double> coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ';';
    out += format_shortest(coeffs[i]);
  }
  return out;
}

}  // namespace ektool
