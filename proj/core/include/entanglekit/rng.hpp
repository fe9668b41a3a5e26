#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace entanglekit {

/// Identifier for the sampling scheme, recorded in search output so runs can
/// be reproduced byte for byte.
inline constexpr std::string_view kGeneratorId = "mt19937_64+splitmix64substream/v1";

/// One step of the splitmix64 sequence; advances state and returns the output.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Independent generator for sample `index` under a global seed. The mapping
/// (seed, index) -> stream is fixed, so results do not depend on how samples
/// are distributed across threads.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
  return std::mt19937_64(splitmix64_next(state));
}

/// Uniform double in [0, 1) built from the top 53 bits, identical across
/// platforms (std::uniform_real_distribution is implementation-defined).
inline double unit_uniform(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1), safe to pass to log().
inline double open_unit_uniform(std::mt19937_64& g) {
  return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace entanglekit
