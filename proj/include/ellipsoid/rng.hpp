#pragma once

#include <cstdint>

namespace ellipsoid {

// Counter-based generator: every draw is a pure hash of (seed, stream,
// counter), so parallel and serial runs produce bit-identical values and any
// (trial, coordinate) substream can be addressed directly.
namespace rng {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t draw_bits(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t counter) {
  constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  std::uint64_t h = mix64(seed + kGolden * (stream + 1));
  return mix64(h + kGolden * (counter + 1));
}

// Uniform in the open interval (0, 1): 53 significant bits, offset half an ulp
// so the endpoints are never hit (safe input for the normal quantile).
inline double draw_uniform(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
  const std::uint64_t bits = draw_bits(seed, stream, counter) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

// Standard normal quantile (Wichura's PPND16 rational approximation),
// accurate to ~1e-16 relative over (0, 1).
double normal_quantile(double p);

inline double draw_normal(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t counter) {
  return normal_quantile(draw_uniform(seed, stream, counter));
}

}  // namespace rng
}  // namespace ellipsoid
