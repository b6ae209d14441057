#ifndef GRIDSIM_RNG_HPP
#define GRIDSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace gridsim {

// Distribution sampling is hand-rolled on top of mt19937_64 because the
// standard's distribution classes are implementation-defined: the same seed
// must replay the same stream on every platform.

std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent seed for a named sub-stream (e.g. one per job, one
/// per site) so unrelated entities never share randomness.
std::uint64_t derive_seed(std::uint64_t root, std::string_view purpose, std::uint64_t index);

inline std::mt19937_64 make_rng(std::uint64_t root, std::string_view purpose, std::uint64_t index) {
  return std::mt19937_64(derive_seed(root, purpose, index));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, n). Modulo bias is below 2^-50 for any practical n.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

/// One N(0, sigma) draw via Box-Muller.
double gaussian(std::mt19937_64& rng, double sigma);

}  // namespace gridsim

#endif
