#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace luvt {

/// Invalid input: bad spec fields, shape mismatches, malformed requests.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed file content (PGM, CSV, config). Message names file and line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numeric blow-up: non-finite amplitudes or losses.
struct StabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent RNG stream seed from a base seed and up to three
/// stream coordinates (e.g. series id, frame index, epoch). Pure function,
/// so parallel workers can derive their own streams without shared state.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = base;
  std::uint64_t h = splitmix64(s);
  s ^= a + 0x9e3779b97f4a7c15ULL;
  h ^= splitmix64(s);
  s ^= b + 0xc2b2ae3d27d4eb4fULL;
  h ^= splitmix64(s);
  s ^= c + 0x165667b19e3779f9ULL;
  h ^= splitmix64(s);
  return h;
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::uint64_t a = 0,
                                std::uint64_t b = 0, std::uint64_t c = 0) {
  return std::mt19937_64(derive_seed(base, a, b, c));
}

}  // namespace luvt
