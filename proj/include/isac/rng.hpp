#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace isac {

using Rng = std::mt19937_64;

// Independent substreams of one trial. Keeping components on separate
// streams lets a single-mode trial reproduce exactly the draws a full
// campaign makes for that mode.
enum class Stream : std::uint64_t {
  Link = 1,        // h1 (shared by bistatic and monostatic detection)
  Comm = 2,        // R0, h0, slots, interferers around the tUE
  Bistatic = 3,    // R3, h2, rho_r, interferers around the tRad
  Mono = 4,        // rho, interferers around the tBS
  RadarOnly = 5,   // h_r, rho_rad, interferers of the radar-only network
  Network = 6,     // mode B: BS positions, per-BS slots
  Placement = 7,   // mode B: tUE, tTar, tRad positions and per-link fading
  RadarNetwork = 8 // mode B: radar-only network realization
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Generator keyed by (seed, trial, stream, attempt); the output depends on
// nothing else, so scheduling cannot change results.
inline Rng make_stream(std::uint64_t seed, std::uint64_t trial, Stream stream,
                       std::uint64_t attempt = 0) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ static_cast<std::uint64_t>(stream));
  h = splitmix64(h ^ attempt);
  std::seed_seq seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

// Uniform on the open interval (0, 1).
inline double uniform_open(Rng& rng) {
  for (;;) {
    const double u = std::generate_canonical<double, 53>(rng);
    if (u > 0.0 && u < 1.0) return u;
  }
}

}  // namespace isac
