#pragma once

#include <cstdint>
#include <random>

#include "funnel/linalg.hpp"

namespace funnel {

/// splitmix64 step; used to derive independent per-item seeds so that
/// parallel loops stay deterministic regardless of thread count.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Standard normal vector.
Vec sample_normal(std::mt19937_64& rng, int dim);

/// Uniform sample from the surface of the unit sphere.
Vec sample_unit_sphere(std::mt19937_64& rng, int dim);

/// Uniform sample from the interior of the unit ball.
Vec sample_unit_ball(std::mt19937_64& rng, int dim);

}  // namespace funnel
