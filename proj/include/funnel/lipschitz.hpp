#pragma once

#include <cstdint>
#include <vector>

#include "funnel/exec.hpp"
#include "funnel/system.hpp"
#include "funnel/trajectory.hpp"

namespace funnel {

/// Sampling region for the local Lipschitz-constant estimation at a node.
/// Default: the state ellipsoid {eta : eta' state_shape^{-1} eta <= 1} mapped
/// into nonlinearity-argument space through delta_q = (C + D K_guess) eta + G w,
/// with w drawn from the unit ball. When q_shape is nonempty it overrides the
/// mapped region and delta_q is drawn from that ellipsoid directly (useful
/// when the mapped region is rank-deficient, e.g. zero feedback guess).
struct LipschitzRegion {
  Mat state_shape;     // n_x x n_x SPD
  Mat feedback_guess;  // n_u x n_x, zero when empty
  Mat q_shape;         // n_q x n_q SPD, optional override
};

struct LipschitzOptions {
  int n_samples = 100;
  double inflation = 1.1;
  std::uint64_t seed = 0;
  Exec exec = Exec::parallel;
};

/// Inflated worst secant slope of phi(t, .) between qbar and the samples.
double lipschitz_from_samples(const NonlinearSystem& sys, double t, const Vec& qbar,
                              const std::vector<Vec>& q_samples, double inflation);

/// Draws n_samples points of the region around node k (deterministic in
/// (seed, k)); exposed so tests can audit the sampling and accumulate sample
/// sets across nested regions.
std::vector<Vec> sample_lipschitz_region(const NonlinearSystem& sys, const LipschitzRegion& region,
                                         const Vec& qbar, int n_samples, std::uint64_t seed,
                                         int node);

/// Per-node local Lipschitz constants gamma_k of the lumped nonlinearity,
/// estimated by sampling the region uniformly and inflating the worst secant
/// slope. gamma_k = 0 when the system has no nonlinearity.
Vec estimate_lipschitz(const NonlinearSystem& sys, const NominalTrajectory& traj,
                       const LipschitzRegion& region, const LipschitzOptions& opts = {});

}  // namespace funnel
