#include "funnel/lipschitz.hpp"

#include <cmath>

#include "funnel/errors.hpp"
#include "funnel/rng.hpp"

namespace funnel {
namespace {

double estimate_at_node(const NonlinearSystem& sys, const NominalTrajectory& traj,
                        const LipschitzRegion& region, const LipschitzOptions& opts, int k) {
  const Vec qbar = sys.C * traj.x[k] + sys.D * traj.u[k];
  const std::vector<Vec> samples =
      sample_lipschitz_region(sys, region, qbar, opts.n_samples, opts.seed, k);
  return lipschitz_from_samples(sys, traj.t[k], qbar, samples, opts.inflation);
}

}  // namespace

double lipschitz_from_samples(const NonlinearSystem& sys, double t, const Vec& qbar,
                              const std::vector<Vec>& q_samples, double inflation) {
  const Vec pbar = sys.phi(t, qbar);
  double worst = 0.0;
  for (const Vec& q : q_samples) {
    const double dq = (q - qbar).norm();
    if (dq < 1e-12) continue;
    worst = std::max(worst, (sys.phi(t, q) - pbar).norm() / dq);
  }
  return inflation * worst;
}

std::vector<Vec> sample_lipschitz_region(const NonlinearSystem& sys, const LipschitzRegion& region,
                                         const Vec& qbar, int n_samples, std::uint64_t seed,
                                         int node) {
  if (n_samples < 2) {
    throw std::invalid_argument("lipschitz estimation needs n_samples >= 2");
  }
  std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(node)));
  std::vector<Vec> samples;
  samples.reserve(n_samples);
  if (region.q_shape.size() > 0) {
    if (min_eigenvalue(region.q_shape) <= 0.0) {
      throw DegenerateRegionError("lipschitz q-region is not positive definite");
    }
    const Mat half = sqrt_psd(region.q_shape);
    for (int i = 0; i < n_samples; ++i) {
      samples.push_back(qbar + half * sample_unit_ball(rng, sys.dims.n_q));
    }
    return samples;
  }
  if (min_eigenvalue(region.state_shape) <= 0.0) {
    throw DegenerateRegionError("lipschitz state region is not positive definite");
  }
  Mat map = sys.C;
  if (region.feedback_guess.size() > 0) {
    map += sys.D * region.feedback_guess;
  }
  const Mat half = sqrt_psd(region.state_shape);
  const bool disturb = sys.dims.n_w > 0 && sys.G.norm() > 0.0;
  for (int i = 0; i < n_samples; ++i) {
    Vec dq = map * (half * sample_unit_ball(rng, sys.dims.n_x));
    if (disturb) {
      dq += sys.G * sample_unit_ball(rng, sys.dims.n_w);
    }
    samples.push_back(qbar + dq);
  }
  return samples;
}

Vec estimate_lipschitz(const NonlinearSystem& sys, const NominalTrajectory& traj,
                       const LipschitzRegion& region, const LipschitzOptions& opts) {
  const int n_nodes = traj.N + 1;
  Vec gamma = Vec::Zero(n_nodes);
  if (sys.dims.n_p == 0 || !sys.phi) {
    return gamma;
  }
  if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n_nodes; ++k) {
      gamma(k) = estimate_at_node(sys, traj, region, opts, k);
    }
  } else {
    for (int k = 0; k < n_nodes; ++k) {
      gamma(k) = estimate_at_node(sys, traj, region, opts, k);
    }
  }
  return gamma;
}

}  // namespace funnel
