#pragma once

#include <string>
#include <vector>

#include "funnel/ode.hpp"
#include "funnel/system.hpp"

namespace funnel {

/// Nominal trajectory on a uniform node grid. Inputs are interpolated
/// piecewise-linearly between nodes; states between nodes are defined by the
/// flow of the dynamics (see DenseNominal), not by interpolation.
struct NominalTrajectory {
  double t0 = 0.0;
  double tf = 0.0;
  int N = 0;                 // interval count; N + 1 nodes
  std::vector<double> t;     // node times
  std::vector<Vec> x;        // node states
  std::vector<Vec> u;        // node inputs

  double dt() const { return (tf - t0) / N; }

  /// Piecewise-linear input at time tq (clamped to [t0, tf]).
  Vec input_at(double tq) const;

  /// Index of the interval containing tq, in [0, N-1].
  int interval_of(double tq) const;
};

using InputSchedule = std::function<Vec(double t)>;

/// Integrates the dynamics from x0 under the schedule sampled at the nodes
/// and held piecewise-linear in between, with zero disturbance. The node
/// states are produced interval-by-interval by adaptive integration, so the
/// per-interval defect is zero by construction up to integrator tolerance.
NominalTrajectory integrate_nominal(const NonlinearSystem& sys, const Vec& x0,
                                    const InputSchedule& schedule, double t0, double tf, int N,
                                    const OdeOptions& opts = {});

/// Re-integrates (never just interpolates) onto a new grid of N_new intervals.
/// New node inputs are the piecewise-linear interpolation of the old ones.
NominalTrajectory resample(const NonlinearSystem& sys, const NominalTrajectory& traj, int N_new,
                           const OdeOptions& opts = {});

/// Worst relative defect  max_k ||x_{k+1} - flow(x_k)|| / max(1, ||x_{k+1}||)
/// computed with an independent high-accuracy integration.
double max_defect(const NonlinearSystem& sys, const NominalTrajectory& traj,
                  const OdeOptions& opts = {});

/// CSV exchange format: header "t,x1..xn,u1..um", one row per node.
NominalTrajectory read_trajectory_csv(const std::string& path, int n_x, int n_u);
void write_trajectory_csv(const NominalTrajectory& traj, const std::string& path);

/// Dense evaluation of the nominal state between nodes. One adaptive
/// integration pass per interval stores (x, x') on a fixed sub-grid; queries
/// are cubic Hermite interpolation between sub-grid points.
class DenseNominal {
 public:
  DenseNominal(const NonlinearSystem& sys, const NominalTrajectory& traj, int substeps = 32,
               const OdeOptions& opts = {});

  Vec state(double t) const;
  Vec input(double t) const { return traj_.input_at(t); }
  const NominalTrajectory& trajectory() const { return traj_; }

 private:
  NominalTrajectory traj_;
  int substeps_;
  double dt_sub_;
  std::vector<Vec> xs_;   // states on the sub-grid, (N*substeps + 1) entries
  std::vector<Vec> fs_;   // state derivatives there
};

}  // namespace funnel
