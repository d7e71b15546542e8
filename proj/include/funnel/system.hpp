#pragma once

#include <functional>
#include <string>
#include <vector>

#include "funnel/linalg.hpp"

namespace funnel {

struct SystemDims {
  int n_x = 0;  // states
  int n_u = 0;  // inputs
  int n_w = 0;  // disturbances
  int n_p = 0;  // lumped-nonlinearity outputs (0 for purely linear systems)
  int n_q = 0;  // lumped-nonlinearity arguments
};

using DynamicsFn = std::function<Vec(double t, const Vec& x, const Vec& u, const Vec& w)>;
using NonlinearityFn = std::function<Vec(double t, const Vec& q)>;
using JacobiansFn =
    std::function<void(double t, const Vec& x, const Vec& u, Mat& A, Mat& B, Mat& F)>;
using RefFn = std::function<Vec(double t)>;

/// Continuous-time system x' = f(t, x, u, w) together with its Lur'e
/// decomposition x' = A(t)x + B(t)u + F(t)w + E * phi(t, Cx + Du + Gw).
/// E, C, D, G are constant selector matrices; A, B, F are the Jacobians of f
/// along a reference trajectory. `jacobians` is optional; when absent,
/// linearize() falls back to central finite differences.
struct NonlinearSystem {
  std::string name;
  SystemDims dims;
  DynamicsFn f;
  JacobiansFn jacobians;  // may be null
  NonlinearityFn phi;     // may be null when n_p == 0
  Mat E;                  // n_x x n_p
  Mat C;                  // n_q x n_x
  Mat D;                  // n_q x n_u
  Mat G;                  // n_q x n_w
};

/// System matrices at one point of the reference trajectory.
struct Linearization {
  Mat A;  // n_x x n_x
  Mat B;  // n_x x n_u
  Mat F;  // n_x x n_w
};

/// Jacobians and local Lipschitz constants at every node of a trajectory.
struct LureLinearization {
  std::vector<Linearization> nodes;
  Vec gamma;  // one nonnegative constant per node

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Evaluates f with dimension checks (throws std::invalid_argument).
Vec evaluate_dynamics(const NonlinearSystem& sys, double t, const Vec& x, const Vec& u,
                      const Vec& w);

/// Jacobians of f at (t, x, u, 0). Uses the analytic callback when provided,
/// otherwise central differences with step max(1e-6, 1e-6 * ||x||_inf).
/// Throws LinearizationError on non-finite entries.
Linearization linearize(const NonlinearSystem& sys, double t, const Vec& x, const Vec& u);

/// Returns (p, q) with q = Cx + Du + Gw and p = phi(t, q).
std::pair<Vec, Vec> nonlinearity_residual(const NonlinearSystem& sys, double t, const Vec& x,
                                          const Vec& u, const Vec& w);

/// The planar unicycle benchmark system: states (r_x, r_y, theta), inputs
/// (u_v, u_theta), disturbance gain 0.1 on the position rates. The returned
/// system has no nonlinearity bound yet (phi is null); bind_unicycle_lure
/// attaches it once a reference trajectory is available.
NonlinearSystem unicycle_system();

/// Attaches the unicycle's lumped nonlinearity, which depends on the
/// reference point: phi(t, q) collects the difference between (u_v cos theta,
/// u_v sin theta) and its first-order approximation at the reference.
/// q = (theta, u_v).
void bind_unicycle_lure(NonlinearSystem& sys, RefFn xbar_of_t, RefFn ubar_of_t);

/// Looks up a built-in system by name ("unicycle"); throws
/// std::invalid_argument for unknown names.
NonlinearSystem make_system(const std::string& name);

}  // namespace funnel
