#pragma once

#include <functional>
#include <vector>

#include "funnel/linalg.hpp"

namespace funnel {

using OdeRhs = std::function<void(double t, const Vec& y, Vec& dy)>;

struct OdeOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 0.0;  // 0: pick from the interval length
  long max_steps = 2'000'000;
};

/// Adaptive Dormand-Prince 5(4) integration of y' = f(t, y) from t0 to t1.
/// Throws IntegrationError on step underflow or step-budget exhaustion.
Vec integrate(const OdeRhs& rhs, double t0, double t1, const Vec& y0,
              const OdeOptions& opts = {});

/// Same integration, invoking `observe(t, y)` at every time in `t_out`
/// (strictly increasing, within [t0, t1]; endpoints allowed). Returns y(t1).
Vec integrate_observe(const OdeRhs& rhs, double t0, double t1, const Vec& y0,
                      const std::vector<double>& t_out,
                      const std::function<void(double, const Vec&)>& observe,
                      const OdeOptions& opts = {});

/// Fixed-step classical Runge-Kutta, kept as an independent reference for
/// cross-checking the adaptive path in tests.
Vec integrate_rk4(const OdeRhs& rhs, double t0, double t1, const Vec& y0, int n_steps);

}  // namespace funnel
