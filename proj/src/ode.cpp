#include "funnel/ode.hpp"

#include <algorithm>
#include <cmath>

#include "funnel/errors.hpp"

namespace funnel {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 35.0 / 384 - 5179.0 / 57600, kE3 = 500.0 / 1113 - 7571.0 / 16695,
                 kE4 = 125.0 / 192 - 393.0 / 640, kE5 = -2187.0 / 6784 + 92097.0 / 339200,
                 kE6 = 11.0 / 84 - 187.0 / 2100, kE7 = -1.0 / 40;
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;

struct Stepper {
  const OdeRhs& rhs;
  Vec k1, k2, k3, k4, k5, k6, k7, y_tmp;

  explicit Stepper(const OdeRhs& rhs, Eigen::Index n)
      : rhs(rhs), k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), y_tmp(n) {}

  // One trial step from (t, y) with size h; fills y_new and the embedded
  // error estimate. k1 must already hold rhs(t, y) (FSAL).
  void trial(double t, const Vec& y, double h, Vec& y_new, Vec& err) {
    y_tmp = y + h * (kA21 * k1);
    rhs(t + kC2 * h, y_tmp, k2);
    y_tmp = y + h * (kA31 * k1 + kA32 * k2);
    rhs(t + kC3 * h, y_tmp, k3);
    y_tmp = y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3);
    rhs(t + kC4 * h, y_tmp, k4);
    y_tmp = y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4);
    rhs(t + kC5 * h, y_tmp, k5);
    y_tmp = y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5);
    rhs(t + h, y_tmp, k6);
    y_new = y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    rhs(t + h, y_new, k7);
    err = h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);
  }
};

double error_norm(const Vec& err, const Vec& y0, const Vec& y1, const OdeOptions& opts) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale =
        opts.abs_tol + opts.rel_tol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double r = err(i) / scale;
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(err.size()));
}

// Core loop; `checkpoint` is called whenever the integration time passes one
// of the requested output times (steps are clipped so they land exactly).
Vec run(const OdeRhs& rhs, double t0, double t1, const Vec& y0,
        const std::vector<double>& t_out,
        const std::function<void(double, const Vec&)>& observe, const OdeOptions& opts) {
  if (!(t1 > t0)) {
    if (t1 == t0) {
      for (double tq : t_out) {
        (void)tq;
        observe(t0, y0);
      }
      return y0;
    }
    throw IntegrationError("integrate: t1 < t0 not supported");
  }

  Stepper st(rhs, y0.size());
  Vec y = y0, y_new(y0.size()), err(y0.size());
  double t = t0;
  double h = opts.initial_step > 0 ? opts.initial_step : (t1 - t0) / 100.0;
  const double h_min = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t1));
  std::size_t next_out = 0;
  long steps = 0;

  while (next_out < t_out.size() && t_out[next_out] <= t0) {
    observe(t0, y);
    ++next_out;
  }

  rhs(t, y, st.k1);
  while (t < t1) {
    if (++steps > opts.max_steps) {
      throw IntegrationError("integrate: step budget exhausted");
    }
    bool hit_output = false;
    double h_step = std::min(h, t1 - t);
    if (next_out < t_out.size() && t + h_step >= t_out[next_out]) {
      h_step = t_out[next_out] - t;
      hit_output = true;
    }
    if (h_step < h_min) {
      if (hit_output) {  // output time coincides with t
        observe(t, y);
        ++next_out;
        continue;
      }
      throw IntegrationError("integrate: step underflow");
    }
    st.trial(t, y, h_step, y_new, err);
    const double e = error_norm(err, y, y_new, opts);
    if (e <= 1.0) {
      t += h_step;
      y.swap(y_new);
      st.k1.swap(st.k7);  // FSAL
      if (hit_output) {
        observe(t, y);
        ++next_out;
      }
      const double grow = e > 0 ? 0.9 * std::pow(e, -0.2) : 5.0;
      h = h_step * std::clamp(grow, 0.2, 5.0);
    } else {
      h = h_step * std::clamp(0.9 * std::pow(e, -0.2), 0.1, 1.0);
      if (h < h_min) {
        throw IntegrationError("integrate: step underflow (rejected step)");
      }
    }
  }
  return y;
}

}  // namespace

Vec integrate(const OdeRhs& rhs, double t0, double t1, const Vec& y0, const OdeOptions& opts) {
  return run(rhs, t0, t1, y0, {}, [](double, const Vec&) {}, opts);
}

Vec integrate_observe(const OdeRhs& rhs, double t0, double t1, const Vec& y0,
                      const std::vector<double>& t_out,
                      const std::function<void(double, const Vec&)>& observe,
                      const OdeOptions& opts) {
  return run(rhs, t0, t1, y0, t_out, observe, opts);
}

Vec integrate_rk4(const OdeRhs& rhs, double t0, double t1, const Vec& y0, int n_steps) {
  const double h = (t1 - t0) / n_steps;
  Vec y = y0;
  Vec k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), tmp(y.size());
  for (int i = 0; i < n_steps; ++i) {
    const double t = t0 + i * h;
    rhs(t, y, k1);
    tmp = y + 0.5 * h * k1;
    rhs(t + 0.5 * h, tmp, k2);
    tmp = y + 0.5 * h * k2;
    rhs(t + 0.5 * h, tmp, k3);
    tmp = y + h * k3;
    rhs(t + h, tmp, k4);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

}  // namespace funnel
