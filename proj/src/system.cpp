#include "funnel/system.hpp"

#include <cmath>

#include "funnel/errors.hpp"

namespace funnel {
namespace {

void check_dims(const NonlinearSystem& sys, const Vec& x, const Vec& u, const Vec& w) {
  if (x.size() != sys.dims.n_x || u.size() != sys.dims.n_u || w.size() != sys.dims.n_w) {
    throw std::invalid_argument("dimension mismatch for system '" + sys.name + "': got x=" +
                                std::to_string(x.size()) + " u=" + std::to_string(u.size()) +
                                " w=" + std::to_string(w.size()));
  }
}

double fd_step(const Vec& at) {
  return std::max(1e-6, 1e-6 * at.lpNorm<Eigen::Infinity>());
}

}  // namespace

Vec evaluate_dynamics(const NonlinearSystem& sys, double t, const Vec& x, const Vec& u,
                      const Vec& w) {
  check_dims(sys, x, u, w);
  return sys.f(t, x, u, w);
}

Linearization linearize(const NonlinearSystem& sys, double t, const Vec& x, const Vec& u) {
  const Vec w0 = Vec::Zero(sys.dims.n_w);
  check_dims(sys, x, u, w0);
  Linearization lin;
  if (sys.jacobians) {
    lin.A.resize(sys.dims.n_x, sys.dims.n_x);
    lin.B.resize(sys.dims.n_x, sys.dims.n_u);
    lin.F.resize(sys.dims.n_x, sys.dims.n_w);
    sys.jacobians(t, x, u, lin.A, lin.B, lin.F);
  } else {
    auto central = [&](auto&& eval, const Vec& at, int n_cols) {
      Mat jac(sys.dims.n_x, n_cols);
      const double h = fd_step(at);
      for (int j = 0; j < n_cols; ++j) {
        Vec hi = at, lo = at;
        hi(j) += h;
        lo(j) -= h;
        jac.col(j) = (eval(hi) - eval(lo)) / (2.0 * h);
      }
      return jac;
    };
    lin.A = central([&](const Vec& xp) { return sys.f(t, xp, u, w0); }, x, sys.dims.n_x);
    lin.B = central([&](const Vec& up) { return sys.f(t, x, up, w0); }, u, sys.dims.n_u);
    lin.F = central([&](const Vec& wp) { return sys.f(t, x, u, wp); }, w0, sys.dims.n_w);
  }
  if (!is_finite(lin.A) || !is_finite(lin.B) || !is_finite(lin.F)) {
    throw LinearizationError("linearize: non-finite Jacobian entries at t=" + std::to_string(t));
  }
  return lin;
}

std::pair<Vec, Vec> nonlinearity_residual(const NonlinearSystem& sys, double t, const Vec& x,
                                          const Vec& u, const Vec& w) {
  check_dims(sys, x, u, w);
  Vec q = sys.C * x + sys.D * u + sys.G * w;
  Vec p = sys.phi ? sys.phi(t, q) : Vec::Zero(sys.dims.n_p);
  return {p, q};
}

NonlinearSystem unicycle_system() {
  NonlinearSystem sys;
  sys.name = "unicycle";
  sys.dims = {3, 2, 2, 2, 2};
  sys.f = [](double, const Vec& x, const Vec& u, const Vec& w) {
    Vec dx(3);
    dx << u(0) * std::cos(x(2)) + 0.1 * w(0),  //
        u(0) * std::sin(x(2)) + 0.1 * w(1),    //
        u(1);
    return dx;
  };
  sys.jacobians = [](double, const Vec& x, const Vec& u, Mat& A, Mat& B, Mat& F) {
    const double th = x(2), v = u(0);
    A.setZero();
    A(0, 2) = -v * std::sin(th);
    A(1, 2) = v * std::cos(th);
    B.setZero();
    B(0, 0) = std::cos(th);
    B(1, 0) = std::sin(th);
    B(2, 1) = 1.0;
    F.setZero();
    F(0, 0) = 0.1;
    F(1, 1) = 0.1;
  };
  // Nonlinearity enters the position rates only.
  sys.E = Mat::Zero(3, 2);
  sys.E(0, 0) = 1.0;
  sys.E(1, 1) = 1.0;
  // q = (theta, u_v)
  sys.C = Mat::Zero(2, 3);
  sys.C(0, 2) = 1.0;
  sys.D = Mat::Zero(2, 2);
  sys.D(1, 0) = 1.0;
  sys.G = Mat::Zero(2, 2);
  return sys;
}

void bind_unicycle_lure(NonlinearSystem& sys, RefFn xbar_of_t, RefFn ubar_of_t) {
  sys.phi = [xbar = std::move(xbar_of_t), ubar = std::move(ubar_of_t)](double t, const Vec& q) {
    const double th_bar = xbar(t)(2);
    const double v_bar = ubar(t)(0);
    const double th = q(0), v = q(1);
    // u_v (cos, sin)(theta) minus its linearization at (th_bar, v_bar).
    Vec p(2);
    p(0) = v * std::cos(th) + v_bar * std::sin(th_bar) * th - std::cos(th_bar) * v;
    p(1) = v * std::sin(th) - v_bar * std::cos(th_bar) * th - std::sin(th_bar) * v;
    return p;
  };
}

NonlinearSystem make_system(const std::string& name) {
  if (name == "unicycle") return unicycle_system();
  throw std::invalid_argument("unknown system '" + name + "' (built-in systems: unicycle)");
}

}  // namespace funnel
