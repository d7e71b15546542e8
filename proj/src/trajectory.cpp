#include "funnel/trajectory.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "funnel/errors.hpp"

namespace funnel {
namespace {

// RHS of the nominal dynamics under a piecewise-linear input on [ta, tb].
OdeRhs nominal_rhs(const NonlinearSystem& sys, double ta, double tb, const Vec& ua,
                   const Vec& ub) {
  const Vec w0 = Vec::Zero(sys.dims.n_w);
  return [&sys, ta, tb, ua, ub, w0](double t, const Vec& x, Vec& dx) {
    const double lam = (t - ta) / (tb - ta);
    dx = sys.f(t, x, (1.0 - lam) * ua + lam * ub, w0);
  };
}

std::vector<double> uniform_grid(double t0, double tf, int N) {
  std::vector<double> t(N + 1);
  for (int k = 0; k <= N; ++k) t[k] = t0 + (tf - t0) * static_cast<double>(k) / N;
  return t;
}

}  // namespace

Vec NominalTrajectory::input_at(double tq) const {
  const int k = interval_of(tq);
  const double lam = std::clamp((tq - t[k]) / (t[k + 1] - t[k]), 0.0, 1.0);
  return (1.0 - lam) * u[k] + lam * u[k + 1];
}

int NominalTrajectory::interval_of(double tq) const {
  const double s = (tq - t0) / dt();
  return std::clamp(static_cast<int>(std::floor(s)), 0, N - 1);
}

NominalTrajectory integrate_nominal(const NonlinearSystem& sys, const Vec& x0,
                                    const InputSchedule& schedule, double t0, double tf, int N,
                                    const OdeOptions& opts) {
  if (N < 1 || !(tf > t0)) {
    throw std::invalid_argument("integrate_nominal: need N >= 1 and tf > t0");
  }
  NominalTrajectory traj;
  traj.t0 = t0;
  traj.tf = tf;
  traj.N = N;
  traj.t = uniform_grid(t0, tf, N);
  traj.u.resize(N + 1);
  for (int k = 0; k <= N; ++k) traj.u[k] = schedule(traj.t[k]);
  traj.x.resize(N + 1);
  traj.x[0] = x0;
  for (int k = 0; k < N; ++k) {
    traj.x[k + 1] = integrate(nominal_rhs(sys, traj.t[k], traj.t[k + 1], traj.u[k], traj.u[k + 1]),
                              traj.t[k], traj.t[k + 1], traj.x[k], opts);
  }
  return traj;
}

NominalTrajectory resample(const NonlinearSystem& sys, const NominalTrajectory& traj, int N_new,
                           const OdeOptions& opts) {
  if (N_new < 2) {
    throw std::invalid_argument("resample: N_new must be >= 2");
  }
  return integrate_nominal(
      sys, traj.x[0], [&traj](double t) { return traj.input_at(t); }, traj.t0, traj.tf, N_new,
      opts);
}

double max_defect(const NonlinearSystem& sys, const NominalTrajectory& traj,
                  const OdeOptions& opts) {
  double worst = 0.0;
  for (int k = 0; k < traj.N; ++k) {
    const Vec reached =
        integrate(nominal_rhs(sys, traj.t[k], traj.t[k + 1], traj.u[k], traj.u[k + 1]), traj.t[k],
                  traj.t[k + 1], traj.x[k], opts);
    const double defect =
        (traj.x[k + 1] - reached).norm() / std::max(1.0, traj.x[k + 1].norm());
    worst = std::max(worst, defect);
  }
  return worst;
}

NominalTrajectory read_trajectory_csv(const std::string& path, int n_x, int n_u) {
  std::ifstream in(path);
  if (!in) {
    throw FunnelError("cannot open trajectory file '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw FunnelError("trajectory file '" + path + "' is empty");
  }
  NominalTrajectory traj;
  const int cols = 1 + n_x + n_u;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(row, cell, ',')) {
      double v = 0.0;
      const char* begin = cell.data();
      const char* end = begin + cell.size();
      while (begin != end && *begin == ' ') ++begin;
      auto [ptr, ec] = std::from_chars(begin, end, v);
      if (ec != std::errc{}) {
        throw FunnelError("trajectory file '" + path + "': bad number '" + cell + "'");
      }
      vals.push_back(v);
    }
    if (static_cast<int>(vals.size()) != cols) {
      throw FunnelError("trajectory row with " + std::to_string(vals.size()) + " columns, expected " +
                        std::to_string(cols));
    }
    traj.t.push_back(vals[0]);
    traj.x.push_back(Eigen::Map<Vec>(vals.data() + 1, n_x));
    traj.u.push_back(Eigen::Map<Vec>(vals.data() + 1 + n_x, n_u));
  }
  if (traj.t.size() < 2) {
    throw FunnelError("trajectory file '" + path + "' has fewer than two nodes");
  }
  traj.N = static_cast<int>(traj.t.size()) - 1;
  traj.t0 = traj.t.front();
  traj.tf = traj.t.back();
  // Grid must be uniform to floating tolerance.
  const double h = (traj.tf - traj.t0) / traj.N;
  for (int k = 0; k <= traj.N; ++k) {
    if (std::abs(traj.t[k] - (traj.t0 + k * h)) > 1e-9 * std::max(1.0, traj.tf - traj.t0)) {
      throw FunnelError("trajectory grid is not uniform at row " + std::to_string(k));
    }
  }
  return traj;
}

void write_trajectory_csv(const NominalTrajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw FunnelError("cannot write trajectory file '" + path + "'");
  }
  const int n_x = static_cast<int>(traj.x[0].size());
  const int n_u = static_cast<int>(traj.u[0].size());
  out << "t";
  for (int i = 1; i <= n_x; ++i) out << ",x" << i;
  for (int i = 1; i <= n_u; ++i) out << ",u" << i;
  out << "\n";
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  for (int k = 0; k <= traj.N; ++k) {
    put(traj.t[k]);
    for (int i = 0; i < n_x; ++i) {
      out << ",";
      put(traj.x[k](i));
    }
    for (int i = 0; i < n_u; ++i) {
      out << ",";
      put(traj.u[k](i));
    }
    out << "\n";
  }
}

DenseNominal::DenseNominal(const NonlinearSystem& sys, const NominalTrajectory& traj,
                           int substeps, const OdeOptions& opts)
    : traj_(traj), substeps_(substeps), dt_sub_(traj.dt() / substeps) {
  const Vec w0 = Vec::Zero(sys.dims.n_w);
  xs_.resize(static_cast<std::size_t>(traj.N) * substeps + 1);
  fs_.resize(xs_.size());
  for (int k = 0; k < traj.N; ++k) {
    std::vector<double> t_out(substeps);
    for (int s = 1; s <= substeps; ++s) t_out[s - 1] = traj.t[k] + dt_sub_ * s;
    xs_[static_cast<std::size_t>(k) * substeps] = traj.x[k];
    int slot = k * substeps + 1;
    integrate_observe(
        nominal_rhs(sys, traj.t[k], traj.t[k + 1], traj.u[k], traj.u[k + 1]), traj.t[k],
        traj.t[k + 1], traj.x[k], t_out,
        [&](double, const Vec& x) { xs_[slot++] = x; }, opts);
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    const double t = traj.t0 + static_cast<double>(i) * dt_sub_;
    fs_[i] = sys.f(t, xs_[i], traj_.input_at(t), w0);
  }
}

Vec DenseNominal::state(double t) const {
  const double s = (t - traj_.t0) / dt_sub_;
  const int i = std::clamp(static_cast<int>(std::floor(s)), 0,
                           static_cast<int>(xs_.size()) - 2);
  const double lam = s - i;
  if (lam <= 0.0) return xs_[i];
  if (lam >= 1.0) return xs_[i + 1];
  // Cubic Hermite with endpoint derivatives.
  const double h = dt_sub_;
  const double l2 = lam * lam, l3 = l2 * lam;
  return (2 * l3 - 3 * l2 + 1) * xs_[i] + (l3 - 2 * l2 + lam) * h * fs_[i] +
         (-2 * l3 + 3 * l2) * xs_[i + 1] + (l3 - l2) * h * fs_[i + 1];
}

}  // namespace funnel
