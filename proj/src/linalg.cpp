#include "funnel/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace funnel {

Vec vec(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat unvec(const Vec& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw std::invalid_argument("unvec: size mismatch");
  }
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

Vec svec(const Mat& s, double offdiag) {
  const int n = static_cast<int>(s.rows());
  Vec out(tri_size(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      out(tri_index(i, j)) = (i == j) ? s(i, j) : offdiag * s(i, j);
    }
  }
  return out;
}

Mat smat(const Vec& v, double offdiag) {
  // Solve tri_size(n) = v.size() for n.
  const int n = static_cast<int>((std::sqrt(8.0 * static_cast<double>(v.size()) + 1.0) - 1.0) / 2.0 + 0.5);
  if (tri_size(n) != v.size()) {
    throw std::invalid_argument("smat: not a triangular size");
  }
  Mat out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const double entry = (i == j) ? v(tri_index(i, j)) : v(tri_index(i, j)) / offdiag;
      out(i, j) = entry;
      out(j, i) = entry;
    }
  }
  return out;
}

Mat commutation_matrix(int rows, int cols) {
  Mat k = Mat::Zero(rows * cols, rows * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      // vec(N) entry (j*rows + i) moves to vec(N^T) entry (i*cols + j).
      k(i * cols + j, j * rows + i) = 1.0;
    }
  }
  return k;
}

Mat duplication_matrix(int n) {
  Mat d = Mat::Zero(n * n, tri_size(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      d(j * n + i, tri_index(std::min(i, j), std::max(i, j))) = 1.0;
    }
  }
  return d;
}

Mat tri_projector(int n) {
  Mat p = Mat::Zero(tri_size(n), n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (i == j) {
        p(tri_index(i, j), j * n + i) = 1.0;
      } else {
        p(tri_index(i, j), j * n + i) = 0.5;
        p(tri_index(i, j), i * n + j) = 0.5;
      }
    }
  }
  return p;
}

double min_eigenvalue(const Mat& sym) {
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Mat& sym) {
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Mat sqrt_psd(const Mat& sym) {
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  Vec lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

double ellipsoid_support(const Vec& a, const Mat& Q, double c) {
  return std::sqrt(a.dot(Q * a) / c);
}

bool is_finite(const Mat& m) {
  return m.allFinite();
}

}  // namespace funnel
