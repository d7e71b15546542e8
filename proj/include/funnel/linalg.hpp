#pragma once

#include <Eigen/Dense>

namespace funnel {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Number of entries in the upper triangle of an n x n symmetric matrix.
constexpr int tri_size(int n) { return n * (n + 1) / 2; }

/// Index of entry (i, j), i <= j, in the column-major stacked upper triangle.
constexpr int tri_index(int i, int j) { return j * (j + 1) / 2 + i; }

/// Column-stacking vectorization.
Vec vec(const Mat& m);

/// Inverse of vec for a rows x cols matrix.
Mat unvec(const Vec& v, int rows, int cols);

/// Upper triangle of a symmetric matrix, column-major, with off-diagonal
/// entries scaled by `offdiag`. offdiag = sqrt(2) gives the isometric
/// vectorization used by conic solvers; offdiag = 1 gives plain storage.
Vec svec(const Mat& s, double offdiag = 1.0);

/// Inverse of svec.
Mat smat(const Vec& v, double offdiag = 1.0);

/// Commutation matrix K with K * vec(N) = vec(N^T) for all `rows` x `cols` N.
Mat commutation_matrix(int rows, int cols);

/// Maps the stacked upper triangle of a symmetric n x n matrix to its full
/// column-stacked form: duplication_matrix(n) * svec(S) = vec(S).
Mat duplication_matrix(int n);

/// Left inverse of the duplication matrix; symmetrizes as it projects,
/// i.e. tri_projector(n) * vec(M) = svec((M + M^T)/2).
Mat tri_projector(int n);

double min_eigenvalue(const Mat& sym);
double max_eigenvalue(const Mat& sym);

/// Symmetric positive semidefinite square root.
Mat sqrt_psd(const Mat& sym);

/// Largest value of a' * eta over the ellipsoid {eta : eta' Q^{-1} eta <= 1/c}.
double ellipsoid_support(const Vec& a, const Mat& Q, double c);

bool is_finite(const Mat& m);

}  // namespace funnel
