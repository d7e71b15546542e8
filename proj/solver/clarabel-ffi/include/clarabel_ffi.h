/* C ABI of the Clarabel FFI staticlib (see solver/clarabel-ffi/src/lib.rs). */
#ifndef CLARABEL_FFI_H
#define CLARABEL_FFI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ClarabelFfiOptions {
  unsigned max_iter;
  double time_limit; /* seconds */
  int verbose;
  double tol_gap_abs;
  double tol_gap_rel;
  double tol_feas;
  double tol_infeas_abs;
  double tol_infeas_rel;
  double static_reg;
  int equilibrate; /* Ruiz equilibration on/off */
} ClarabelFfiOptions;

typedef struct ClarabelFfiResult {
  int status;
  double obj_val;
  unsigned iterations;
  double solve_time;
} ClarabelFfiResult;

enum {
  CLARABEL_FFI_UNSOLVED = 0,
  CLARABEL_FFI_SOLVED = 1,
  CLARABEL_FFI_ALMOST_SOLVED = 2,
  CLARABEL_FFI_PRIMAL_INFEASIBLE = 3,
  CLARABEL_FFI_ALMOST_PRIMAL_INFEASIBLE = 4,
  CLARABEL_FFI_DUAL_INFEASIBLE = 5,
  CLARABEL_FFI_ALMOST_DUAL_INFEASIBLE = 6,
  CLARABEL_FFI_MAX_ITERATIONS = 7,
  CLARABEL_FFI_MAX_TIME = 8,
  CLARABEL_FFI_NUMERICAL_ERROR = 9,
  CLARABEL_FFI_INSUFFICIENT_PROGRESS = 10
};

enum {
  CLARABEL_FFI_CONE_ZERO = 0,
  CLARABEL_FFI_CONE_NONNEG = 1,
  CLARABEL_FFI_CONE_SOC = 2,
  CLARABEL_FFI_CONE_PSD_TRIANGLE = 3,
  CLARABEL_FFI_CONE_EXP = 4
};

/* Solves min c'x s.t. Ax + s = b, s in K. A is CSC (m x n).
 * PSD cone slacks use the scaled upper-triangle convention (column-major,
 * off-diagonal entries multiplied by sqrt(2)); the dim entry is the matrix
 * side length. Exponential cones have dim 3. Returns 0 on success. */
int clarabel_ffi_solve(size_t n, size_t m, const double* cost, const size_t* a_colptr,
                       const size_t* a_rowidx, const double* a_vals, size_t a_nnz,
                       const double* b, size_t n_cones, const int* cone_kinds,
                       const size_t* cone_dims, const ClarabelFfiOptions* opts, double* x_out,
                       double* s_out, double* z_out, ClarabelFfiResult* result);

#ifdef __cplusplus
}
#endif

#endif /* CLARABEL_FFI_H */
