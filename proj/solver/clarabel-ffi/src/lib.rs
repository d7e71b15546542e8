//! Thin C ABI around the Clarabel interior-point solver.
//!
//! The C++ side hands over one conic program in Clarabel's native form
//! (min c'x  s.t.  Ax + s = b,  s in K) with A in compressed sparse column
//! layout, and receives the primal/slack/dual vectors back. No state is kept
//! between calls, so concurrent solves of different problems are safe.

use clarabel::algebra::CscMatrix;
use clarabel::solver::{
    DefaultSettingsBuilder, DefaultSolver, IPSolver, SolverStatus, SupportedConeT,
};

#[repr(C)]
pub struct FfiOptions {
    pub max_iter: u32,
    pub time_limit: f64,
    pub verbose: i32,
    pub tol_gap_abs: f64,
    pub tol_gap_rel: f64,
    pub tol_feas: f64,
    pub tol_infeas_abs: f64,
    pub tol_infeas_rel: f64,
    pub static_reg: f64,
    pub equilibrate: i32,
}

#[repr(C)]
pub struct FfiResult {
    pub status: i32,
    pub obj_val: f64,
    pub iterations: u32,
    pub solve_time: f64,
}

pub const STATUS_UNSOLVED: i32 = 0;
pub const STATUS_SOLVED: i32 = 1;
pub const STATUS_ALMOST_SOLVED: i32 = 2;
pub const STATUS_PRIMAL_INFEASIBLE: i32 = 3;
pub const STATUS_ALMOST_PRIMAL_INFEASIBLE: i32 = 4;
pub const STATUS_DUAL_INFEASIBLE: i32 = 5;
pub const STATUS_ALMOST_DUAL_INFEASIBLE: i32 = 6;
pub const STATUS_MAX_ITERATIONS: i32 = 7;
pub const STATUS_MAX_TIME: i32 = 8;
pub const STATUS_NUMERICAL_ERROR: i32 = 9;
pub const STATUS_INSUFFICIENT_PROGRESS: i32 = 10;

const CONE_ZERO: i32 = 0;
const CONE_NONNEG: i32 = 1;
const CONE_SOC: i32 = 2;
const CONE_PSD_TRIANGLE: i32 = 3;
const CONE_EXP: i32 = 4;

/// Solve one conic program. Returns 0 on success, a negative code when the
/// inputs could not even be loaded (bad cone tag, inconsistent dimensions).
///
/// # Safety
/// All pointers must reference buffers of the documented lengths:
/// `cost`/`x_out` hold `n` doubles, `b`/`s_out`/`z_out` hold `m` doubles,
/// `a_colptr` holds `n + 1` entries and `a_rowidx`/`a_vals` hold `a_nnz`.
#[no_mangle]
pub unsafe extern "C" fn clarabel_ffi_solve(
    n: usize,
    m: usize,
    cost: *const f64,
    a_colptr: *const usize,
    a_rowidx: *const usize,
    a_vals: *const f64,
    a_nnz: usize,
    b: *const f64,
    n_cones: usize,
    cone_kinds: *const i32,
    cone_dims: *const usize,
    opts: *const FfiOptions,
    x_out: *mut f64,
    s_out: *mut f64,
    z_out: *mut f64,
    result: *mut FfiResult,
) -> i32 {
    let cost = std::slice::from_raw_parts(cost, n).to_vec();
    let colptr = std::slice::from_raw_parts(a_colptr, n + 1).to_vec();
    let rowidx = std::slice::from_raw_parts(a_rowidx, a_nnz).to_vec();
    let vals = std::slice::from_raw_parts(a_vals, a_nnz).to_vec();
    let b = std::slice::from_raw_parts(b, m).to_vec();
    let kinds = std::slice::from_raw_parts(cone_kinds, n_cones);
    let dims = std::slice::from_raw_parts(cone_dims, n_cones);

    let a = CscMatrix::new(m, n, colptr, rowidx, vals);
    let p = CscMatrix::<f64>::zeros((n, n));

    let mut cones: Vec<SupportedConeT<f64>> = Vec::with_capacity(n_cones);
    for i in 0..n_cones {
        match kinds[i] {
            CONE_ZERO => cones.push(SupportedConeT::ZeroConeT(dims[i])),
            CONE_NONNEG => cones.push(SupportedConeT::NonnegativeConeT(dims[i])),
            CONE_SOC => cones.push(SupportedConeT::SecondOrderConeT(dims[i])),
            CONE_PSD_TRIANGLE => cones.push(SupportedConeT::PSDTriangleConeT(dims[i])),
            CONE_EXP => cones.push(SupportedConeT::ExponentialConeT()),
            _ => return -1,
        }
    }

    let o = &*opts;
    let settings = match DefaultSettingsBuilder::default()
        .verbose(o.verbose != 0)
        .max_iter(o.max_iter)
        .time_limit(o.time_limit)
        .tol_gap_abs(o.tol_gap_abs)
        .tol_gap_rel(o.tol_gap_rel)
        .tol_feas(o.tol_feas)
        .tol_infeas_abs(o.tol_infeas_abs)
        .tol_infeas_rel(o.tol_infeas_rel)
        .static_regularization_constant(o.static_reg)
        .equilibrate_enable(o.equilibrate != 0)
        .build()
    {
        Ok(s) => s,
        Err(_) => return -2,
    };

    let mut solver = match DefaultSolver::new(&p, &cost, &a, &b, &cones, settings) {
        Ok(s) => s,
        Err(_) => return -3,
    };
    solver.solve();

    let sol = &solver.solution;
    std::ptr::copy_nonoverlapping(sol.x.as_ptr(), x_out, n);
    std::ptr::copy_nonoverlapping(sol.s.as_ptr(), s_out, m);
    std::ptr::copy_nonoverlapping(sol.z.as_ptr(), z_out, m);

    let status = match sol.status {
        SolverStatus::Solved => STATUS_SOLVED,
        SolverStatus::AlmostSolved => STATUS_ALMOST_SOLVED,
        SolverStatus::PrimalInfeasible => STATUS_PRIMAL_INFEASIBLE,
        SolverStatus::AlmostPrimalInfeasible => STATUS_ALMOST_PRIMAL_INFEASIBLE,
        SolverStatus::DualInfeasible => STATUS_DUAL_INFEASIBLE,
        SolverStatus::AlmostDualInfeasible => STATUS_ALMOST_DUAL_INFEASIBLE,
        SolverStatus::MaxIterations => STATUS_MAX_ITERATIONS,
        SolverStatus::MaxTime => STATUS_MAX_TIME,
        SolverStatus::NumericalError => STATUS_NUMERICAL_ERROR,
        SolverStatus::InsufficientProgress => STATUS_INSUFFICIENT_PROGRESS,
        _ => STATUS_UNSOLVED,
    };
    (*result).status = status;
    (*result).obj_val = sol.obj_val;
    (*result).iterations = solver.info.iterations;
    (*result).solve_time = solver.info.solve_time;
    0
}
