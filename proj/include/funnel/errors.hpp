#pragma once

#include <stdexcept>
#include <string>

namespace funnel {

/// Base class for all errors raised by this library.
class FunnelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Jacobian evaluation produced non-finite entries.
class LinearizationError : public FunnelError {
 public:
  using FunnelError::FunnelError;
};

/// Adaptive integrator could not reach the requested tolerance (step underflow
/// or step budget exhausted).
class IntegrationError : public FunnelError {
 public:
  using FunnelError::FunnelError;
};

/// Lipschitz sampling region is (numerically) a single point.
class DegenerateRegionError : public FunnelError {
 public:
  using FunnelError::FunnelError;
};

/// The nominal trajectory violates a linearized constraint, so no funnel of
/// positive size can satisfy the containment condition there.
class InfeasibleNominalError : public FunnelError {
 public:
  InfeasibleNominalError(const std::string& what, int node, int constraint_index)
      : FunnelError(what), node(node), constraint_index(constraint_index) {}
  int node;
  int constraint_index;
};

/// Conic solver failed for numerical reasons (infeasibility is reported as a
/// structured result, not an exception).
class SolverError : public FunnelError {
 public:
  using FunnelError::FunnelError;
};

}  // namespace funnel
