#pragma once

namespace funnel {

/// Execution policy for the data-parallel kernels. Every kernel has a plain
/// serial loop that serves as the reference implementation in tests and a
/// work-identical OpenMP variant; per-item work is pure, so both produce
/// bit-identical results.
enum class Exec { serial, parallel };

/// Threads the parallel policy will use (1 when built without OpenMP).
int hardware_threads();

}  // namespace funnel
