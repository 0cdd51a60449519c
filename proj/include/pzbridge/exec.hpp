#pragma once

namespace pzbridge {

/// Execution policy for the data-parallel kernels (Monte Carlo sampling and
/// sweep grids).  Serial is the reference path; Parallel uses OpenMP when the
/// build has it and falls back to the serial loop otherwise.  Both paths
/// produce bit-identical results: parallel workers only fill disjoint slots
/// of a preallocated buffer and every reduction runs in a fixed order.
enum class Exec {
    Serial,
    Parallel,
};

/// Number of worker threads the Parallel policy would use (1 without OpenMP).
int parallel_thread_count();

}  // namespace pzbridge
