#pragma once

#include <cstddef>
#include <vector>

#include "pzbridge/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pzbridge {

/// n evenly spaced points covering [lo, hi] inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Evaluates f at every grid point.  Each slot is written exactly once, so
/// the Parallel policy is bit-identical to the Serial reference.
template <class F>
std::vector<double> map_grid(const std::vector<double>& grid, F&& f, Exec exec) {
    std::vector<double> out(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = f(grid[static_cast<std::size_t>(i)]);
    }
#ifndef _OPENMP
    (void)exec;
#endif
    return out;
}

}  // namespace pzbridge
