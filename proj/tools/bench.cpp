// Timing comparison of the serial reference kernels against the OpenMP paths.
// Both must agree bit for bit; the table reports wall time and speedup.

#include <chrono>
#include <cstdio>
#include <string>

#include "pzbridge/config.hpp"
#include "pzbridge/csv.hpp"
#include "pzbridge/error_budget.hpp"
#include "pzbridge/report.hpp"

namespace {

using namespace pzbridge;
namespace chrono = std::chrono;

template <class F>
double time_seconds(F&& fn) {
    const auto begin = chrono::steady_clock::now();
    fn();
    const auto end = chrono::steady_clock::now();
    return chrono::duration<double>(end - begin).count();
}

void print_row(const std::string& name, double serial_s, double parallel_s,
               bool identical) {
    std::printf("%-34s %10.3f ms %10.3f ms %8.2fx   %s\n", name.c_str(),
                serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
                identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
    RunConfig cfg;
    std::printf("threads available: %d\n\n", parallel_thread_count());
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        const MechanicalParams mech(cfg.h, cfg.alpha);
        const DeviationModel model{DeviationMode::IndependentAll, cfg.delta};
        constexpr std::size_t n = 2'000'000;
        MonteCarloEstimate serial_est{}, parallel_est{};
        const double ts = time_seconds([&] {
            serial_est = offset_variance_monte_carlo(ConfigId::C, mech, cfg.coeffs,
                                                     cfg.v_ex, model, n, cfg.seed,
                                                     Exec::Serial);
        });
        const double tp = time_seconds([&] {
            parallel_est = offset_variance_monte_carlo(ConfigId::C, mech, cfg.coeffs,
                                                       cfg.v_ex, model, n, cfg.seed,
                                                       Exec::Parallel);
        });
        print_row("offset Monte Carlo (2e6 samples)", ts, tp,
                  serial_est.mean == parallel_est.mean &&
                      serial_est.std_error == parallel_est.std_error);
    }

    {
        RunConfig sweep_cfg = cfg;
        sweep_cfg.alpha_points = 2001;
        std::string serial_csv, parallel_csv;
        const double ts = time_seconds([&] {
            serial_csv = to_csv(reproduce_figure(4, sweep_cfg, Exec::Serial));
        });
        const double tp = time_seconds([&] {
            parallel_csv = to_csv(reproduce_figure(4, sweep_cfg, Exec::Parallel));
        });
        print_row("max-nonlinearity sweep (2001 pts)", ts, tp,
                  serial_csv == parallel_csv);
    }

    {
        RunConfig sweep_cfg = cfg;
        sweep_cfg.theta_points = 400001;
        std::string serial_csv, parallel_csv;
        const double ts = time_seconds([&] {
            serial_csv = to_csv(reproduce_figure(5, sweep_cfg, Exec::Serial));
        });
        const double tp = time_seconds([&] {
            parallel_csv = to_csv(reproduce_figure(5, sweep_cfg, Exec::Parallel));
        });
        print_row("directional-noise sweep (4e5 pts)", ts, tp,
                  serial_csv == parallel_csv);
    }

    return 0;
}
