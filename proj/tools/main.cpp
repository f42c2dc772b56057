// Command-line driver for the fast sweeping solvers: benchmark selection,
// single-grid vs sparse-grid runs, refinement studies, and CSV / field /
// timing outputs.
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "fsweep/runner.hpp"

namespace {

constexpr int kExitInvalidConfig = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIoFailure = 4;

std::string describe(const fsweep::RunReport& report) {
    std::string text = "problem " + report.problem + ", " +
                       (report.mode == fsweep::RunMode::single ? "single grid" : "sparse grid") +
                       ", " + fsweep::to_string(report.derivative) + " derivatives\n";
    char buf[160];
    for (const auto& row : report.rows) {
        if (row.has_error)
            std::snprintf(buf, sizeof(buf),
                          "  N %5d  L1 %.3e  Linf %.3e  sweeps %6ld  %.2fs\n", row.n, row.l1,
                          row.linf, row.iterations, row.total_seconds);
        else
            std::snprintf(buf, sizeof(buf), "  N %5d  sweeps %6ld  %.2fs\n", row.n,
                          row.iterations, row.total_seconds);
        text += buf;
    }
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    fsweep::RunConfig cfg;

    // The config file provides defaults; flags parsed afterwards override.
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc)
            path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            path = arg.substr(9);
        if (!path.empty()) {
            try {
                fsweep::parse_config_file(path, cfg);
            } catch (const std::invalid_argument& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return kExitInvalidConfig;
            } catch (const std::exception& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return kExitIoFailure;
            }
        }
    }

    CLI::App app{"Fast sweeping solver for Eikonal and static Hamilton-Jacobi equations"};
    std::string config_path;
    app.add_option("--config", config_path, "run configuration file (key = value; flags win)");
    app.add_option("--example", cfg.example, "benchmark id 1..6");
    std::string case_str;
    app.add_option("--case", case_str, "2d or 3d (examples 5 and 6)");
    std::string mode_str;
    app.add_option("--mode", mode_str, "single or sparse");
    std::string prolongation_str;
    app.add_option("--prolongation", prolongation_str, "lagrange or weno");
    std::string deriv_str;
    app.add_option("--deriv", deriv_str, "first-order, weno3 or linear3");
    app.add_option("--nh", cfg.nh, "cells per axis (single mode)");
    app.add_option("--nr", cfg.nr, "root-grid cells per axis (sparse mode)");
    app.add_option("--nl", cfg.nl, "finest refinement level (sparse mode)");
    double gamma = -1.0;
    app.add_option("--gamma", gamma, "iteration parameter override");
    app.add_option("--epsilon", cfg.epsilon, "WENO regularization");
    app.add_option("--delta", cfg.delta, "convergence threshold");
    app.add_option("--first-order-delta", cfg.first_order_delta, "warm-start threshold");
    app.add_option("--max-iter", cfg.max_iterations, "sweep limit per solve");
    app.add_option("--workers", cfg.workers,
                   "concurrent component solves in sparse mode (0 = one per core)");
    app.add_option("--study", cfg.study, "refinement ladder length (doubling N per row)");
    app.add_option("--table-out", cfg.table_out, "CSV table path");
    app.add_option("--field-out", cfg.field_out, "field dump path (last row)");
    app.add_option("--timing-out", cfg.timing_out, "timing record path (JSON)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!case_str.empty()) cfg.dim_case = fsweep::detail::parse_case(case_str);
        if (!mode_str.empty()) cfg.mode = fsweep::detail::parse_mode(mode_str);
        if (!prolongation_str.empty())
            cfg.prolongation = fsweep::detail::parse_prolongation(prolongation_str);
        if (!deriv_str.empty()) cfg.derivative = fsweep::detail::parse_derivative(deriv_str);
        if (gamma > 0.0) cfg.gamma = gamma;

        auto report = fsweep::run_config(cfg);
        std::fputs(describe(report).c_str(), stdout);
        return 0;
    } catch (const fsweep::SolverError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIoFailure;
    }
}
