// The fixed-point fast sweeping engine: boundary-band initialization with a
// first-order warm start, the Lax-Friedrichs numerical Hamiltonian, and the
// two-stage fixed-point Gauss-Seidel iteration over alternating sweep
// orderings with ghost-point extrapolation at domain boundaries.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsweep/field.hpp"
#include "fsweep/grid.hpp"
#include "fsweep/problem.hpp"
#include "fsweep/stencil.hpp"

namespace fsweep {

enum class DerivMode { first_order, weno3, linear3 };

inline const char* to_string(DerivMode m) {
    switch (m) {
        case DerivMode::first_order: return "first-order";
        case DerivMode::weno3: return "weno3";
        case DerivMode::linear3: return "linear3";
    }
    return "?";
}

struct SweepConfig {
    double gamma = 0.8;          // fixed-point step multiplier (CFL-like)
    double epsilon = 1e-6;       // WENO regularization
    double delta = 1e-11;        // convergence threshold on the sweep residual
    long max_iterations = 1000000;
    DerivMode derivative_mode = DerivMode::weno3;
    double initial_guess = 10.0;
    double warm_start_delta = 1e-4;  // threshold of the first-order presolve
    bool warm_start = true;
    int ordering_offset = 0;  // rotates the sweep-ordering cycle
    // Grid size defining the physical width of the pinned band; 0 means the
    // grid's own largest spacing. Component solves of a sparse family share
    // the family scale so that every component pins the same region.
    double band_scale = 0.0;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergenceError : SolverError {
    using SolverError::SolverError;
};

struct ConvergenceFailure : SolverError {
    double last_residual;
    ConvergenceFailure(const std::string& what, double residual)
        : SolverError(what), last_residual(residual) {}
};

// The 2^Dim alternating sweep directions, +1 ascending / -1 descending per
// axis. 2D follows the four orderings (a)-(d); 3D extends them in Gray-code
// order so consecutive sweeps flip one axis at a time.
template <int Dim>
const std::vector<Index<Dim>>& sweep_orderings() {
    static const std::vector<Index<Dim>> dirs = [] {
        std::vector<Index<Dim>> d;
        if constexpr (Dim == 2) {
            d = {{+1, +1}, {-1, +1}, {-1, -1}, {+1, -1}};
        } else {
            d = {{+1, +1, +1}, {-1, +1, +1}, {-1, -1, +1}, {+1, -1, +1},
                 {+1, -1, -1}, {-1, -1, -1}, {-1, +1, -1}, {+1, +1, -1}};
        }
        return d;
    }();
    return dirs;
}

// Lax-Friedrichs numerical Hamiltonian built from per-axis one-sided
// derivative approximations.
template <int Dim>
double lax_friedrichs(const HamiltonianSpec<Dim>& H, const Vec<Dim>& x, const Vec<Dim>& minus,
                      const Vec<Dim>& plus) {
    Vec<Dim> avg;
    for (int a = 0; a < Dim; ++a) avg[a] = 0.5 * (minus[a] + plus[a]);
    double v = H.evaluate(x, avg);
    for (int a = 0; a < Dim; ++a) v -= 0.5 * H.alpha[a] * (plus[a] - minus[a]);
    return v;
}

// Update coefficient of the first fixed-point stage; the second stage uses
// half of it.
template <int Dim>
double stage_coefficient(const CartesianGrid<Dim>& grid, const Vec<Dim>& alpha, double gamma) {
    double s = 0.0;
    for (int a = 0; a < Dim; ++a) s += alpha[a] / grid.spacing[a];
    return gamma / s;
}

// Per-solve constants: f sampled at every grid point and per-axis coordinate
// tables.
template <int Dim>
struct SweepWorkspace {
    const ProblemSpec<Dim>* spec;
    CartesianGrid<Dim> grid;
    std::vector<double> rhs;
    std::array<std::vector<double>, Dim> coords;
    mutable std::vector<double> snapshot;

    SweepWorkspace(const ProblemSpec<Dim>& s, const CartesianGrid<Dim>& g) : spec(&s), grid(g) {
        for (int a = 0; a < Dim; ++a) {
            coords[a].resize(g.points(a));
            for (int k = 0; k < g.points(a); ++k) coords[a][k] = g.coord(a, k);
        }
        rhs.resize(g.point_count());
        for_each_point<Dim>(g, [&](const Index<Dim>& id, std::size_t p) {
            rhs[p] = s.rhs(g.point(id));
        });
    }
};

namespace detail {

template <DerivMode M>
inline void one_sided_pair(const double w[5], double h, double eps, double& minus, double& plus) {
    if constexpr (M == DerivMode::first_order) {
        minus = (w[2] - w[1]) / h;
        plus = (w[3] - w[2]) / h;
    } else if constexpr (M == DerivMode::weno3) {
        minus = weno3_minus({{w[0], w[1], w[2], w[3]}, h, eps});
        plus = weno3_plus({{w[1], w[2], w[3], w[4]}, h, eps});
    } else {
        minus = linear3_minus({{w[0], w[1], w[2], w[3]}, h, eps});
        plus = linear3_plus({{w[1], w[2], w[3], w[4]}, h, eps});
    }
}

[[noreturn]] inline void throw_divergence(const std::string& where, long iteration) {
    throw DivergenceError("non-finite value produced at point " + where + " during sweep " +
                          std::to_string(iteration));
}

// One full Gauss-Seidel pass of a fixed-point stage: every non-fixed point,
// in the given direction, is updated in place so later points see the newest
// values.
template <DerivMode M>
void stage_pass(ScalarField<2>& field, const SweepWorkspace<2>& ws, double c, double eps,
                const Index<2>& dir, long iteration) {
    constexpr bool kLinearGhosts = M == DerivMode::first_order;
    const auto& g = field.grid;
    const HamiltonianSpec<2>& H = ws.spec->hamiltonian;
    const int n0 = g.points(0), n1 = g.points(1);
    const int last0 = n0 - 1, last1 = n1 - 1;
    const double h0 = g.spacing[0], h1 = g.spacing[1];
    double* v = field.values.data();
    const double* rhs = ws.rhs.data();
    const std::uint8_t* fixed = field.fixed.data();
    const std::ptrdiff_t s1 = n0;

    const int jb = dir[1] > 0 ? 0 : last1, je = dir[1] > 0 ? n1 : -1;
    const int ib = dir[0] > 0 ? 0 : last0, ie = dir[0] > 0 ? n0 : -1;
    for (int j = jb; j != je; j += dir[1]) {
        double* row = v + static_cast<std::size_t>(j) * s1;
        const double* rhs_row = rhs + static_cast<std::size_t>(j) * s1;
        const std::uint8_t* fix_row = fixed + static_cast<std::size_t>(j) * s1;
        const double y = ws.coords[1][j];
        for (int i = ib; i != ie; i += dir[0]) {
            if (fix_row[i]) continue;
            double w0[5], w1[5];
            gather5(row, 1, i, last0, w0, kLinearGhosts);
            gather5(v + i, s1, j, last1, w1, kLinearGhosts);
            Vec<2> minus, plus;
            one_sided_pair<M>(w0, h0, eps, minus[0], plus[0]);
            one_sided_pair<M>(w1, h1, eps, minus[1], plus[1]);
            const Vec<2> x{ws.coords[0][i], y};
            const double hhat = lax_friedrichs<2>(H, x, minus, plus);
            const double nv = row[i] + c * (rhs_row[i] - hhat);
            if (!std::isfinite(nv))
                throw_divergence("(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                 iteration);
            row[i] = nv;
        }
    }
}

template <DerivMode M>
void stage_pass(ScalarField<3>& field, const SweepWorkspace<3>& ws, double c, double eps,
                const Index<3>& dir, long iteration) {
    constexpr bool kLinearGhosts = M == DerivMode::first_order;
    const auto& g = field.grid;
    const HamiltonianSpec<3>& H = ws.spec->hamiltonian;
    const int n0 = g.points(0), n1 = g.points(1), n2 = g.points(2);
    const int last0 = n0 - 1, last1 = n1 - 1, last2 = n2 - 1;
    const double h0 = g.spacing[0], h1 = g.spacing[1], h2 = g.spacing[2];
    double* v = field.values.data();
    const double* rhs = ws.rhs.data();
    const std::uint8_t* fixed = field.fixed.data();
    const std::ptrdiff_t s1 = n0;
    const std::ptrdiff_t s2 = static_cast<std::ptrdiff_t>(n0) * n1;

    const int kb = dir[2] > 0 ? 0 : last2, ke = dir[2] > 0 ? n2 : -1;
    const int jb = dir[1] > 0 ? 0 : last1, je = dir[1] > 0 ? n1 : -1;
    const int ib = dir[0] > 0 ? 0 : last0, ie = dir[0] > 0 ? n0 : -1;
    for (int k = kb; k != ke; k += dir[2]) {
        const double z = ws.coords[2][k];
        for (int j = jb; j != je; j += dir[1]) {
            const std::size_t base = static_cast<std::size_t>(k) * s2 +
                                     static_cast<std::size_t>(j) * s1;
            double* row = v + base;
            const double* rhs_row = rhs + base;
            const std::uint8_t* fix_row = fixed + base;
            const double y = ws.coords[1][j];
            for (int i = ib; i != ie; i += dir[0]) {
                if (fix_row[i]) continue;
                double w0[5], w1[5], w2[5];
                gather5(row, 1, i, last0, w0, kLinearGhosts);
                gather5(v + static_cast<std::size_t>(k) * s2 + i, s1, j, last1, w1, kLinearGhosts);
                gather5(v + static_cast<std::size_t>(j) * s1 + i, s2, k, last2, w2, kLinearGhosts);
                Vec<3> minus, plus;
                one_sided_pair<M>(w0, h0, eps, minus[0], plus[0]);
                one_sided_pair<M>(w1, h1, eps, minus[1], plus[1]);
                one_sided_pair<M>(w2, h2, eps, minus[2], plus[2]);
                const Vec<3> x{ws.coords[0][i], y, z};
                const double hhat = lax_friedrichs<3>(H, x, minus, plus);
                const double nv = row[i] + c * (rhs_row[i] - hhat);
                if (!std::isfinite(nv))
                    throw_divergence("(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + ")",
                                     iteration);
                row[i] = nv;
            }
        }
    }
}

template <int Dim>
void dispatch_stage(ScalarField<Dim>& field, const SweepWorkspace<Dim>& ws, DerivMode mode,
                    double c, double eps, const Index<Dim>& dir, long iteration) {
    switch (mode) {
        case DerivMode::first_order:
            stage_pass<DerivMode::first_order>(field, ws, c, eps, dir, iteration);
            break;
        case DerivMode::weno3:
            stage_pass<DerivMode::weno3>(field, ws, c, eps, dir, iteration);
            break;
        case DerivMode::linear3:
            stage_pass<DerivMode::linear3>(field, ws, c, eps, dir, iteration);
            break;
    }
}

// One sweep of the two-stage fixed-point iteration in a single ordering;
// both stages run the full grid in the same direction, the second with half
// the stage coefficient. Returns the max change over the sweep.
template <int Dim>
double rk_sweep(ScalarField<Dim>& field, const SweepWorkspace<Dim>& ws, double gamma, double eps,
                DerivMode mode, const Index<Dim>& dir, long iteration) {
    ws.snapshot = field.values;
    const double c = stage_coefficient<Dim>(field.grid, ws.spec->hamiltonian.alpha, gamma);
    dispatch_stage<Dim>(field, ws, mode, c, eps, dir, iteration);
    dispatch_stage<Dim>(field, ws, mode, 0.5 * c, eps, dir, iteration);
    double res = 0.0;
    const double* a = field.values.data();
    const double* b = ws.snapshot.data();
    for (std::size_t p = 0, n = field.values.size(); p < n; ++p)
        res = std::max(res, std::abs(a[p] - b[p]));
    return res;
}

struct IterationLog {
    long sweeps = 0;
    std::vector<double> residuals;
};

template <int Dim>
IterationLog run_to_convergence(ScalarField<Dim>& field, const SweepWorkspace<Dim>& ws,
                                const SweepConfig& cfg, DerivMode mode, double delta) {
    const auto& orderings = sweep_orderings<Dim>();
    const long n_ord = static_cast<long>(orderings.size());
    IterationLog log;
    for (long sweep = 0; sweep < cfg.max_iterations; ++sweep) {
        const auto& dir = orderings[static_cast<std::size_t>(
            ((sweep + cfg.ordering_offset) % n_ord + n_ord) % n_ord)];
        const double res = rk_sweep<Dim>(field, ws, cfg.gamma, cfg.epsilon, mode, dir, sweep);
        log.residuals.push_back(res);
        ++log.sweeps;
        if (res <= delta) return log;
    }
    throw ConvergenceFailure("sweeping did not reach delta=" + std::to_string(delta) + " in " +
                                 std::to_string(cfg.max_iterations) + " sweeps (" +
                                 to_string(mode) + " mode, last residual " +
                                 std::to_string(log.residuals.empty() ? 0.0
                                                                      : log.residuals.back()) +
                                 ")",
                             log.residuals.empty() ? 0.0 : log.residuals.back());
}

inline void validate_config(const SweepConfig& cfg) {
    if (!(cfg.gamma > 0.0)) throw std::invalid_argument("sweep config: gamma must be positive");
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("sweep config: epsilon must be positive");
    if (!(cfg.delta > 0.0)) throw std::invalid_argument("sweep config: delta must be positive");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("sweep config: max_iterations must be >= 1");
}

}  // namespace detail

// Fixed band of the boundary set on a grid: mask and pinned values. Points
// within two grid sizes of the boundary set are pinned to the exact solution
// when one is known; otherwise (isolated sources only) to the travel-time
// lower bound g + distance / front-speed bound. A bare single-point pin does
// not converge under the nonlinear weights, so the estimate fills the same
// band the exact values would.
template <int Dim>
struct BandInit {
    std::vector<std::uint8_t> mask;
    std::vector<double> values;
    std::size_t count = 0;
};

template <int Dim>
BandInit<Dim> band_values(const ProblemSpec<Dim>& spec, const CartesianGrid<Dim>& grid,
                          double band_scale = 0.0, int band_width = 2) {
    BandInit<Dim> out;
    out.mask.assign(grid.point_count(), 0);
    out.values.assign(grid.point_count(), 0.0);
    const double limit = static_cast<double>(band_width) + 1e-9;
    const double scale = band_scale > 0.0
                             ? band_scale
                             : *std::max_element(grid.spacing.begin(), grid.spacing.end());

    if (!spec.has_exact()) {
        for (const auto& comp : spec.boundary.components)
            if (comp.kind != BoundaryComponent<Dim>::Kind::points)
                throw std::invalid_argument(
                    "band_values: problems without an exact solution support only point "
                    "boundary sets");
    }
    const double speed = spec.hamiltonian.front_speed_bound();

    for_each_point<Dim>(grid, [&](const Index<Dim>& id, std::size_t p) {
        const Vec<Dim> x = grid.point(id);
        if (spec.boundary.band_distance(x, scale) > limit) return;
        out.mask[p] = 1;
        ++out.count;
        if (spec.has_exact()) {
            out.values[p] = spec.exact(x);
            return;
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& comp : spec.boundary.components) {
            for (std::size_t m = 0; m < comp.positions.size(); ++m) {
                Vec<Dim> d;
                for (int a = 0; a < Dim; ++a) d[a] = x[a] - comp.positions[m][a];
                best = std::min(best, comp.point_values[m] + norm<Dim>(d) / speed);
            }
        }
        out.values[p] = best;
    });
    return out;
}

// Band assignment, initial guess everywhere else, then the non-fully
// converged first-order presolve that becomes the warm start of the
// high-order iteration.
template <int Dim>
ScalarField<Dim> initialize(const ProblemSpec<Dim>& spec, const CartesianGrid<Dim>& grid,
                            const SweepConfig& cfg) {
    detail::validate_config(cfg);
    auto band = band_values<Dim>(spec, grid, cfg.band_scale);
    if (band.count == 0)
        throw std::invalid_argument("initialize: boundary band is empty on this grid");
    if (band.count == grid.point_count())
        throw std::invalid_argument("initialize: boundary band covers every grid point");

    ScalarField<Dim> field(grid);
    field.fixed = std::move(band.mask);
    for (std::size_t p = 0; p < field.values.size(); ++p)
        field.values[p] = field.fixed[p] ? band.values[p] : cfg.initial_guess;

    if (cfg.warm_start && cfg.derivative_mode != DerivMode::first_order) {
        SweepWorkspace<Dim> ws(spec, grid);
        detail::run_to_convergence<Dim>(field, ws, cfg, DerivMode::first_order,
                                        cfg.warm_start_delta);
    }
    return field;
}

// One sweep (both fixed-point stages) in the given ordering; returns the
// max-norm change of the sweep. Ordering entries are +1/-1 per axis.
template <int Dim>
double rk_iteration(ScalarField<Dim>& field, const ProblemSpec<Dim>& spec, const SweepConfig& cfg,
                    const Index<Dim>& ordering) {
    detail::validate_config(cfg);
    SweepWorkspace<Dim> ws(spec, field.grid);
    return detail::rk_sweep<Dim>(field, ws, cfg.gamma, cfg.epsilon, cfg.derivative_mode, ordering,
                                 0);
}

template <int Dim>
struct SolveResult {
    ScalarField<Dim> field;
    long iterations = 0;  // high-order sweeps
    long warm_start_iterations = 0;
    std::vector<double> residuals;  // per high-order sweep
    double init_seconds = 0.0;
    double warm_start_seconds = 0.0;
    double sweep_seconds = 0.0;

    double total_seconds() const { return init_seconds + warm_start_seconds + sweep_seconds; }
};

template <int Dim>
SolveResult<Dim> solve_single_grid(const ProblemSpec<Dim>& spec, const CartesianGrid<Dim>& grid,
                                   const SweepConfig& cfg) {
    using clock = std::chrono::steady_clock;
    detail::validate_config(cfg);
    SolveResult<Dim> out;

    auto t0 = clock::now();
    auto band = band_values<Dim>(spec, grid, cfg.band_scale);
    if (band.count == 0)
        throw std::invalid_argument("solve_single_grid: boundary band is empty on this grid");
    if (band.count == grid.point_count())
        throw std::invalid_argument("solve_single_grid: boundary band covers every grid point");
    out.field = ScalarField<Dim>(grid);
    out.field.fixed = std::move(band.mask);
    for (std::size_t p = 0; p < out.field.values.size(); ++p)
        out.field.values[p] = out.field.fixed[p] ? band.values[p] : cfg.initial_guess;
    SweepWorkspace<Dim> ws(spec, grid);
    auto t1 = clock::now();
    out.init_seconds = std::chrono::duration<double>(t1 - t0).count();

    if (cfg.warm_start && cfg.derivative_mode != DerivMode::first_order) {
        auto log = detail::run_to_convergence<Dim>(out.field, ws, cfg, DerivMode::first_order,
                                                   cfg.warm_start_delta);
        out.warm_start_iterations = log.sweeps;
    }
    auto t2 = clock::now();
    out.warm_start_seconds = std::chrono::duration<double>(t2 - t1).count();

    auto log = detail::run_to_convergence<Dim>(out.field, ws, cfg, cfg.derivative_mode, cfg.delta);
    out.iterations = log.sweeps;
    out.residuals = std::move(log.residuals);
    auto t3 = clock::now();
    out.sweep_seconds = std::chrono::duration<double>(t3 - t2).count();
    return out;
}

}  // namespace fsweep
