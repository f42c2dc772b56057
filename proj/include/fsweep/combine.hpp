// The four-step sparse-grid algorithm: independent sweeping solves on every
// component grid of the plan, prolongation onto the finest grid, and the
// coefficient-weighted combination.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fsweep/field.hpp"
#include "fsweep/grid.hpp"
#include "fsweep/interp.hpp"
#include "fsweep/problem.hpp"
#include "fsweep/sweep.hpp"

namespace fsweep {

// Pointwise sum of coefficient-weighted fields, all on the same grid.
template <int Dim>
ScalarField<Dim> combine_fields(std::span<const ScalarField<Dim>> fields,
                                std::span<const int> coefficients) {
    if (fields.empty() || fields.size() != coefficients.size())
        throw std::invalid_argument("combine_fields: need one coefficient per field");
    const auto& grid = fields[0].grid;
    for (const auto& f : fields)
        if (!f.grid.same_layout(grid))
            throw std::invalid_argument("combine_fields: fields sit on different grids");

    ScalarField<Dim> out(grid);
    for (std::size_t k = 0; k < fields.size(); ++k) {
        const double c = static_cast<double>(coefficients[k]);
        const double* src = fields[k].values.data();
        double* dst = out.values.data();
        for (std::size_t p = 0, n = out.values.size(); p < n; ++p) dst[p] += c * src[p];
    }
    return out;
}

template <int Dim>
struct SparseSolveResult {
    struct Component {
        Index<Dim> levels;
        int coefficient = 0;
        long iterations = 0;
        long warm_start_iterations = 0;
        double wall_seconds = 0.0;
    };

    std::vector<Component> components;
    ScalarField<Dim> combined;
    std::vector<ScalarField<Dim>> component_fields;  // prolonged, if retained

    double init_seconds = 0.0;        // summed over components
    double warm_start_seconds = 0.0;  // summed over components
    double sweep_seconds = 0.0;       // summed over components
    double solve_seconds = 0.0;       // wall time of the component-solve phase
    double prolong_seconds = 0.0;
    double combine_seconds = 0.0;
    double total_seconds = 0.0;
};

// Solve the problem independently on every plan grid, prolongate each
// converged field to the finest grid, and combine. Component solves may run
// on several workers; the combination itself is always performed in plan
// order, so the result does not depend on scheduling.
template <int Dim>
SparseSolveResult<Dim> solve_sparse(const ProblemSpec<Dim>& spec, const SparsePlan<Dim>& plan,
                                    const SweepConfig& cfg, InterpMethod method, int workers = 1,
                                    bool keep_components = false) {
    using clock = std::chrono::steady_clock;
    if (plan.entries.empty()) throw std::invalid_argument("solve_sparse: empty plan");

    const auto t_begin = clock::now();
    const std::size_t n = plan.entries.size();
    std::vector<std::optional<SolveResult<Dim>>> solved(n);
    std::vector<std::string> failures(n);

    // Every component pins the same physical band, scaled by the root grid
    // size; per-grid bands would make the components solve slightly
    // different problems and spoil the cancellation in the combination.
    SweepConfig component_cfg = cfg;
    if (component_cfg.band_scale <= 0.0) {
        Index<Dim> root_levels{};
        auto root = plan.grid_for(root_levels);
        component_cfg.band_scale =
            *std::max_element(root.spacing.begin(), root.spacing.end());
    }

    auto solve_entry = [&](std::size_t k) {
        const auto& entry = plan.entries[k];
        try {
            solved[k] = solve_single_grid<Dim>(spec, plan.grid_for(entry.levels), component_cfg);
        } catch (const std::exception& e) {
            std::string levels;
            for (int a = 0; a < Dim; ++a) levels += (a ? "," : "") + std::to_string(entry.levels[a]);
            failures[k] = "component grid (" + levels + "): " + e.what();
        }
    };

    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const int pool = std::min<int>(workers, static_cast<int>(n));
    if (pool <= 1) {
        for (std::size_t k = 0; k < n; ++k) solve_entry(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (int t = 0; t < pool; ++t)
            threads.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < n; k = next.fetch_add(1))
                    solve_entry(k);
            });
        for (auto& th : threads) th.join();
    }
    for (const auto& f : failures)
        if (!f.empty()) throw SolverError("solve_sparse: " + f);

    SparseSolveResult<Dim> out;
    const auto t_solved = clock::now();
    out.solve_seconds = std::chrono::duration<double>(t_solved - t_begin).count();

    // Prolongate and accumulate in plan order; the full set of prolonged
    // fields is only materialized when the caller asks for it.
    const CartesianGrid<Dim> finest = plan.finest_grid();
    out.combined = ScalarField<Dim>(finest);
    double prolong_seconds = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& entry = plan.entries[k];
        const auto& sol = *solved[k];
        const auto t0 = clock::now();
        auto prolonged = prolongate<Dim>(sol.field, finest, method, cfg.epsilon);
        prolong_seconds += std::chrono::duration<double>(clock::now() - t0).count();
        const double c = static_cast<double>(entry.coefficient);
        double* dst = out.combined.values.data();
        const double* src = prolonged.values.data();
        for (std::size_t p = 0, np = out.combined.values.size(); p < np; ++p)
            dst[p] += c * src[p];
        out.components.push_back({entry.levels, entry.coefficient, sol.iterations,
                                  sol.warm_start_iterations, sol.total_seconds()});
        out.init_seconds += sol.init_seconds;
        out.warm_start_seconds += sol.warm_start_seconds;
        out.sweep_seconds += sol.sweep_seconds;
        if (keep_components) out.component_fields.push_back(std::move(prolonged));
    }
    const auto t_prolonged = clock::now();
    out.prolong_seconds = prolong_seconds;

    // Re-pin the band that the component solves received as given data
    // (the family-scale band): inside it the combined value is the data, not
    // a solved quantity, and interpolants of non-smooth data would otherwise
    // perturb it.
    auto band = band_values<Dim>(spec, finest, component_cfg.band_scale);
    out.combined.fixed = std::move(band.mask);
    for (std::size_t p = 0; p < out.combined.values.size(); ++p)
        if (out.combined.fixed[p]) out.combined.values[p] = band.values[p];

    const auto t_end = clock::now();
    out.combine_seconds = std::chrono::duration<double>(t_end - t_prolonged).count();
    out.total_seconds = std::chrono::duration<double>(t_end - t_begin).count();
    return out;
}

}  // namespace fsweep
