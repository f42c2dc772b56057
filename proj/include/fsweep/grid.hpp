// Uniform Cartesian grids (vertex-centered, 2D/3D) and the semi-coarsened
// sparse-grid family used by the combination technique. Grids built from a
// common root with power-of-two per-axis refinement have exactly nested
// point coordinates.
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsweep {

template <int Dim> using Vec = std::array<double, Dim>;
template <int Dim> using Index = std::array<int, Dim>;

template <int Dim>
struct CartesianGrid {
    static_assert(Dim == 2 || Dim == 3, "only 2D and 3D grids are supported");

    Vec<Dim> origin{};    // domain lower corner
    Vec<Dim> extent{};    // per-axis length (b - a)
    Index<Dim> cells{};   // per-axis cell count N_i; points per axis = N_i + 1
    Vec<Dim> spacing{};   // h_i = extent_i / cells_i
    Index<Dim> levels{};  // refinement level per axis relative to a root grid

    int points(int axis) const { return cells[axis] + 1; }

    std::size_t point_count() const {
        std::size_t n = 1;
        for (int a = 0; a < Dim; ++a) n *= static_cast<std::size_t>(points(a));
        return n;
    }

    // Coordinate of point k on an axis. Endpoints are reproduced exactly so
    // that nested grids share boundary coordinates bit for bit.
    double coord(int axis, int k) const {
        if (k == cells[axis]) return origin[axis] + extent[axis];
        return origin[axis] + k * spacing[axis];
    }

    Vec<Dim> point(const Index<Dim>& id) const {
        Vec<Dim> x;
        for (int a = 0; a < Dim; ++a) x[a] = coord(a, id[a]);
        return x;
    }

    // Linear storage index, axis 0 fastest.
    std::size_t linear_index(const Index<Dim>& id) const {
        std::size_t idx = static_cast<std::size_t>(id[Dim - 1]);
        for (int a = Dim - 2; a >= 0; --a)
            idx = idx * static_cast<std::size_t>(points(a)) + static_cast<std::size_t>(id[a]);
        return idx;
    }

    std::size_t stride(int axis) const {
        std::size_t s = 1;
        for (int a = 0; a < axis; ++a) s *= static_cast<std::size_t>(points(a));
        return s;
    }

    bool same_layout(const CartesianGrid& other) const {
        return cells == other.cells && origin == other.origin && extent == other.extent;
    }
};

template <int Dim>
CartesianGrid<Dim> build_grid(const Vec<Dim>& origin, const Vec<Dim>& extent,
                              const Index<Dim>& cells, const Index<Dim>& levels = {}) {
    CartesianGrid<Dim> g;
    g.origin = origin;
    g.extent = extent;
    g.cells = cells;
    g.levels = levels;
    for (int a = 0; a < Dim; ++a) {
        if (!(extent[a] > 0.0))
            throw std::invalid_argument("build_grid: extent must be positive on axis " + std::to_string(a));
        if (cells[a] < 4)
            throw std::invalid_argument("build_grid: need at least 4 cells per axis, got " +
                                        std::to_string(cells[a]) + " on axis " + std::to_string(a));
        g.spacing[a] = extent[a] / cells[a];
    }
    return g;
}

// The set of semi-coarsened component grids solved by the combination
// technique, with their combination coefficients. Level tuples are grouped
// by level sum: in 2D the shells N_L and N_L-1 carry coefficients +1 and -1;
// in 3D the shells N_L, N_L-1, N_L-2 carry +1, -2, +1.
template <int Dim>
struct SparsePlan {
    struct Entry {
        Index<Dim> levels;
        int coefficient;
    };

    Vec<Dim> origin{};
    Vec<Dim> extent{};
    Index<Dim> root_cells{};
    int finest_level = 0;
    std::vector<Entry> entries;

    CartesianGrid<Dim> grid_for(const Index<Dim>& levels) const {
        Index<Dim> cells;
        for (int a = 0; a < Dim; ++a) cells[a] = root_cells[a] * (1 << levels[a]);
        return build_grid<Dim>(origin, extent, cells, levels);
    }

    CartesianGrid<Dim> finest_grid() const {
        Index<Dim> lv;
        lv.fill(finest_level);
        return grid_for(lv);
    }

    int coefficient_sum() const {
        int s = 0;
        for (const auto& e : entries) s += e.coefficient;
        return s;
    }
};

namespace detail {

// All nonnegative level tuples with the given sum, lexicographically by
// leading axes; the enumeration order fixes the plan order and with it the
// (deterministic) combination order.
template <int Dim>
void append_shell(std::vector<typename SparsePlan<Dim>::Entry>& out, int level_sum, int coefficient) {
    if (level_sum < 0) return;
    if constexpr (Dim == 2) {
        for (int l0 = 0; l0 <= level_sum; ++l0)
            out.push_back({{l0, level_sum - l0}, coefficient});
    } else {
        for (int l0 = 0; l0 <= level_sum; ++l0)
            for (int l1 = 0; l1 <= level_sum - l0; ++l1)
                out.push_back({{l0, l1, level_sum - l0 - l1}, coefficient});
    }
}

}  // namespace detail

template <int Dim>
SparsePlan<Dim> semi_coarsened_family(const Vec<Dim>& origin, const Vec<Dim>& extent,
                                      const Index<Dim>& root_cells, int finest_level) {
    static_assert(Dim == 2 || Dim == 3);
    for (int a = 0; a < Dim; ++a)
        if (root_cells[a] < 4)
            throw std::invalid_argument("semi_coarsened_family: root grid needs at least 4 cells per axis");
    if (finest_level < 1)
        throw std::invalid_argument("semi_coarsened_family: finest level must be >= 1");

    SparsePlan<Dim> plan;
    plan.origin = origin;
    plan.extent = extent;
    plan.root_cells = root_cells;
    plan.finest_level = finest_level;
    if constexpr (Dim == 2) {
        detail::append_shell<Dim>(plan.entries, finest_level, +1);
        detail::append_shell<Dim>(plan.entries, finest_level - 1, -1);
    } else {
        detail::append_shell<Dim>(plan.entries, finest_level, +1);
        detail::append_shell<Dim>(plan.entries, finest_level - 1, -2);
        detail::append_shell<Dim>(plan.entries, finest_level - 2, +1);
    }
    return plan;
}

}  // namespace fsweep
