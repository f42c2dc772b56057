// Scalar solution values on a grid together with the fixed-point mask for
// the boundary band.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fsweep/grid.hpp"

namespace fsweep {

template <int Dim>
struct ScalarField {
    CartesianGrid<Dim> grid;
    std::vector<double> values;       // one per grid point, axis 0 fastest
    std::vector<std::uint8_t> fixed;  // nonzero on the pinned boundary band

    ScalarField() = default;
    explicit ScalarField(const CartesianGrid<Dim>& g)
        : grid(g), values(g.point_count(), 0.0), fixed(g.point_count(), 0) {}
};

// Field holding f(x) at every grid point.
template <int Dim>
ScalarField<Dim> sample_field(const CartesianGrid<Dim>& grid,
                              const std::function<double(const Vec<Dim>&)>& f) {
    ScalarField<Dim> out(grid);
    Index<Dim> id{};
    for (std::size_t p = 0; p < out.values.size(); ++p) {
        out.values[p] = f(grid.point(id));
        for (int a = 0; a < Dim; ++a) {
            if (++id[a] <= grid.cells[a]) break;
            id[a] = 0;
        }
    }
    return out;
}

// Visit every point index in storage order (axis 0 fastest).
template <int Dim, typename F>
void for_each_point(const CartesianGrid<Dim>& grid, F&& fn) {
    Index<Dim> id{};
    const std::size_t n = grid.point_count();
    for (std::size_t p = 0; p < n; ++p) {
        fn(id, p);
        for (int a = 0; a < Dim; ++a) {
            if (++id[a] <= grid.cells[a]) break;
            id[a] = 0;
        }
    }
}

}  // namespace fsweep
