// Third-order Lagrange and WENO interpolation along grid lines, and the
// dimension-by-dimension prolongation of a component-grid solution onto the
// finest grid of a semi-coarsened family.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsweep/field.hpp"
#include "fsweep/grid.hpp"

namespace fsweep {

enum class InterpMethod { lagrange, weno };

// Target location within a three-point stencil {i-1, i, i+1}: the point sits
// at x_{i-1} + alpha_tilde * h. Interior targets have alpha_tilde in
// [1/2, 3/2); stencils shifted at the line ends extend that to [0, 2].
struct InterpPoint {
    int base_index = 0;
    double alpha_tilde = 1.0;
    double epsilon = 1e-6;
};

// Value of the quadratic through (0, v0), (1, v1), (2, v2) at alpha_tilde.
inline double lagrange3_interp_1d(const std::array<double, 3>& v, double alpha_tilde) {
    const double t = alpha_tilde;
    return v[0] * 0.5 * (t - 1.0) * (t - 2.0) - v[1] * t * (t - 2.0) + v[2] * 0.5 * t * (t - 1.0);
}

// WENO combination of the two linear candidates; the linear weights
// gamma_1 = 1 - alpha_tilde/2, gamma_2 = alpha_tilde/2 recover the quadratic
// on smooth data, the smoothness indicators steer toward the flatter side at
// a jump.
inline double weno3_interp_1d(const std::array<double, 3>& v, const InterpPoint& p) {
    const double t = p.alpha_tilde;
    const double p1 = t * v[1] - (t - 1.0) * v[0];
    const double p2 = (t - 1.0) * v[2] - (t - 2.0) * v[1];
    const double g1 = 1.0 - 0.5 * t;
    const double g2 = 0.5 * t;
    const double b1 = (v[1] - v[0]) * (v[1] - v[0]);
    const double b2 = (v[2] - v[1]) * (v[2] - v[1]);
    const double wt1 = g1 / ((p.epsilon + b1) * (p.epsilon + b1));
    const double wt2 = g2 / ((p.epsilon + b2) * (p.epsilon + b2));
    const double w1 = wt1 / (wt1 + wt2);
    // Written so a fully weighted candidate (and equal candidates) pass
    // through exactly; collocation depends on it.
    if (w1 >= 0.5) return p1 + (1.0 - w1) * (p2 - p1);
    return p2 + w1 * (p1 - p2);
}

namespace detail {

// Stencil placement for a target at source-line position s (in source index
// units): center i with the target in [x_{i-1/2}, x_{i+1/2}), shifted inward
// in the first and last cell.
inline InterpPoint place_stencil(double s, int last, double epsilon) {
    int i = static_cast<int>(std::floor(s + 0.5));
    if (i < 1) i = 1;
    if (i > last - 1) i = last - 1;
    return {i, s - static_cast<double>(i - 1), epsilon};
}

// Refine one axis of the field to `target_cells` by third-order
// interpolation of every grid line along that axis. Source points are
// reproduced exactly (collocation).
template <int Dim>
ScalarField<Dim> refine_axis(const ScalarField<Dim>& src, int axis, int target_cells,
                             int target_level, InterpMethod method, double epsilon) {
    const auto& g = src.grid;
    const int src_cells = g.cells[axis];
    if (target_cells == src_cells) {
        ScalarField<Dim> same = src;
        same.grid.levels[axis] = target_level;
        return same;
    }
    if (target_cells % src_cells != 0)
        throw std::invalid_argument("prolongate: source grid is not nested in the target");
    const int ratio = target_cells / src_cells;
    if ((ratio & (ratio - 1)) != 0)
        throw std::invalid_argument("prolongate: refinement ratio must be a power of two");

    Index<Dim> out_cells = g.cells;
    out_cells[axis] = target_cells;
    Index<Dim> out_levels = g.levels;
    out_levels[axis] = target_level;
    ScalarField<Dim> out(build_grid<Dim>(g.origin, g.extent, out_cells, out_levels));

    const int n_src = g.points(axis);
    const int n_dst = out.grid.points(axis);
    const std::size_t stride_src = g.stride(axis);
    const std::size_t stride_dst = out.grid.stride(axis);

    // Precompute the stencil placement for each target index once per axis.
    std::vector<InterpPoint> plan(n_dst);
    for (int t = 0; t < n_dst; ++t)
        plan[t] = place_stencil(static_cast<double>(t) / ratio, n_src - 1, epsilon);

    // Iterate over all lines: every point of the source with axis index 0.
    for_each_point<Dim>(g, [&](const Index<Dim>& src_id, std::size_t) {
        if (src_id[axis] != 0) return;
        const std::size_t src_base = g.linear_index(src_id);
        Index<Dim> dst_id = src_id;
        const std::size_t dst_base = out.grid.linear_index(dst_id);
        const double* in = src.values.data() + src_base;
        double* o = out.values.data() + dst_base;
        for (int t = 0; t < n_dst; ++t) {
            const InterpPoint& pt = plan[t];
            const std::array<double, 3> v{in[(pt.base_index - 1) * stride_src],
                                          in[pt.base_index * stride_src],
                                          in[(pt.base_index + 1) * stride_src]};
            o[t * stride_dst] = method == InterpMethod::lagrange
                                    ? lagrange3_interp_1d(v, pt.alpha_tilde)
                                    : weno3_interp_1d(v, pt);
        }
    });
    return out;
}

}  // namespace detail

// Map a component-grid field onto the finest grid of its family, refining
// axis 0 first, then axis 1 (then axis 2).
template <int Dim>
ScalarField<Dim> prolongate(const ScalarField<Dim>& field, const CartesianGrid<Dim>& target,
                            InterpMethod method, double epsilon = 1e-6) {
    for (int a = 0; a < Dim; ++a) {
        if (field.grid.origin[a] != target.origin[a] || field.grid.extent[a] != target.extent[a])
            throw std::invalid_argument("prolongate: source and target domains differ");
        if (target.cells[a] % field.grid.cells[a] != 0)
            throw std::invalid_argument("prolongate: source grid is not nested in the target");
    }
    ScalarField<Dim> cur = field;
    for (int a = 0; a < Dim; ++a)
        cur = detail::refine_axis<Dim>(cur, a, target.cells[a], target.levels[a], method, epsilon);
    cur.fixed.assign(cur.values.size(), 0);
    return cur;
}

}  // namespace fsweep
