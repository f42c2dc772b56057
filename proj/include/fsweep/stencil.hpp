// One-dimensional upwind derivative kernels along grid lines: first-order
// upwind, third-order WENO, the frozen-weight (w = 1/3) third-order linear
// upwind variant, and quadratic ghost-point extrapolation past domain ends.
#pragma once

#include <array>

namespace fsweep {

// Four consecutive line values in increasing-coordinate order. For the
// minus-side kernels the values are phi at i-2..i+1; for the plus-side,
// i-1..i+2.
struct StencilLine {
    std::array<double, 4> values;
    double spacing;
    double epsilon;
};

// Approximation of phi_x at i biased to the left (wind blowing left to
// right). Smoothness ratio r compares the second difference of the biased
// stencil against the central one; epsilon enters both numerator and
// denominator.
inline double weno3_minus(const StencilLine& s) {
    const auto& v = s.values;  // phi_{i-2}, phi_{i-1}, phi_i, phi_{i+1}
    const double d_biased = v[2] - 2.0 * v[1] + v[0];
    const double d_central = v[3] - 2.0 * v[2] + v[1];
    const double r = (s.epsilon + d_biased * d_biased) / (s.epsilon + d_central * d_central);
    const double w = 1.0 / (1.0 + 2.0 * r * r);
    const double inv2h = 0.5 / s.spacing;
    const double central = (v[3] - v[1]) * inv2h;
    const double biased = (3.0 * v[2] - 4.0 * v[1] + v[0]) * inv2h;
    return (1.0 - w) * central + w * biased;
}

// Approximation of phi_x at i biased to the right (wind blowing right to
// left).
inline double weno3_plus(const StencilLine& s) {
    const auto& v = s.values;  // phi_{i-1}, phi_i, phi_{i+1}, phi_{i+2}
    const double d_biased = v[3] - 2.0 * v[2] + v[1];
    const double d_central = v[2] - 2.0 * v[1] + v[0];
    const double r = (s.epsilon + d_biased * d_biased) / (s.epsilon + d_central * d_central);
    const double w = 1.0 / (1.0 + 2.0 * r * r);
    const double inv2h = 0.5 / s.spacing;
    const double central = (v[2] - v[0]) * inv2h;
    const double biased = (-v[3] + 4.0 * v[2] - 3.0 * v[1]) * inv2h;
    return (1.0 - w) * central + w * biased;
}

// Third-order linear upwind approximations: the WENO formulas with the
// weight frozen at 1/3.
inline double linear3_minus(const StencilLine& s) {
    const auto& v = s.values;
    const double inv2h = 0.5 / s.spacing;
    const double central = (v[3] - v[1]) * inv2h;
    const double biased = (3.0 * v[2] - 4.0 * v[1] + v[0]) * inv2h;
    return (2.0 / 3.0) * central + (1.0 / 3.0) * biased;
}

inline double linear3_plus(const StencilLine& s) {
    const auto& v = s.values;
    const double inv2h = 0.5 / s.spacing;
    const double central = (v[2] - v[0]) * inv2h;
    const double biased = (-v[3] + 4.0 * v[2] - 3.0 * v[1]) * inv2h;
    return (2.0 / 3.0) * central + (1.0 / 3.0) * biased;
}

inline double upwind1(double left, double right, double h) { return (right - left) / h; }

// Weights of the biased candidate in the two WENO formulas, exposed for
// property checks of the weight bounds and the stencil selection at jumps.
inline double weno3_minus_weight(const StencilLine& s) {
    const auto& v = s.values;
    const double d_biased = v[2] - 2.0 * v[1] + v[0];
    const double d_central = v[3] - 2.0 * v[2] + v[1];
    const double r = (s.epsilon + d_biased * d_biased) / (s.epsilon + d_central * d_central);
    return 1.0 / (1.0 + 2.0 * r * r);
}

inline double weno3_plus_weight(const StencilLine& s) {
    const auto& v = s.values;
    const double d_biased = v[3] - 2.0 * v[2] + v[1];
    const double d_central = v[2] - 2.0 * v[1] + v[0];
    const double r = (s.epsilon + d_biased * d_biased) / (s.epsilon + d_central * d_central);
    return 1.0 / (1.0 + 2.0 * r * r);
}

// Ghost values past a domain end from the unique quadratic through the three
// interior line values nearest the boundary (ordered boundary inward).
// Returned in nearest-first order; ghost k sits at parameter t = -k of the
// interior parameterization t = 0, 1, 2.
inline std::array<double, 2> extrapolate_ghost(const std::array<double, 3>& interior, int count) {
    std::array<double, 2> ghosts{0.0, 0.0};
    for (int k = 1; k <= count && k <= 2; ++k) {
        const double t = -static_cast<double>(k);
        ghosts[k - 1] = interior[0] * 0.5 * (t - 1.0) * (t - 2.0) - interior[1] * t * (t - 2.0) +
                        interior[2] * 0.5 * t * (t - 1.0);
    }
    return ghosts;
}

namespace detail {

// Extrapolation value at integer offset t (t < 0) of the line values
// a = phi_0, b = phi_1, c = phi_2 counted from the boundary inward.
// Quadratic ghosts match the third-order stencils; the first-order pass uses
// linear ghosts, which make the boundary flux purely one-sided and keep the
// outflow boundary from feeding back into the iteration.
inline double ghost_value(double a, double b, double c, double t, bool linear) {
    if (linear) return a + (a - b) * (-t);
    return a * 0.5 * (t - 1.0) * (t - 2.0) - b * t * (t - 2.0) + c * 0.5 * t * (t - 1.0);
}


// Five consecutive values phi_{i-2}..phi_{i+2} along one grid line, with
// ghost extrapolation where the window leaves [0, last]. `line` points at
// the axis-0 element of the line, `stride` is the axis stride.
inline void gather5(const double* line, std::ptrdiff_t stride, int i, int last, double out[5],
                    bool linear_ghosts = false) {
    if (i >= 2 && i + 2 <= last) {
        const double* p = line + static_cast<std::ptrdiff_t>(i - 2) * stride;
        out[0] = p[0];
        out[1] = p[stride];
        out[2] = p[2 * stride];
        out[3] = p[3 * stride];
        out[4] = p[4 * stride];
        return;
    }
    for (int k = -2; k <= 2; ++k) {
        const int idx = i + k;
        double v;
        if (idx < 0) {
            v = ghost_value(line[0], line[stride], line[2 * stride], static_cast<double>(idx),
                            linear_ghosts);
        } else if (idx > last) {
            v = ghost_value(line[static_cast<std::ptrdiff_t>(last) * stride],
                            line[static_cast<std::ptrdiff_t>(last - 1) * stride],
                            line[static_cast<std::ptrdiff_t>(last - 2) * stride],
                            static_cast<double>(last - idx), linear_ghosts);
        } else {
            v = line[static_cast<std::ptrdiff_t>(idx) * stride];
        }
        out[k + 2] = v;
    }
}

}  // namespace detail

}  // namespace fsweep
