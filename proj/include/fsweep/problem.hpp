// Problem definitions: Hamiltonians with their per-axis Lipschitz bounds,
// boundary sets with data, right-hand sides, exact solutions where known,
// and the six benchmark instances.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsweep/grid.hpp"

namespace fsweep {

enum class HamiltonianKind { eikonal, linear_advection, boat_sail, custom };

template <int Dim>
double dot(const Vec<Dim>& a, const Vec<Dim>& b) {
    double s = 0.0;
    for (int i = 0; i < Dim; ++i) s += a[i] * b[i];
    return s;
}

template <int Dim>
double norm(const Vec<Dim>& a) {
    return std::sqrt(dot<Dim>(a, a));
}

template <int Dim>
struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::eikonal;
    Vec<Dim> advection{};   // linear_advection: H = a . p
    double max_speed = 1.0; // boat_sail front speed F
    Vec<Dim> flow{};        // boat_sail drift field f
    std::function<double(const Vec<Dim>&, const Vec<Dim>&)> custom_fn;
    Vec<Dim> alpha{};       // per-axis bound on |dH/dp_i|

    double evaluate(const Vec<Dim>& x, const Vec<Dim>& p) const {
        switch (kind) {
            case HamiltonianKind::eikonal:
                return norm<Dim>(p);
            case HamiltonianKind::linear_advection:
                return dot<Dim>(advection, p);
            case HamiltonianKind::boat_sail:
                return max_speed * norm<Dim>(p) + dot<Dim>(flow, p);
            case HamiltonianKind::custom:
                return custom_fn(x, p);
        }
        return 0.0;
    }

    // Upper bound on the speed at which fronts can move; used to seed values
    // near isolated sources when no exact solution is available.
    double front_speed_bound() const {
        switch (kind) {
            case HamiltonianKind::eikonal:
                return 1.0;
            case HamiltonianKind::linear_advection:
                return norm<Dim>(advection);
            case HamiltonianKind::boat_sail:
                return max_speed + norm<Dim>(flow);
            case HamiltonianKind::custom:
                return 1.0;
        }
        return 1.0;
    }

    static HamiltonianSpec eikonal() {
        HamiltonianSpec h;
        h.kind = HamiltonianKind::eikonal;
        h.alpha.fill(1.0);
        return h;
    }

    static HamiltonianSpec linear(const Vec<Dim>& a) {
        HamiltonianSpec h;
        h.kind = HamiltonianKind::linear_advection;
        h.advection = a;
        for (int i = 0; i < Dim; ++i) h.alpha[i] = std::abs(a[i]);
        return h;
    }

    static HamiltonianSpec boatsail(double front_speed, const Vec<Dim>& flow) {
        HamiltonianSpec h;
        h.kind = HamiltonianKind::boat_sail;
        h.max_speed = front_speed;
        h.flow = flow;
        for (int i = 0; i < Dim; ++i) h.alpha[i] = front_speed + std::abs(flow[i]);
        return h;
    }
};

template <int Dim>
double eval_hamiltonian(const HamiltonianSpec<Dim>& spec, const Vec<Dim>& x, const Vec<Dim>& p) {
    return spec.evaluate(x, p);
}

// One piece of the boundary set: isolated points with values, an
// axis-aligned plane (a domain edge or face) with a data function, or a
// sphere surface with a data function.
template <int Dim>
struct BoundaryComponent {
    enum class Kind { points, axis_plane, sphere };

    Kind kind = Kind::points;
    std::vector<Vec<Dim>> positions;
    std::vector<double> point_values;
    int axis = 0;
    double plane_coord = 0.0;
    Vec<Dim> center{};
    double radius = 0.0;
    std::function<double(const Vec<Dim>&)> value;  // g on plane/sphere members

    // Euclidean distance from x to the nearest member in units of the grid
    // size h, deciding membership of the fixed band.
    double band_distance(const Vec<Dim>& x, double h) const {
        switch (kind) {
            case Kind::points: {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& p : positions) {
                    Vec<Dim> d;
                    for (int a = 0; a < Dim; ++a) d[a] = x[a] - p[a];
                    best = std::min(best, norm<Dim>(d));
                }
                return best / h;
            }
            case Kind::axis_plane:
                return std::abs(x[axis] - plane_coord) / h;
            case Kind::sphere: {
                Vec<Dim> d;
                for (int a = 0; a < Dim; ++a) d[a] = x[a] - center[a];
                return std::abs(norm<Dim>(d) - radius) / h;
            }
        }
        return std::numeric_limits<double>::infinity();
    }

    static BoundaryComponent point_set(std::vector<Vec<Dim>> pos, std::vector<double> values) {
        BoundaryComponent c;
        c.kind = Kind::points;
        c.positions = std::move(pos);
        c.point_values = std::move(values);
        return c;
    }

    static BoundaryComponent axis_plane_at(int axis, double coord,
                                           std::function<double(const Vec<Dim>&)> g) {
        BoundaryComponent c;
        c.kind = Kind::axis_plane;
        c.axis = axis;
        c.plane_coord = coord;
        c.value = std::move(g);
        return c;
    }

    static BoundaryComponent sphere_at(const Vec<Dim>& center, double radius,
                                       std::function<double(const Vec<Dim>&)> g) {
        BoundaryComponent c;
        c.kind = Kind::sphere;
        c.center = center;
        c.radius = radius;
        c.value = std::move(g);
        return c;
    }
};

template <int Dim>
struct BoundaryData {
    std::vector<BoundaryComponent<Dim>> components;

    double band_distance(const Vec<Dim>& x, double h) const {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : components) best = std::min(best, c.band_distance(x, h));
        return best;
    }
};

template <int Dim>
struct ProblemSpec {
    std::string name;
    Vec<Dim> origin{};
    Vec<Dim> extent{};
    HamiltonianSpec<Dim> hamiltonian;
    std::function<double(const Vec<Dim>&)> rhs;
    BoundaryData<Dim> boundary;
    std::function<double(const Vec<Dim>&)> exact;  // empty if no closed form
    double gamma = 0.8;

    bool has_exact() const { return static_cast<bool>(exact); }
};

template <int Dim>
double exact_solution(const ProblemSpec<Dim>& spec, const Vec<Dim>& x) {
    if (!spec.exact)
        throw std::logic_error("problem '" + spec.name + "' has no exact solution");
    return spec.exact(x);
}

// ---------------------------------------------------------------------------
// Benchmark instances
// ---------------------------------------------------------------------------

namespace detail {

inline double min_point_distance_2d(const std::vector<Vec<2>>& pts, const Vec<2>& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts)
        best = std::min(best, std::hypot(x[0] - p[0], x[1] - p[1]));
    return best;
}

inline double min_point_distance_3d(const std::vector<Vec<3>>& pts, const Vec<3>& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts)
        best = std::min(best, std::hypot(x[0] - p[0], x[1] - p[1], x[2] - p[2]));
    return best;
}

inline std::vector<Vec<3>> generators_3d() {
    return {{1.0 / 4, 1.0 / 5, 1.0 / 8}, {1.0 / 3, 1.0 / 7, 7.0 / 9}, {3.0 / 5, 1.0 / 5, 4.0 / 5},
            {3.0 / 4, 1.0 / 2, 1.0 / 4}, {1.0 / 2, 3.0 / 4, 4.0 / 5}, {1.0 / 4, 1.0 / 2, 1.0 / 2},
            {1.0 / 7, 4.0 / 5, 3.0 / 5}, {1.0 / 2, 1.0 / 2, 1.0 / 4}};
}

}  // namespace detail

// 2D benchmarks: 1 (linear advection), 2 (smooth Eikonal source), 4
// (shape-from-shading), 5 (Voronoi generators), 6 (boat-sail).
inline ProblemSpec<2> make_benchmark_2d(int id) {
    using std::numbers::pi;
    ProblemSpec<2> p;
    switch (id) {
        case 1: {
            p.name = "linear-advection";
            p.origin = {0.0, 0.0};
            p.extent = {2.0 * pi, 2.0 * pi};
            p.hamiltonian = HamiltonianSpec<2>::linear({1.0, 1.0});
            p.rhs = [](const Vec<2>&) { return 0.0; };
            p.boundary.components.push_back(BoundaryComponent<2>::axis_plane_at(
                0, 0.0, [](const Vec<2>& x) { return -std::sin(x[1]); }));
            p.boundary.components.push_back(BoundaryComponent<2>::axis_plane_at(
                1, 0.0, [](const Vec<2>& x) { return std::sin(x[0]); }));
            p.exact = [](const Vec<2>& x) { return std::sin(x[0] - x[1]); };
            p.gamma = 1.0;
            return p;
        }
        case 2: {
            p.name = "smooth-source";
            p.origin = {-1.0, -1.0};
            p.extent = {2.0, 2.0};
            p.hamiltonian = HamiltonianSpec<2>::eikonal();
            p.rhs = [](const Vec<2>& x) {
                const double sx = std::sin(pi + 0.5 * pi * x[0]);
                const double sy = std::sin(pi + 0.5 * pi * x[1]);
                return 0.5 * pi * std::sqrt(sx * sx + sy * sy);
            };
            p.exact = [](const Vec<2>& x) {
                return std::cos(pi + 0.5 * pi * x[0]) + std::cos(pi + 0.5 * pi * x[1]);
            };
            p.boundary.components.push_back(
                BoundaryComponent<2>::point_set({{0.0, 0.0}}, {-2.0}));
            p.gamma = 0.4;
            return p;
        }
        case 4: {
            p.name = "shape-from-shading";
            p.origin = {0.0, 0.0};
            p.extent = {1.0, 1.0};
            p.hamiltonian = HamiltonianSpec<2>::eikonal();
            p.rhs = [](const Vec<2>& x) {
                const double a = std::cos(2.0 * pi * x[0]) * std::sin(2.0 * pi * x[1]);
                const double b = std::sin(2.0 * pi * x[0]) * std::cos(2.0 * pi * x[1]);
                return 2.0 * pi * std::sqrt(a * a + b * b);
            };
            p.exact = [](const Vec<2>& x) {
                const double s = std::abs(std::sin(2.0 * pi * x[0]) * std::sin(2.0 * pi * x[1]));
                if (std::abs(x[0] + x[1] - 1.0) < 0.5 && std::abs(x[0] - x[1]) < 0.5)
                    return std::max(s, 1.0 + std::cos(2.0 * pi * x[0]) * std::cos(2.0 * pi * x[1]));
                return s;
            };
            auto zero = [](const Vec<2>&) { return 0.0; };
            p.boundary.components.push_back(BoundaryComponent<2>::axis_plane_at(0, 0.0, zero));
            p.boundary.components.push_back(BoundaryComponent<2>::axis_plane_at(0, 1.0, zero));
            p.boundary.components.push_back(BoundaryComponent<2>::axis_plane_at(1, 0.0, zero));
            p.boundary.components.push_back(BoundaryComponent<2>::axis_plane_at(1, 1.0, zero));
            p.boundary.components.push_back(BoundaryComponent<2>::point_set(
                {{0.25, 0.25}, {0.75, 0.75}, {0.25, 0.75}, {0.75, 0.25}, {0.5, 0.5}},
                {1.0, 1.0, 1.0, 1.0, 2.0}));
            p.gamma = 0.4;
            return p;
        }
        case 5: {
            p.name = "voronoi-2d";
            p.origin = {0.0, 0.0};
            p.extent = {1.0, 1.0};
            p.hamiltonian = HamiltonianSpec<2>::eikonal();
            p.rhs = [](const Vec<2>&) { return 1.0; };
            std::vector<Vec<2>> gens = {{1.0 / 4, 1.0 / 5}, {1.0 / 3, 1.0 / 7}, {3.0 / 5, 1.0 / 5},
                                        {3.0 / 4, 1.0 / 2}, {1.0 / 2, 3.0 / 4}, {1.0 / 4, 1.0 / 2},
                                        {1.0 / 7, 4.0 / 5}, {1.0 / 2, 1.0 / 2}};
            p.exact = [gens](const Vec<2>& x) { return detail::min_point_distance_2d(gens, x); };
            p.boundary.components.push_back(
                BoundaryComponent<2>::point_set(gens, std::vector<double>(gens.size(), 0.0)));
            p.gamma = 0.8;
            return p;
        }
        case 6: {
            p.name = "boat-sail-2d";
            p.origin = {0.0, 0.0};
            p.extent = {1.0, 1.0};
            p.hamiltonian = HamiltonianSpec<2>::boatsail(1.0, {0.4, 0.0});
            p.rhs = [](const Vec<2>&) { return 1.0; };
            std::vector<Vec<2>> harbors = {{1.0 / 4, 1.0 / 5},  {5.0 / 16, 1.0 / 8},
                                           {3.0 / 5, 1.0 / 5},  {3.0 / 4, 3.0 / 5},
                                           {1.0 / 2, 3.0 / 4},  {1.0 / 4, 1.0 / 2},
                                           {1.0 / 8, 4.0 / 5},  {1.0 / 2, 1.0 / 2}};
            p.boundary.components.push_back(
                BoundaryComponent<2>::point_set(harbors, std::vector<double>(harbors.size(), 0.0)));
            p.gamma = 0.8;
            return p;
        }
        default:
            throw std::invalid_argument("make_benchmark_2d: no 2D benchmark with id " +
                                        std::to_string(id));
    }
}

// 3D benchmarks: 3 (two-sphere distance), 5 (Voronoi generators), 6
// (boat-sail).
inline ProblemSpec<3> make_benchmark_3d(int id) {
    ProblemSpec<3> p;
    switch (id) {
        case 3: {
            p.name = "two-sphere";
            p.origin = {-3.0, -3.0, -3.0};
            p.extent = {6.0, 6.0, 6.0};
            p.hamiltonian = HamiltonianSpec<3>::eikonal();
            p.rhs = [](const Vec<3>&) { return 1.0; };
            const Vec<3> c1{-1.0, 0.0, 0.0};
            const Vec<3> c2{std::sqrt(1.5), 0.0, 0.0};
            p.exact = [c1, c2](const Vec<3>& x) {
                const double d1 =
                    std::abs(std::hypot(x[0] - c1[0], x[1] - c1[1], x[2] - c1[2]) - 0.5);
                const double d2 =
                    std::abs(std::hypot(x[0] - c2[0], x[1] - c2[1], x[2] - c2[2]) - 0.5);
                return std::min(d1, d2);
            };
            auto zero = [](const Vec<3>&) { return 0.0; };
            p.boundary.components.push_back(BoundaryComponent<3>::sphere_at(c1, 0.5, zero));
            p.boundary.components.push_back(BoundaryComponent<3>::sphere_at(c2, 0.5, zero));
            p.gamma = 0.8;
            return p;
        }
        case 5: {
            p.name = "voronoi-3d";
            p.origin = {0.0, 0.0, 0.0};
            p.extent = {1.0, 1.0, 1.0};
            p.hamiltonian = HamiltonianSpec<3>::eikonal();
            p.rhs = [](const Vec<3>&) { return 1.0; };
            auto gens = detail::generators_3d();
            p.exact = [gens](const Vec<3>& x) { return detail::min_point_distance_3d(gens, x); };
            p.boundary.components.push_back(
                BoundaryComponent<3>::point_set(gens, std::vector<double>(gens.size(), 0.0)));
            p.gamma = 0.8;
            return p;
        }
        case 6: {
            p.name = "boat-sail-3d";
            p.origin = {0.0, 0.0, 0.0};
            p.extent = {1.0, 1.0, 1.0};
            p.hamiltonian = HamiltonianSpec<3>::boatsail(1.0, {0.4, 0.4, 0.0});
            p.rhs = [](const Vec<3>&) { return 1.0; };
            auto harbors = detail::generators_3d();
            p.boundary.components.push_back(
                BoundaryComponent<3>::point_set(harbors, std::vector<double>(harbors.size(), 0.0)));
            p.gamma = 0.8;
            return p;
        }
        default:
            throw std::invalid_argument("make_benchmark_3d: no 3D benchmark with id " +
                                        std::to_string(id));
    }
}

}  // namespace fsweep
