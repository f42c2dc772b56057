#include "fsweep/interp.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fsweep/field.hpp"
#include "fsweep/grid.hpp"

using namespace fsweep;

namespace {

constexpr double kEps = 1e-6;

double weno_weight1(const std::array<double, 3>& v, double alpha_tilde) {
    const double g1 = 1.0 - 0.5 * alpha_tilde;
    const double g2 = 0.5 * alpha_tilde;
    const double b1 = (v[1] - v[0]) * (v[1] - v[0]);
    const double b2 = (v[2] - v[1]) * (v[2] - v[1]);
    const double wt1 = g1 / ((kEps + b1) * (kEps + b1));
    const double wt2 = g2 / ((kEps + b2) * (kEps + b2));
    return wt1 / (wt1 + wt2);
}

}  // namespace

TEST(WenoInterp, CollocationAtCenterIsExact) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, 3> v{dist(rng), dist(rng), dist(rng)};
        EXPECT_EQ(weno3_interp_1d(v, {0, 1.0, kEps}), v[1]);
    }
}

TEST(WenoInterp, LinearDataMidpoint) {
    EXPECT_DOUBLE_EQ(weno3_interp_1d({0.0, 1.0, 2.0}, {0, 0.5, kEps}), 0.5);
}

TEST(WenoInterp, StepDataSelectsFlatSide) {
    // beta_1 = 0 drives w_1 -> 1 and the interpolant stays on the flat side.
    EXPECT_NEAR(weno3_interp_1d({0.0, 0.0, 1.0}, {0, 0.5, kEps}), 0.0, 1e-5);
}

TEST(WenoInterp, WeightsAreNormalizedAndInteriorWhenGammasAre) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> data(-3.0, 3.0);
    std::uniform_real_distribution<double> alpha(0.01, 1.99);
    for (int trial = 0; trial < 500; ++trial) {
        std::array<double, 3> v{data(rng), data(rng), data(rng)};
        const double w1 = weno_weight1(v, alpha(rng));
        EXPECT_GT(w1, 0.0);
        EXPECT_LT(w1, 1.0);
    }
}

TEST(LagrangeInterp, QuadraticReproduction) {
    EXPECT_DOUBLE_EQ(lagrange3_interp_1d({0.0, 1.0, 4.0}, 0.5), 0.25);
    EXPECT_EQ(lagrange3_interp_1d({3.0, -2.0, 5.0}, 1.0), -2.0);
    EXPECT_DOUBLE_EQ(lagrange3_interp_1d({1.0, 2.0, 3.0}, 1.25), 2.25);
}

TEST(Prolongate, ConstantFieldIsExact) {
    auto plan = semi_coarsened_family<2>({0.0, 0.0}, {1.0, 1.0}, {4, 4}, 2);
    auto src_grid = plan.grid_for({0, 1});
    ScalarField<2> src(src_grid);
    for (auto& v : src.values) v = 7.25;
    for (auto method : {InterpMethod::lagrange, InterpMethod::weno}) {
        auto out = prolongate<2>(src, plan.finest_grid(), method, kEps);
        for (double v : out.values) EXPECT_EQ(v, 7.25);
    }
}

TEST(Prolongate, LinearFieldIsExactThroughBothAxes) {
    auto plan = semi_coarsened_family<2>({0.0, 0.0}, {1.0, 1.0}, {5, 5}, 2);
    auto src_grid = plan.grid_for({0, 2});
    auto f = [](const Vec<2>& x) { return x[0] + 2.0 * x[1]; };
    auto src = sample_field<2>(src_grid, f);
    auto target = plan.finest_grid();
    for (auto method : {InterpMethod::lagrange, InterpMethod::weno}) {
        auto out = prolongate<2>(src, target, method, kEps);
        for_each_point<2>(target, [&](const Index<2>& id, std::size_t p) {
            EXPECT_NEAR(out.values[p], f(target.point(id)), 1e-13);
        });
    }
}

TEST(Prolongate, CollocationCopiesSourcePoints) {
    auto plan = semi_coarsened_family<2>({-1.0, -1.0}, {2.0, 2.0}, {6, 6}, 2);
    auto src_grid = plan.grid_for({1, 0});
    ScalarField<2> src(src_grid);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (auto& v : src.values) v = dist(rng);

    auto target = plan.finest_grid();
    for (auto method : {InterpMethod::lagrange, InterpMethod::weno}) {
        auto out = prolongate<2>(src, target, method, kEps);
        const int r0 = target.cells[0] / src_grid.cells[0];
        const int r1 = target.cells[1] / src_grid.cells[1];
        for_each_point<2>(src_grid, [&](const Index<2>& id, std::size_t p) {
            const Index<2> fine_id{id[0] * r0, id[1] * r1};
            EXPECT_EQ(out.values[target.linear_index(fine_id)], src.values[p]);
        });
    }
}

TEST(Prolongate, ThirdOrderOnSmoothField) {
    // sin(x - y) on component grids of halving root size; the interpolation
    // error must fall at third order in the coarse spacing.
    const double two_pi = 2.0 * std::numbers::pi;
    auto f = [](const Vec<2>& x) { return std::sin(x[0] - x[1]); };

    auto max_error = [&](int root, InterpMethod method) {
        auto plan = semi_coarsened_family<2>({0.0, 0.0}, {two_pi, two_pi}, {root, root}, 3);
        auto src = sample_field<2>(plan.grid_for({1, 2}), f);
        auto target = plan.finest_grid();
        auto out = prolongate<2>(src, target, method, kEps);
        double worst = 0.0;
        for_each_point<2>(target, [&](const Index<2>& id, std::size_t p) {
            worst = std::max(worst, std::abs(out.values[p] - f(target.point(id))));
        });
        return worst;
    };

    const double e20 = max_error(20, InterpMethod::lagrange);
    const double e40 = max_error(40, InterpMethod::lagrange);
    const double e80 = max_error(80, InterpMethod::lagrange);
    EXPECT_LT(e20, 5e-4);
    EXPECT_GE(std::log2(e20 / e40), 2.5);
    EXPECT_GE(std::log2(e40 / e80), 2.5);
}

TEST(Prolongate, WenoThirdOrderAwayFromExtrema) {
    // Monotone smooth data (no critical points), so the nonlinear weights
    // stay close to the linear ones everywhere.
    auto f = [](const Vec<2>& x) { return std::exp(0.8 * x[0] + 0.3 * x[1]); };
    auto max_error = [&](int root) {
        auto plan = semi_coarsened_family<2>({0.0, 0.0}, {1.0, 1.0}, {root, root}, 2);
        auto src = sample_field<2>(plan.grid_for({0, 1}), f);
        auto target = plan.finest_grid();
        auto out = prolongate<2>(src, target, InterpMethod::weno, kEps);
        double worst = 0.0;
        for_each_point<2>(target, [&](const Index<2>& id, std::size_t p) {
            worst = std::max(worst, std::abs(out.values[p] - f(target.point(id))));
        });
        return worst;
    };
    const double e8 = max_error(8);
    const double e16 = max_error(16);
    const double e32 = max_error(32);
    EXPECT_GE(std::log2(e8 / e16), 2.5);
    EXPECT_GE(std::log2(e16 / e32), 2.5);
}

TEST(Prolongate, LagrangeAxisOrderCommutes) {
    // Tensor-product property: x-then-y equals y-then-x for the linear
    // interpolant. Checked by prolongating the transposed field.
    auto f = [](const Vec<2>& x) { return std::cos(1.3 * x[0]) * std::sin(0.7 * x[1]) + x[0]; };
    auto plan = semi_coarsened_family<2>({0.0, 0.0}, {1.0, 1.0}, {8, 8}, 2);
    auto src = sample_field<2>(plan.grid_for({0, 1}), f);
    auto target = plan.finest_grid();
    auto direct = prolongate<2>(src, target, InterpMethod::lagrange, kEps);

    // Transpose source, prolongate, transpose back.
    auto transpose = [](const ScalarField<2>& in) {
        auto g = in.grid;
        std::swap(g.origin[0], g.origin[1]);
        std::swap(g.extent[0], g.extent[1]);
        std::swap(g.cells[0], g.cells[1]);
        std::swap(g.spacing[0], g.spacing[1]);
        std::swap(g.levels[0], g.levels[1]);
        ScalarField<2> out(g);
        for_each_point<2>(in.grid, [&](const Index<2>& id, std::size_t p) {
            out.values[out.grid.linear_index({id[1], id[0]})] = in.values[p];
        });
        return out;
    };
    auto transposed_target = transpose(direct).grid;
    auto swapped = prolongate<2>(transpose(src), transposed_target, InterpMethod::lagrange, kEps);
    auto back = transpose(swapped);
    for (std::size_t p = 0; p < direct.values.size(); ++p)
        EXPECT_NEAR(direct.values[p], back.values[p], 1e-13);
}

TEST(Prolongate, RejectsNonNestedSource) {
    auto coarse = build_grid<2>({0.0, 0.0}, {1.0, 1.0}, {6, 6});
    auto fine = build_grid<2>({0.0, 0.0}, {1.0, 1.0}, {16, 16});
    ScalarField<2> src(coarse);
    EXPECT_THROW(prolongate<2>(src, fine, InterpMethod::lagrange, kEps), std::invalid_argument);
}
