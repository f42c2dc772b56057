// Error norms against exact solutions, convergence orders, and CSV emission
// of refinement studies.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsweep/field.hpp"
#include "fsweep/grid.hpp"

namespace fsweep {

struct ErrorNorms {
    double l1 = 0.0;
    double linf = 0.0;
};

// L1 (average absolute error) and Linf error against the exact solution,
// over non-fixed grid points. The pinned band carries given data and is
// excluded. The average convention reproduces the reference error tables;
// the volume-weighted discrete integral is this times the domain volume.
template <int Dim>
ErrorNorms error_norms(const ScalarField<Dim>& field,
                       const std::function<double(const Vec<Dim>&)>& exact) {
    if (!exact) throw std::invalid_argument("error_norms: no exact solution supplied");
    double sum = 0.0, worst = 0.0;
    std::size_t n = 0;
    for_each_point<Dim>(field.grid, [&](const Index<Dim>& id, std::size_t p) {
        if (field.fixed[p]) return;
        const double e = std::abs(field.values[p] - exact(field.grid.point(id)));
        sum += e;
        worst = std::max(worst, e);
        ++n;
    });
    if (n == 0) throw std::invalid_argument("error_norms: no non-fixed points to evaluate");
    return {sum / static_cast<double>(n), worst};
}

// log2 ratios of consecutive errors under grid halving.
inline std::vector<double> convergence_orders(const std::vector<double>& errors) {
    if (errors.size() < 2)
        throw std::invalid_argument("convergence_orders: need at least two errors");
    std::vector<double> orders;
    orders.reserve(errors.size() - 1);
    for (std::size_t k = 1; k < errors.size(); ++k) {
        if (!(errors[k - 1] > 0.0) || !(errors[k] > 0.0))
            throw std::invalid_argument("convergence_orders: errors must be positive");
        orders.push_back(std::log2(errors[k - 1] / errors[k]));
    }
    return orders;
}

enum class StudyMode { single, sparse_lagrange, sparse_weno };

inline const char* to_string(StudyMode m) {
    switch (m) {
        case StudyMode::single: return "single";
        case StudyMode::sparse_lagrange: return "sparse-lagrange";
        case StudyMode::sparse_weno: return "sparse-weno";
    }
    return "?";
}

// One refinement ladder: the grid (or root grid) doubles between consecutive
// rows.
struct RefinementStudy {
    struct Row {
        int n = 0;  // N_h for single runs, N_r for sparse runs
        bool has_error = false;
        double l1 = 0.0;
        double linf = 0.0;
        long iterations = 0;
        double wall_seconds = 0.0;
    };

    StudyMode mode = StudyMode::single;
    std::vector<Row> rows;
};

namespace detail {

inline std::string csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace detail

// CSV table with columns N, L1 error, L1 order, Linf error, Linf order, CPU
// seconds; orders are "-" on the first row. Studies without an exact
// solution drop the error columns.
inline void emit_table(const RefinementStudy& study, std::ostream& out) {
    if (study.rows.empty()) throw std::invalid_argument("emit_table: empty study");
    const bool with_errors = study.rows.front().has_error;
    if (with_errors) {
        out << "N,L1_error,L1_order,Linf_error,Linf_order,cpu_seconds\n";
        for (std::size_t k = 0; k < study.rows.size(); ++k) {
            const auto& r = study.rows[k];
            std::string o1 = "-", oi = "-";
            if (k > 0) {
                const auto& prev = study.rows[k - 1];
                o1 = detail::csv_number(std::log2(prev.l1 / r.l1));
                oi = detail::csv_number(std::log2(prev.linf / r.linf));
            }
            out << r.n << ',' << detail::csv_number(r.l1) << ',' << o1 << ','
                << detail::csv_number(r.linf) << ',' << oi << ','
                << detail::csv_number(r.wall_seconds) << '\n';
        }
    } else {
        out << "N,cpu_seconds\n";
        for (const auto& r : study.rows)
            out << r.n << ',' << detail::csv_number(r.wall_seconds) << '\n';
    }
    if (!out) throw std::runtime_error("emit_table: write failed");
}

}  // namespace fsweep
