// Benchmark driver: run configurations (flags or key = value config files),
// single-grid and sparse-grid executions, "refine root grid" ladders, and
// the CSV / field-dump / timing outputs.
#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsweep/analysis.hpp"
#include "fsweep/combine.hpp"
#include "fsweep/io.hpp"
#include "fsweep/problem.hpp"
#include "fsweep/sweep.hpp"

namespace fsweep {

enum class RunMode { single, sparse };

// A problem assembled from a config file: one of the built-in Hamiltonian
// families, a constant right-hand side, and an isolated-point boundary set.
struct CustomProblemConfig {
    bool defined = false;
    int dim = 2;
    std::string name = "custom";
    std::string hamiltonian = "eikonal";  // eikonal | boat-sail | linear
    std::vector<double> origin, extent;
    double speed = 1.0;                   // boat-sail front speed
    std::vector<double> flow;             // boat-sail drift
    std::vector<double> advection;        // linear H = a . p
    double rhs = 1.0;
    double gamma = 0.8;
    std::vector<std::vector<double>> points;  // x y [z] g
};

struct RunConfig {
    int example = 0;   // 1..6; 0 with a custom problem
    int dim_case = 0;  // 2 or 3; 0 = example default
    RunMode mode = RunMode::single;
    std::optional<InterpMethod> prolongation;  // default: per example
    std::optional<DerivMode> derivative;       // default: per example
    int nh = 0;
    int nr = 0;
    int nl = 3;
    std::optional<double> gamma;
    double epsilon = 1e-6;
    double delta = 1e-11;
    double first_order_delta = 1e-4;
    long max_iterations = 1000000;
    int workers = 0;  // 0 = one per available core, capped by the component count
    int study = 1;  // rows in the refinement ladder
    std::string table_out, field_out, timing_out;
    CustomProblemConfig custom;
};

struct RunRow {
    int n = 0;  // N_h for single runs, N_r for sparse runs
    int target_cells = 0;
    bool has_error = false;
    double l1 = 0.0, linf = 0.0;
    long iterations = 0;  // high-order sweeps (summed over components)
    double init_seconds = 0.0, warm_start_seconds = 0.0, sweep_seconds = 0.0;
    double prolong_seconds = 0.0, combine_seconds = 0.0, total_seconds = 0.0;
    struct ComponentStat {
        std::vector<int> levels;
        int coefficient = 0;
        long iterations = 0;
        double seconds = 0.0;
    };
    std::vector<ComponentStat> components;
};

struct RunReport {
    std::string problem;
    RunMode mode = RunMode::single;
    InterpMethod prolongation = InterpMethod::weno;
    DerivMode derivative = DerivMode::weno3;
    std::vector<RunRow> rows;
};

namespace detail {

inline DerivMode default_derivative(int example) {
    return example == 1 ? DerivMode::linear3 : DerivMode::weno3;
}

inline InterpMethod default_prolongation(int example) {
    return example == 1 ? InterpMethod::lagrange : InterpMethod::weno;
}

inline int default_case(int example) {
    switch (example) {
        case 1:
        case 2:
        case 4:
            return 2;
        case 3:
            return 3;
        default:
            return 0;  // Examples 5 and 6 need an explicit case
    }
}

template <int Dim>
ProblemSpec<Dim> custom_problem(const CustomProblemConfig& c) {
    ProblemSpec<Dim> p;
    p.name = c.name;
    if (c.origin.size() != Dim || c.extent.size() != Dim)
        throw std::invalid_argument("custom problem: origin/extent need " + std::to_string(Dim) +
                                    " entries");
    for (int a = 0; a < Dim; ++a) {
        p.origin[a] = c.origin[a];
        p.extent[a] = c.extent[a];
    }
    if (c.hamiltonian == "eikonal") {
        p.hamiltonian = HamiltonianSpec<Dim>::eikonal();
    } else if (c.hamiltonian == "boat-sail") {
        if (c.flow.size() != Dim)
            throw std::invalid_argument("custom problem: flow needs " + std::to_string(Dim) +
                                        " entries");
        Vec<Dim> flow;
        for (int a = 0; a < Dim; ++a) flow[a] = c.flow[a];
        p.hamiltonian = HamiltonianSpec<Dim>::boatsail(c.speed, flow);
    } else if (c.hamiltonian == "linear") {
        if (c.advection.size() != Dim)
            throw std::invalid_argument("custom problem: advection needs " + std::to_string(Dim) +
                                        " entries");
        Vec<Dim> adv;
        for (int a = 0; a < Dim; ++a) adv[a] = c.advection[a];
        p.hamiltonian = HamiltonianSpec<Dim>::linear(adv);
    } else {
        throw std::invalid_argument("custom problem: unknown hamiltonian '" + c.hamiltonian + "'");
    }
    const double f = c.rhs;
    p.rhs = [f](const Vec<Dim>&) { return f; };
    p.gamma = c.gamma;
    std::vector<Vec<Dim>> positions;
    std::vector<double> values;
    for (const auto& pt : c.points) {
        if (pt.size() != Dim + 1)
            throw std::invalid_argument("custom problem: each point needs " +
                                        std::to_string(Dim) + " coordinates plus a value");
        Vec<Dim> x;
        for (int a = 0; a < Dim; ++a) x[a] = pt[a];
        positions.push_back(x);
        values.push_back(pt[Dim]);
    }
    if (positions.empty())
        throw std::invalid_argument("custom problem: at least one boundary point is required");
    p.boundary.components.push_back(
        BoundaryComponent<Dim>::point_set(std::move(positions), std::move(values)));
    return p;
}

template <int Dim>
ProblemSpec<Dim> resolve_problem(const RunConfig& cfg) {
    if (cfg.example == 0) return custom_problem<Dim>(cfg.custom);
    if constexpr (Dim == 2)
        return make_benchmark_2d(cfg.example);
    else
        return make_benchmark_3d(cfg.example);
}

template <int Dim>
RunReport run_config_impl(const RunConfig& cfg) {
    ProblemSpec<Dim> spec = resolve_problem<Dim>(cfg);

    RunReport report;
    report.problem = spec.name;
    report.mode = cfg.mode;
    report.derivative = cfg.derivative.value_or(default_derivative(cfg.example));
    report.prolongation = cfg.prolongation.value_or(default_prolongation(cfg.example));

    SweepConfig sweep;
    sweep.gamma = cfg.gamma.value_or(spec.gamma);
    sweep.epsilon = cfg.epsilon;
    sweep.delta = cfg.delta;
    sweep.warm_start_delta = cfg.first_order_delta;
    sweep.max_iterations = cfg.max_iterations;
    sweep.derivative_mode = report.derivative;

    if (cfg.study < 1) throw std::invalid_argument("run config: study must be >= 1");

    std::optional<ScalarField<Dim>> last_field;
    for (int step = 0; step < cfg.study; ++step) {
        RunRow row;
        if (cfg.mode == RunMode::single) {
            if (cfg.nh < 4) throw std::invalid_argument("run config: single mode needs nh >= 4");
            row.n = cfg.nh << step;
            row.target_cells = row.n;
            Index<Dim> cells;
            cells.fill(row.n);
            auto grid = build_grid<Dim>(spec.origin, spec.extent, cells);
            auto result = solve_single_grid<Dim>(spec, grid, sweep);
            row.iterations = result.iterations;
            row.init_seconds = result.init_seconds;
            row.warm_start_seconds = result.warm_start_seconds;
            row.sweep_seconds = result.sweep_seconds;
            row.total_seconds = result.total_seconds();
            if (spec.has_exact()) {
                auto norms = error_norms<Dim>(result.field, spec.exact);
                row.has_error = true;
                row.l1 = norms.l1;
                row.linf = norms.linf;
            }
            last_field = std::move(result.field);
        } else {
            if (cfg.nr < 4) throw std::invalid_argument("run config: sparse mode needs nr >= 4");
            if (cfg.nl < 1 || (Dim == 3 && cfg.nl < 2))
                throw std::invalid_argument(
                    "run config: sparse mode needs nl >= 1 (>= 2 in three dimensions)");
            row.n = cfg.nr << step;
            row.target_cells = row.n << cfg.nl;
            Index<Dim> root;
            root.fill(row.n);
            auto plan = semi_coarsened_family<Dim>(spec.origin, spec.extent, root, cfg.nl);
            auto result = solve_sparse<Dim>(spec, plan, sweep, report.prolongation, cfg.workers);
            row.init_seconds = result.init_seconds;
            row.warm_start_seconds = result.warm_start_seconds;
            row.sweep_seconds = result.sweep_seconds;
            row.prolong_seconds = result.prolong_seconds;
            row.combine_seconds = result.combine_seconds;
            row.total_seconds = result.total_seconds;
            for (const auto& comp : result.components) {
                row.iterations += comp.iterations;
                RunRow::ComponentStat stat;
                stat.levels.assign(comp.levels.begin(), comp.levels.end());
                stat.coefficient = comp.coefficient;
                stat.iterations = comp.iterations;
                stat.seconds = comp.wall_seconds;
                row.components.push_back(std::move(stat));
            }
            if (spec.has_exact()) {
                auto norms = error_norms<Dim>(result.combined, spec.exact);
                row.has_error = true;
                row.l1 = norms.l1;
                row.linf = norms.linf;
            }
            last_field = std::move(result.combined);
        }
        report.rows.push_back(std::move(row));
    }

    if (!cfg.field_out.empty() && last_field) dump_field(*last_field, cfg.field_out);
    return report;
}

inline StudyMode study_mode(const RunReport& r) {
    if (r.mode == RunMode::single) return StudyMode::single;
    return r.prolongation == InterpMethod::lagrange ? StudyMode::sparse_lagrange
                                                    : StudyMode::sparse_weno;
}

}  // namespace detail

inline RefinementStudy to_study(const RunReport& report) {
    RefinementStudy study;
    study.mode = detail::study_mode(report);
    for (const auto& r : report.rows)
        study.rows.push_back({r.n, r.has_error, r.l1, r.linf, r.iterations, r.total_seconds});
    return study;
}

inline nlohmann::json timing_record(const RunReport& report) {
    nlohmann::json doc;
    doc["problem"] = report.problem;
    doc["mode"] = report.mode == RunMode::single ? "single" : "sparse";
    doc["derivative"] = to_string(report.derivative);
    doc["prolongation"] =
        report.prolongation == InterpMethod::lagrange ? "lagrange" : "weno";
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row;
        row["n"] = r.n;
        row["target_cells"] = r.target_cells;
        row["iterations"] = r.iterations;
        row["phases"] = {{"init", r.init_seconds},
                         {"first_order_warm_start", r.warm_start_seconds},
                         {"high_order_sweeps", r.sweep_seconds},
                         {"prolongation", r.prolong_seconds},
                         {"combination", r.combine_seconds}};
        row["total_seconds"] = r.total_seconds;
        if (r.has_error) {
            row["l1_error"] = r.l1;
            row["linf_error"] = r.linf;
        }
        if (!r.components.empty()) {
            row["components"] = nlohmann::json::array();
            for (const auto& c : r.components)
                row["components"].push_back({{"levels", c.levels},
                                             {"coefficient", c.coefficient},
                                             {"iterations", c.iterations},
                                             {"seconds", c.seconds}});
        }
        doc["rows"].push_back(std::move(row));
    }
    return doc;
}

// Execute a run configuration: resolve the problem, run the solve or the
// refinement ladder, and write the requested outputs.
inline RunReport run_config(const RunConfig& cfg) {
    int dim = cfg.dim_case;
    if (cfg.example != 0) {
        if (dim == 0) dim = detail::default_case(cfg.example);
        if (dim == 0)
            throw std::invalid_argument("run config: examples 5 and 6 need --case 2d or 3d");
        if (cfg.example == 3 && dim != 3)
            throw std::invalid_argument("run config: example 3 is three-dimensional");
        if ((cfg.example == 1 || cfg.example == 2 || cfg.example == 4) && dim != 2)
            throw std::invalid_argument("run config: examples 1, 2 and 4 are two-dimensional");
    } else {
        if (!cfg.custom.defined)
            throw std::invalid_argument("run config: select --example 1..6 or define a problem");
        dim = cfg.custom.dim;
    }

    RunReport report;
    if (dim == 2)
        report = detail::run_config_impl<2>(cfg);
    else if (dim == 3)
        report = detail::run_config_impl<3>(cfg);
    else
        throw std::invalid_argument("run config: dimension must be 2 or 3");

    if (!cfg.table_out.empty()) {
        std::ofstream out(cfg.table_out);
        if (!out) throw std::runtime_error("run config: cannot open " + cfg.table_out);
        emit_table(to_study(report), out);
    }
    if (!cfg.timing_out.empty()) {
        std::ofstream out(cfg.timing_out);
        if (!out) throw std::runtime_error("run config: cannot open " + cfg.timing_out);
        out << timing_record(report).dump(2) << '\n';
        if (!out) throw std::runtime_error("run config: write failed on " + cfg.timing_out);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Config-file parsing: flat "key = value" lines, with an optional [problem]
// section describing a custom problem. Flags parsed afterwards win.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<double> parse_numbers(const std::string& value, const std::string& key) {
    std::istringstream in(value);
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    if (out.empty())
        throw std::invalid_argument("config: expected numbers for '" + key + "'");
    return out;
}

inline int parse_case(const std::string& value) {
    if (value == "2" || value == "2d" || value == "2D") return 2;
    if (value == "3" || value == "3d" || value == "3D") return 3;
    throw std::invalid_argument("config: case must be 2d or 3d, got '" + value + "'");
}

inline RunMode parse_mode(const std::string& value) {
    if (value == "single") return RunMode::single;
    if (value == "sparse") return RunMode::sparse;
    throw std::invalid_argument("config: mode must be single or sparse, got '" + value + "'");
}

inline InterpMethod parse_prolongation(const std::string& value) {
    if (value == "lagrange") return InterpMethod::lagrange;
    if (value == "weno") return InterpMethod::weno;
    throw std::invalid_argument("config: prolongation must be lagrange or weno, got '" + value +
                                "'");
}

inline DerivMode parse_derivative(const std::string& value) {
    if (value == "first-order") return DerivMode::first_order;
    if (value == "weno3") return DerivMode::weno3;
    if (value == "linear3") return DerivMode::linear3;
    throw std::invalid_argument("config: deriv must be first-order, weno3 or linear3, got '" +
                                value + "'");
}

inline void apply_run_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "example") cfg.example = std::stoi(value);
    else if (key == "case") cfg.dim_case = parse_case(value);
    else if (key == "mode") cfg.mode = parse_mode(value);
    else if (key == "prolongation") cfg.prolongation = parse_prolongation(value);
    else if (key == "deriv") cfg.derivative = parse_derivative(value);
    else if (key == "nh") cfg.nh = std::stoi(value);
    else if (key == "nr") cfg.nr = std::stoi(value);
    else if (key == "nl") cfg.nl = std::stoi(value);
    else if (key == "gamma") cfg.gamma = std::stod(value);
    else if (key == "epsilon") cfg.epsilon = std::stod(value);
    else if (key == "delta") cfg.delta = std::stod(value);
    else if (key == "first-order-delta") cfg.first_order_delta = std::stod(value);
    else if (key == "max-iter") cfg.max_iterations = std::stol(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "study") cfg.study = std::stoi(value);
    else if (key == "table-out") cfg.table_out = value;
    else if (key == "field-out") cfg.field_out = value;
    else if (key == "timing-out") cfg.timing_out = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

inline void apply_problem_key(CustomProblemConfig& c, const std::string& key,
                              const std::string& value) {
    c.defined = true;
    if (key == "name") c.name = value;
    else if (key == "dim") c.dim = std::stoi(value);
    else if (key == "hamiltonian") c.hamiltonian = value;
    else if (key == "origin") c.origin = parse_numbers(value, key);
    else if (key == "extent") c.extent = parse_numbers(value, key);
    else if (key == "speed") c.speed = std::stod(value);
    else if (key == "flow") c.flow = parse_numbers(value, key);
    else if (key == "advection") c.advection = parse_numbers(value, key);
    else if (key == "rhs") c.rhs = std::stod(value);
    else if (key == "gamma") c.gamma = std::stod(value);
    else if (key == "point") c.points.push_back(parse_numbers(value, key));
    else throw std::invalid_argument("config: unknown problem key '" + key + "'");
}

}  // namespace detail

inline void parse_config_stream(std::istream& in, RunConfig& cfg) {
    std::string line;
    bool in_problem = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line == "[problem]") {
                in_problem = true;
                cfg.custom.defined = true;
            } else if (line == "[run]") {
                in_problem = false;
            } else {
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unknown section " + line);
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        try {
            if (in_problem)
                detail::apply_problem_key(cfg.custom, key, value);
            else
                detail::apply_run_key(cfg, key, value);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": bad value for '" + key + "'");
        }
    }
}

inline void parse_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    parse_config_stream(in, cfg);
}

}  // namespace fsweep
