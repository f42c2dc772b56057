// Plain-text field dumps readable by standard plotting tools, and their
// reload for round-trip checks.
//
// Format: a line "dim D", a line with "origin spacing points" repeated per
// axis, then one value per line in storage order (axis 0 fastest). Values
// are printed with enough digits to round-trip bit-exactly.
#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fsweep/field.hpp"
#include "fsweep/grid.hpp"

namespace fsweep {

template <int Dim>
void dump_field(const ScalarField<Dim>& field, std::ostream& out) {
    out << "dim " << Dim << '\n';
    out.precision(17);
    for (int a = 0; a < Dim; ++a) {
        if (a) out << ' ';
        out << field.grid.origin[a] << ' ' << field.grid.spacing[a] << ' '
            << field.grid.points(a);
    }
    out << '\n';
    for (double v : field.values) out << v << '\n';
    if (!out) throw std::runtime_error("dump_field: write failed");
}

template <int Dim>
void dump_field(const ScalarField<Dim>& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("dump_field: cannot open " + path);
    dump_field(field, out);
}

template <int Dim>
ScalarField<Dim> load_field(std::istream& in) {
    std::string tag;
    int dim = 0;
    if (!(in >> tag >> dim) || tag != "dim")
        throw std::runtime_error("load_field: malformed header");
    if (dim != Dim)
        throw std::runtime_error("load_field: file holds a " + std::to_string(dim) +
                                 "D field, expected " + std::to_string(Dim) + "D");
    Vec<Dim> origin, spacing;
    Index<Dim> cells;
    for (int a = 0; a < Dim; ++a) {
        int points = 0;
        if (!(in >> origin[a] >> spacing[a] >> points) || points < 2)
            throw std::runtime_error("load_field: malformed axis header");
        cells[a] = points - 1;
    }
    // Rebuild the grid directly; dumps may hold grids smaller than the
    // solver's minimum size.
    CartesianGrid<Dim> grid;
    grid.origin = origin;
    grid.spacing = spacing;
    grid.cells = cells;
    for (int a = 0; a < Dim; ++a) grid.extent[a] = spacing[a] * cells[a];
    ScalarField<Dim> field(grid);
    for (double& v : field.values)
        if (!(in >> v)) throw std::runtime_error("load_field: truncated value section");
    return field;
}

template <int Dim>
ScalarField<Dim> load_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_field: cannot open " + path);
    return load_field<Dim>(in);
}

}  // namespace fsweep
