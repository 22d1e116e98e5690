#include "invsrc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace invsrc {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    return out;
}

const char* side_name(BoundarySide s) {
    switch (s) {
        case BoundarySide::x_minus: return "x-";
        case BoundarySide::x_plus: return "x+";
        case BoundarySide::y_minus: return "y-";
        case BoundarySide::y_plus: return "y+";
    }
    return "?";
}

}  // namespace

void write_spatial_csv(const SpatialField& field, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "x,y,value\n";
    const GridSpec& spec = field.spec;
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j)
            out << format_double(spec.x(i)) << ',' << format_double(spec.y(j)) << ','
                << format_double(field.at(i, j)) << '\n';
}

SpatialField read_spatial_csv(const GridSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::string line;
    if (!std::getline(in, line) || line != "x,y,value")
        throw IoError(path + ": unexpected header");
    SpatialField field(spec);
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j) {
            if (!std::getline(in, line)) throw IoError(path + ": truncated file");
            std::istringstream ss(line);
            std::string x, y, v;
            std::getline(ss, x, ',');
            std::getline(ss, y, ',');
            std::getline(ss, v, ',');
            field.at(i, j) = std::stod(v);
        }
    return field;
}

void write_spacetime_slice_csv(const SpaceTimeField& field, int l, const std::string& path) {
    write_spatial_csv(field.slice(l), path);
}

void write_boundary_csv(const BoundaryFluxSeries& series, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "side,i,j,t,value\n";
    const GridSpec& spec = series.spec;
    int node = 0;
    for (auto [i, j] : series.nodes) {
        const char* side = side_name(boundary_side(spec, i, j));
        for (int l = 1; l <= spec.n_time(); ++l)
            out << side << ',' << i << ',' << j << ',' << format_double(spec.t(l)) << ','
                << format_double(series.at(node, l)) << '\n';
        ++node;
    }
}

void write_pairs_csv(const std::string& header, const std::vector<std::pair<double, double>>& rows,
                     const std::string& path) {
    std::ofstream out = open_out(path);
    out << header << '\n';
    for (auto [a, b] : rows) out << format_double(a) << ',' << format_double(b) << '\n';
}

}  // namespace invsrc
