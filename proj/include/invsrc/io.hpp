#pragma once

#include <string>
#include <vector>

#include "invsrc/fields.hpp"

namespace invsrc {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV with header "x,y,value", one row per node, row-major in (i, j).
void write_spatial_csv(const SpatialField& field, const std::string& path);
SpatialField read_spatial_csv(const GridSpec& spec, const std::string& path);

/// One spatial CSV for the selected time level of a space-time field.
void write_spacetime_slice_csv(const SpaceTimeField& field, int l, const std::string& path);

/// CSV with header "side,i,j,t,value"; side in {x-,x+,y-,y+}.
void write_boundary_csv(const BoundaryFluxSeries& series, const std::string& path);

/// Generic two-column CSV, e.g. "t,gamma" or "n,e_n".
void write_pairs_csv(const std::string& header, const std::vector<std::pair<double, double>>& rows,
                     const std::string& path);

std::string format_double(double v);  // shortest round-trippable decimal

}  // namespace invsrc
