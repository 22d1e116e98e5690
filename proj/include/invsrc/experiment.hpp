#pragma once

#include <string>
#include <vector>

#include "invsrc/config.hpp"
#include "invsrc/fields.hpp"
#include "invsrc/phantoms.hpp"

namespace invsrc {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MetricRow {
    std::string inclusion;
    double extreme_true = 0.0;
    double extreme_comp = 0.0;
    double err_rel = 0.0;
};

/// Per-inclusion extreme of the reconstruction over the region dilated by one
/// grid cell: max for positive inclusions, min for negative ones. Throws if a
/// region covers no grid node.
std::vector<MetricRow> metric_extreme_errors(const SpatialField& field,
                                             const std::vector<InclusionRegion>& regions);

/// gamma(t_l) = ||data(., t_l)||_{L2(boundary)} with the dx line measure.
std::vector<std::pair<double, double>> gamma_curve(const BoundaryFluxSeries& data);

/// Run one configured experiment end to end and write all artifacts into
/// config.output_dir. Returns the metric rows it wrote.
std::vector<MetricRow> run(const RunConfig& config);

}  // namespace invsrc
