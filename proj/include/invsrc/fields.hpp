#pragma once

#include <functional>
#include <vector>

#include "invsrc/grid.hpp"

namespace invsrc {

/// Scalar function of (x, y) sampled on the spatial grid. 1-based access.
struct SpatialField {
    GridSpec spec;
    std::vector<double> values;  // row-major in (i, j)

    SpatialField() = default;
    explicit SpatialField(const GridSpec& s)
        : spec(s), values(static_cast<size_t>(s.n_space()) * s.n_space(), 0.0) {}

    double& at(int i, int j) { return values[idx(i, j)]; }
    double at(int i, int j) const { return values[idx(i, j)]; }

    double max_abs() const;
    double max() const;
    double min() const;

  private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i - 1) * spec.n_space() + (j - 1);
    }
};

/// Scalar function of (x, y, t) on all grid nodes and time levels.
/// Storage order equals the lineup ordering, so to_lineup is a plain copy.
struct SpaceTimeField {
    GridSpec spec;
    std::vector<double> values;

    SpaceTimeField() = default;
    explicit SpaceTimeField(const GridSpec& s)
        : spec(s), values(static_cast<size_t>(s.lineup_size()), 0.0) {}

    double& at(int i, int j, int l) { return values[idx(i, j, l)]; }
    double at(int i, int j, int l) const { return values[idx(i, j, l)]; }

    SpatialField slice(int l) const;

  private:
    size_t idx(int i, int j, int l) const {
        return static_cast<size_t>(i - 1) * spec.n_space() * spec.n_time() +
               static_cast<size_t>(j - 1) * spec.n_time() + (l - 1);
    }
};

enum class BoundaryKind { trace, flux, flux_rate };

/// Time series of a scalar on the 4*N_x boundary nodes: Dirichlet traces,
/// normal flux G, or its time derivative G_t.
struct BoundaryFluxSeries {
    GridSpec spec;
    BoundaryKind kind = BoundaryKind::flux;
    std::vector<std::pair<int, int>> nodes;  // boundary_nodes(spec) order
    std::vector<double> values;              // [node][time level]

    BoundaryFluxSeries() = default;
    BoundaryFluxSeries(const GridSpec& s, BoundaryKind k)
        : spec(s), kind(k), nodes(boundary_nodes(s)),
          values(static_cast<size_t>(s.n_boundary()) * s.n_time(), 0.0) {}

    double& at(int node, int l) { return values[idx(node, l)]; }
    double at(int node, int l) const { return values[idx(node, l)]; }

  private:
    size_t idx(int node, int l) const {
        return static_cast<size_t>(node) * spec.n_time() + (l - 1);
    }
};

std::vector<double> to_lineup(const SpaceTimeField& field);
SpaceTimeField from_lineup(const GridSpec& spec, const std::vector<double>& v);

/// Second-order time derivative of a boundary series: central differences at
/// interior levels, one-sided three-point stencils at the ends. Needs N_t >= 2.
BoundaryFluxSeries time_derivative(const BoundaryFluxSeries& series);

/// Same stencils applied to a full space-time field (used for f_t).
SpaceTimeField time_derivative(const SpaceTimeField& field);

/// Backward-difference time derivative, (G_l - G_{l-1}) / dt with the first
/// level copying the second. This is the stencil the inversion operator uses
/// for v_t, so differentiated measurement data stays mutually consistent with
/// it (the reconstruction bias of the mixed central/backward pairing is
/// measurable at desk scale). Needs N_t >= 1.
BoundaryFluxSeries backward_time_derivative(const BoundaryFluxSeries& series);

SpatialField sample(const std::function<double(double, double)>& fn, const GridSpec& spec);
SpaceTimeField sample(const std::function<double(double, double, double)>& fn,
                      const GridSpec& spec);

}  // namespace invsrc
