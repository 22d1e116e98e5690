#pragma once

#include <vector>

#include "invsrc/fields.hpp"
#include "invsrc/grid.hpp"
#include "invsrc/noise.hpp"

namespace invsrc {

/// Coefficient inverse problem: recover c(x) in u_t = Laplace(u) + c u from
/// the boundary flux measurement F, by repeatedly solving the linear inverse
/// source problem with f frozen at the current forward solution.
struct CipProblem {
    GridSpec spec;
    SpatialField g;               // initial condition, > 0 everywhere
    BoundaryFluxSeries g1;        // Dirichlet data over time (kind = trace)
    BoundaryFluxSeries data_F;    // measured flux (kind = flux), clean
    double c0 = 1.0;              // background constant, the initial guess
    int n_star = 20;
    double epsilon = 1e-8;
    NoiseSpec noise;              // applied once to F before iterating
    /// Default update is c_{n+1} = c0 + p_n with the linearization frozen at
    /// the background. The incremental variant updates c_{n+1} = c_n + p_n
    /// and linearizes at c_n instead.
    bool incremental_update = false;
    bool keep_history = true;
};

struct CipState {
    int n = 0;
    SpatialField c_n;
    SpaceTimeField u_n;                  // forward solution at c_n
    std::vector<double> e_history;       // e_1 .. e_n
    std::vector<SpatialField> iterates;  // c_1 .. c_n when history is kept
    std::vector<double> qr_residuals;
    std::vector<double> forward_drift;   // max |u_{n+1} - u_n| per iteration
};

/// max-norm relative difference ||c_new - c_old||_inf / ||c_old||_inf.
double relative_difference(const SpatialField& c_new, const SpatialField& c_old);

CipState cip_iterate(const CipProblem& problem);

}  // namespace invsrc
