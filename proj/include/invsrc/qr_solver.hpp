#pragma once

#include <optional>

#include "invsrc/fields.hpp"
#include "invsrc/grid.hpp"
#include "invsrc/sparse.hpp"

namespace invsrc {

/// One linear inverse source problem: recover v (and then p = v(.,0)/f(.,0))
/// from the time-differentiated flux data on the lateral boundary.
struct QrProblem {
    GridSpec spec;
    SpatialField c;
    SpaceTimeField f;
    BoundaryFluxSeries data_gt;  // kind = flux_rate
    double epsilon = 1e-8;
    /// If set, the Gram terms coming from the PDE residual and the H1 penalty
    /// carry the dt*dx^2 quadrature weight of the functional; by default the
    /// stabilized system is assembled literally, unweighted.
    bool weighted_gram = false;
    /// Analytic time derivative of f; computed by finite differences when absent.
    std::optional<SpaceTimeField> f_t;
};

struct QrSolution {
    SpaceTimeField v;
    SpatialField p;
    double residual = 0.0;
    int iterations = 0;
    // Diagnostics of the minimized quadratic at the solution.
    double misfit = 0.0;   // |D v|^2 * w + |K1 v|^2 + |K2 v - g|^2
    double penalty = 0.0;  // |v|^2 + |Dx v|^2 + |Dy v|^2
    double assemble_seconds = 0.0;
    double solve_seconds = 0.0;
};

/// Discrete operator of the residual equation
///   v_t - Laplace(v) - c v - (f_t / f(.,0)) v(.,0)
/// acting on lineup vectors. Rows exist for interior nodes 2 <= i,j <= N_x at
/// time levels 2 <= l <= N_t+1:
///   diagonal        1/dt + 4/dx^2 - c(i,j)
///   (i,j,l-1)      -1/dt
///   (i,j,1)        -f_t(i,j,l) / f(i,j,1)   (sums with the above when l = 2)
///   (i+-1,j,l), (i,j+-1,l)   -1/dx^2
/// Boundary rows and the l = 1 layer are identically zero; those constraints
/// live in K1 and K2.
SparseMatrixCSR assemble_operator_D(const GridSpec& spec, const SpatialField& c,
                                    const SpaceTimeField& f,
                                    const std::optional<SpaceTimeField>& f_t = std::nullopt);

/// Forward-difference gradient matrices: rows for 2 <= i,j <= N_x+1, all time
/// levels, with +1/dx on the diagonal and -1/dx at (i-1,j,l) resp. (i,j-1,l).
std::pair<SparseMatrixCSR, SparseMatrixCSR> assemble_gradient(const GridSpec& spec);

/// Dirichlet constraint: identity rows at every boundary (i,j), all levels.
SparseMatrixCSR assemble_dirichlet_K1(const GridSpec& spec);

/// Neumann constraint: rows at boundary nodes with +1/dx on the diagonal and
/// -1/dx at the adjacent interior node, x-sides owning the corners.
SparseMatrixCSR assemble_neumann_K2(const GridSpec& spec);

/// Lineup vector with the data values at boundary ordinals, zero elsewhere.
std::vector<double> lineup_data(const BoundaryFluxSeries& data);

/// Assemble and solve the stabilized normal equations
///   [D^T D + K1^T K1 + K2^T K2 + eps (Id + Dx^T Dx + Dy^T Dy)] v = K2^T g
/// and derive p = v(., t_1) / f(., t_1).
QrSolution solve_qr(const QrProblem& problem);

}  // namespace invsrc
