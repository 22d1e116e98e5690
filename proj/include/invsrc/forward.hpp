#pragma once

#include <functional>

#include "invsrc/fields.hpp"
#include "invsrc/grid.hpp"

namespace invsrc {

/// Initial-boundary value problem u_t = Laplace(u) + c u + source on the
/// square, with Dirichlet boundary values and an initial condition.
struct ForwardProblem {
    GridSpec spec;
    SpatialField c;
    SpaceTimeField source;
    BoundaryFluxSeries dirichlet;  // kind = trace
    SpatialField initial;
};

/// Crank-Nicolson in time, 5-point Laplacian in space. The interior system is
/// constant across steps and solved per step by Jacobi-preconditioned CG to a
/// 1e-12 relative residual, so the discrete scheme residual is at solver
/// precision. Throws if the Dirichlet data at t=0 disagrees with the initial
/// condition on the boundary.
SpaceTimeField solve_forward(const ForwardProblem& problem);

/// Outward normal derivative at every boundary node and time level via the
/// one-sided stencil (u_boundary - u_adjacent_interior) / dx. Matches the
/// Neumann constraint matrix of the inversion, x-sides owning the corners.
BoundaryFluxSeries extract_normal_flux(const SpaceTimeField& u);

/// Nearest-node restriction of a field on a grid refined by an integer factor
/// back onto the coarse grid (coarse nodes are a subset of fine nodes).
SpaceTimeField restrict_to_coarse(const SpaceTimeField& fine, const GridSpec& coarse,
                                  int refinement);

using SpatialFn = std::function<double(double, double)>;
using SpaceTimeFn = std::function<double(double, double, double)>;

/// Synthetic data for the inverse source problem: solve the forward problem
/// with source f*p on a grid refined by the given factor in space and time
/// (inverse-crime avoidance), restrict to the inversion grid, extract the
/// flux G with the inversion's own stencil, and differentiate in time.
/// Requires f(x, 0) != 0 everywhere.
BoundaryFluxSeries generate_data(const SpatialFn& p_true, const SpaceTimeFn& f,
                                 const SpatialFn& c, const GridSpec& spec, int refinement);

/// Measured flux F for the coefficient problem: forward solve with the given
/// coefficient, Dirichlet data g1 and initial condition g on a refined grid,
/// restricted and differenced like generate_data but without the time
/// derivative (kind = flux).
BoundaryFluxSeries generate_measured_flux(const SpatialFn& c_true, const SpatialFn& g,
                                          const SpaceTimeFn& g1, const GridSpec& spec,
                                          int refinement);

}  // namespace invsrc
