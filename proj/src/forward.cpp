#include "invsrc/forward.hpp"

#include <cmath>
#include <stdexcept>

#include "invsrc/sparse.hpp"

namespace invsrc {

namespace {

// Interior unknown numbering for the time-stepping systems: row-major over
// 2 <= i,j <= N_x.
int interior_index(const GridSpec& spec, int i, int j) {
    return (i - 2) * (spec.N_x - 1) + (j - 2);
}

}  // namespace

SpaceTimeField solve_forward(const ForwardProblem& problem) {
    const GridSpec& spec = problem.spec;
    const double dx = spec.dx(), dt = spec.dt();
    const double lam = 1.0 / (dx * dx);
    const int ns = spec.n_space();
    const int n_int = (spec.N_x - 1) * (spec.N_x - 1);

    // Compatibility of Dirichlet data with the initial condition at t = 0.
    {
        int node = 0;
        double scale = std::max(1.0, problem.initial.max_abs());
        for (auto [bi, bj] : problem.dirichlet.nodes) {
            if (std::fabs(problem.dirichlet.at(node, 1) - problem.initial.at(bi, bj)) >
                1e-12 * scale)
                throw std::invalid_argument(
                    "solve_forward: dirichlet(t=0) disagrees with initial condition");
            ++node;
        }
    }

    // Crank-Nicolson: (I/dt - A/2) u^{l+1} = (I/dt + A/2) u^l + (S^l + S^{l+1})/2
    // with A = Laplace_h + c restricted to interior unknowns.
    std::vector<Triplet> trips;
    trips.reserve(static_cast<size_t>(n_int) * 5);
    for (int i = 2; i <= spec.N_x; ++i)
        for (int j = 2; j <= spec.N_x; ++j) {
            const int r = interior_index(spec, i, j);
            trips.push_back({r, r, 1.0 / dt + 2.0 * lam - 0.5 * problem.c.at(i, j)});
            if (i > 2) trips.push_back({r, interior_index(spec, i - 1, j), -0.5 * lam});
            if (i < spec.N_x) trips.push_back({r, interior_index(spec, i + 1, j), -0.5 * lam});
            if (j > 2) trips.push_back({r, interior_index(spec, i, j - 1), -0.5 * lam});
            if (j < spec.N_x) trips.push_back({r, interior_index(spec, i, j + 1), -0.5 * lam});
        }
    SparseMatrixCSR M = SparseMatrixCSR::from_triplets(n_int, n_int, trips);

    SpaceTimeField u(spec);
    // t = 0 layer.
    for (int i = 1; i <= ns; ++i)
        for (int j = 1; j <= ns; ++j) u.at(i, j, 1) = problem.initial.at(i, j);
    {
        int node = 0;
        for (auto [bi, bj] : problem.dirichlet.nodes)
            u.at(bi, bj, 1) = problem.dirichlet.at(node++, 1);
    }

    auto apply_explicit = [&](int i, int j, int l) {
        // (I/dt + A/2) applied pointwise to the full layer l.
        const double lap = u.at(i + 1, j, l) + u.at(i - 1, j, l) + u.at(i, j + 1, l) +
                           u.at(i, j - 1, l) - 4.0 * u.at(i, j, l);
        return u.at(i, j, l) / dt + 0.5 * (lam * lap + problem.c.at(i, j) * u.at(i, j, l));
    };

    std::vector<double> rhs(n_int);
    for (int l = 1; l <= spec.N_t; ++l) {
        // Next layer's boundary values enter the implicit stencil.
        int node = 0;
        for (auto [bi, bj] : problem.dirichlet.nodes)
            u.at(bi, bj, l + 1) = problem.dirichlet.at(node++, l + 1);
        for (int i = 2; i <= spec.N_x; ++i)
            for (int j = 2; j <= spec.N_x; ++j) {
                double b = apply_explicit(i, j, l) +
                           0.5 * (problem.source.at(i, j, l) + problem.source.at(i, j, l + 1));
                if (i == 2) b += 0.5 * lam * u.at(1, j, l + 1);
                if (i == spec.N_x) b += 0.5 * lam * u.at(ns, j, l + 1);
                if (j == 2) b += 0.5 * lam * u.at(i, 1, l + 1);
                if (j == spec.N_x) b += 0.5 * lam * u.at(i, ns, l + 1);
                rhs[interior_index(spec, i, j)] = b;
            }
        SolveResult sol = solve_spd(M, rhs, 1e-12, 10000, SpdMethod::cg);
        for (int i = 2; i <= spec.N_x; ++i)
            for (int j = 2; j <= spec.N_x; ++j)
                u.at(i, j, l + 1) = sol.x[interior_index(spec, i, j)];
    }
    return u;
}

BoundaryFluxSeries extract_normal_flux(const SpaceTimeField& u) {
    const GridSpec& spec = u.spec;
    BoundaryFluxSeries G(spec, BoundaryKind::flux);
    const double dx = spec.dx();
    int node = 0;
    for (auto [i, j] : G.nodes) {
        auto [ni, nj] = inward_neighbor(spec, i, j);
        for (int l = 1; l <= spec.n_time(); ++l)
            G.at(node, l) = (u.at(i, j, l) - u.at(ni, nj, l)) / dx;
        ++node;
    }
    return G;
}

SpaceTimeField restrict_to_coarse(const SpaceTimeField& fine, const GridSpec& coarse,
                                  int refinement) {
    const GridSpec& fs = fine.spec;
    if (fs.N_x != coarse.N_x * refinement || fs.N_t != coarse.N_t * refinement)
        throw std::invalid_argument("restrict_to_coarse: grids are not nested");
    SpaceTimeField out(coarse);
    for (int i = 1; i <= coarse.n_space(); ++i)
        for (int j = 1; j <= coarse.n_space(); ++j)
            for (int l = 1; l <= coarse.n_time(); ++l)
                out.at(i, j, l) = fine.at((i - 1) * refinement + 1, (j - 1) * refinement + 1,
                                          (l - 1) * refinement + 1);
    return out;
}

namespace {

SpaceTimeField solve_refined_and_restrict(const ForwardProblem& fine_problem,
                                          const GridSpec& coarse, int refinement) {
    SpaceTimeField u_fine = solve_forward(fine_problem);
    return refinement == 1 ? u_fine : restrict_to_coarse(u_fine, coarse, refinement);
}

}  // namespace

BoundaryFluxSeries generate_data(const SpatialFn& p_true, const SpaceTimeFn& f,
                                 const SpatialFn& c, const GridSpec& spec, int refinement) {
    if (refinement < 1) throw std::invalid_argument("generate_data: refinement must be >= 1");
    GridSpec fine(spec.R, spec.N_x * refinement, spec.N_t * refinement, spec.T);
    for (int i = 1; i <= fine.n_space(); ++i)
        for (int j = 1; j <= fine.n_space(); ++j)
            if (f(fine.x(i), fine.y(j), 0.0) == 0.0)
                throw std::invalid_argument("generate_data: f(x, 0) vanishes on the grid");

    ForwardProblem prob;
    prob.spec = fine;
    prob.c = sample(c, fine);
    prob.source = sample(
        [&](double x, double y, double t) { return f(x, y, t) * p_true(x, y); }, fine);
    prob.dirichlet = BoundaryFluxSeries(fine, BoundaryKind::trace);
    prob.initial = SpatialField(fine);

    SpaceTimeField u = solve_refined_and_restrict(prob, spec, refinement);
    // Backward differences keep the data stencil aligned with the inversion
    // operator's time discretization; the central pairing biases the
    // reconstructed amplitude measurably.
    return backward_time_derivative(extract_normal_flux(u));
}

BoundaryFluxSeries generate_measured_flux(const SpatialFn& c_true, const SpatialFn& g,
                                          const SpaceTimeFn& g1, const GridSpec& spec,
                                          int refinement) {
    if (refinement < 1)
        throw std::invalid_argument("generate_measured_flux: refinement must be >= 1");
    GridSpec fine(spec.R, spec.N_x * refinement, spec.N_t * refinement, spec.T);

    ForwardProblem prob;
    prob.spec = fine;
    prob.c = sample(c_true, fine);
    prob.source = SpaceTimeField(fine);
    prob.initial = sample(g, fine);
    prob.dirichlet = BoundaryFluxSeries(fine, BoundaryKind::trace);
    {
        int node = 0;
        for (auto [i, j] : prob.dirichlet.nodes) {
            for (int l = 1; l <= fine.n_time(); ++l)
                prob.dirichlet.at(node, l) = g1(fine.x(i), fine.y(j), fine.t(l));
            ++node;
        }
    }

    SpaceTimeField u = solve_refined_and_restrict(prob, spec, refinement);
    return extract_normal_flux(u);
}

}  // namespace invsrc
