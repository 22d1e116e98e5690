#include "invsrc/cip.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "invsrc/forward.hpp"
#include "invsrc/qr_solver.hpp"

namespace invsrc {

double relative_difference(const SpatialField& c_new, const SpatialField& c_old) {
    const double denom = c_old.max_abs();
    if (denom == 0.0) throw std::domain_error("relative_difference: previous iterate is zero");
    double num = 0.0;
    for (size_t k = 0; k < c_new.values.size(); ++k)
        num = std::max(num, std::fabs(c_new.values[k] - c_old.values[k]));
    return num / denom;
}

CipState cip_iterate(const CipProblem& problem) {
    const GridSpec& spec = problem.spec;
    if (problem.n_star < 1) throw std::invalid_argument("cip_iterate: n_star must be >= 1");
    for (double v : problem.g.values)
        if (v <= 0.0)
            throw std::invalid_argument("cip_iterate: initial condition must be positive");
    if (problem.data_F.kind != BoundaryKind::flux)
        throw std::invalid_argument("cip_iterate: data_F must be a flux series");

    // Measurements are noisy once; the residual data inherits the noise.
    const BoundaryFluxSeries F = apply_noise(problem.data_F, problem.noise);

    SpatialField background(spec);
    for (double& v : background.values) v = problem.c0;

    CipState state;
    state.c_n = background;

    auto forward_with = [&](const SpatialField& c) {
        ForwardProblem fp;
        fp.spec = spec;
        fp.c = c;
        fp.source = SpaceTimeField(spec);
        fp.dirichlet = problem.g1;
        fp.initial = problem.g;
        return solve_forward(fp);
    };

    state.u_n = forward_with(state.c_n);

    for (int n = 0; n < problem.n_star; ++n) {
        BoundaryFluxSeries flux_n = extract_normal_flux(state.u_n);
        BoundaryFluxSeries G_n(spec, BoundaryKind::flux);
        for (size_t k = 0; k < G_n.values.size(); ++k)
            G_n.values[k] = F.values[k] - flux_n.values[k];

        QrProblem qr;
        qr.spec = spec;
        qr.c = problem.incremental_update ? state.c_n : background;
        qr.f = state.u_n;  // u_n(., 0) = g > 0 keeps the source solver admissible
        qr.data_gt = backward_time_derivative(G_n);
        qr.epsilon = problem.epsilon;
        QrSolution sol;
        try {
            sol = solve_qr(qr);
        } catch (const std::exception& e) {
            throw std::runtime_error("cip_iterate: iteration " + std::to_string(n + 1) +
                                     ": " + e.what());
        }
        state.qr_residuals.push_back(sol.residual);

        SpatialField c_next = problem.incremental_update ? state.c_n : background;
        for (size_t k = 0; k < c_next.values.size(); ++k) c_next.values[k] += sol.p.values[k];

        state.e_history.push_back(relative_difference(c_next, state.c_n));
        state.c_n = c_next;
        if (problem.keep_history) state.iterates.push_back(c_next);

        SpaceTimeField u_next = forward_with(state.c_n);
        double drift = 0.0;
        for (size_t k = 0; k < u_next.values.size(); ++k)
            drift = std::max(drift, std::fabs(u_next.values[k] - state.u_n.values[k]));
        state.forward_drift.push_back(drift);
        state.u_n = std::move(u_next);
        state.n = n + 1;
    }
    return state;
}

}  // namespace invsrc
