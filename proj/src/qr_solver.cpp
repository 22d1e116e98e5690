#include "invsrc/qr_solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace invsrc {

SparseMatrixCSR assemble_operator_D(const GridSpec& spec, const SpatialField& c,
                                    const SpaceTimeField& f,
                                    const std::optional<SpaceTimeField>& f_t_in) {
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j)
            if (f.at(i, j, 1) == 0.0)
                throw std::invalid_argument("assemble_operator_D: f(x, 0) vanishes at a node");

    const SpaceTimeField ft = f_t_in ? *f_t_in : time_derivative(f);
    const int N = spec.lineup_size();
    const double dt = spec.dt();
    const double lam = 1.0 / (spec.dx() * spec.dx());

    std::vector<Triplet> trips;
    trips.reserve(static_cast<size_t>(spec.N_x - 1) * (spec.N_x - 1) * spec.N_t * 7);
    for (int i = 2; i <= spec.N_x; ++i)
        for (int j = 2; j <= spec.N_x; ++j)
            for (int l = 2; l <= spec.n_time(); ++l) {
                const int n = lineup(spec, i, j, l) - 1;
                trips.push_back({n, n, 1.0 / dt + 4.0 * lam - c.at(i, j)});
                trips.push_back({n, lineup(spec, i, j, l - 1) - 1, -1.0 / dt});
                trips.push_back({n, lineup(spec, i, j, 1) - 1, -ft.at(i, j, l) / f.at(i, j, 1)});
                trips.push_back({n, lineup(spec, i + 1, j, l) - 1, -lam});
                trips.push_back({n, lineup(spec, i - 1, j, l) - 1, -lam});
                trips.push_back({n, lineup(spec, i, j + 1, l) - 1, -lam});
                trips.push_back({n, lineup(spec, i, j - 1, l) - 1, -lam});
            }
    return SparseMatrixCSR::from_triplets(N, N, std::move(trips));
}

std::pair<SparseMatrixCSR, SparseMatrixCSR> assemble_gradient(const GridSpec& spec) {
    const int N = spec.lineup_size();
    const double inv_dx = 1.0 / spec.dx();
    std::vector<Triplet> tx, ty;
    for (int i = 2; i <= spec.n_space(); ++i)
        for (int j = 2; j <= spec.n_space(); ++j)
            for (int l = 1; l <= spec.n_time(); ++l) {
                const int n = lineup(spec, i, j, l) - 1;
                tx.push_back({n, n, inv_dx});
                tx.push_back({n, lineup(spec, i - 1, j, l) - 1, -inv_dx});
                ty.push_back({n, n, inv_dx});
                ty.push_back({n, lineup(spec, i, j - 1, l) - 1, -inv_dx});
            }
    return {SparseMatrixCSR::from_triplets(N, N, std::move(tx)),
            SparseMatrixCSR::from_triplets(N, N, std::move(ty))};
}

SparseMatrixCSR assemble_dirichlet_K1(const GridSpec& spec) {
    const int N = spec.lineup_size();
    std::vector<Triplet> trips;
    for (auto [i, j] : boundary_nodes(spec))
        for (int l = 1; l <= spec.n_time(); ++l) {
            const int n = lineup(spec, i, j, l) - 1;
            trips.push_back({n, n, 1.0});
        }
    return SparseMatrixCSR::from_triplets(N, N, std::move(trips));
}

SparseMatrixCSR assemble_neumann_K2(const GridSpec& spec) {
    const int N = spec.lineup_size();
    const double inv_dx = 1.0 / spec.dx();
    std::vector<Triplet> trips;
    for (auto [i, j] : boundary_nodes(spec)) {
        auto [ni, nj] = inward_neighbor(spec, i, j);
        for (int l = 1; l <= spec.n_time(); ++l) {
            const int n = lineup(spec, i, j, l) - 1;
            trips.push_back({n, n, inv_dx});
            trips.push_back({n, lineup(spec, ni, nj, l) - 1, -inv_dx});
        }
    }
    return SparseMatrixCSR::from_triplets(N, N, std::move(trips));
}

std::vector<double> lineup_data(const BoundaryFluxSeries& data) {
    std::vector<double> g(data.spec.lineup_size(), 0.0);
    int node = 0;
    for (auto [i, j] : data.nodes) {
        for (int l = 1; l <= data.spec.n_time(); ++l)
            g[lineup(data.spec, i, j, l) - 1] = data.at(node, l);
        ++node;
    }
    return g;
}

QrSolution solve_qr(const QrProblem& problem) {
    if (problem.epsilon <= 0.0) throw std::invalid_argument("solve_qr: epsilon must be > 0");
    if (problem.data_gt.kind != BoundaryKind::flux_rate)
        throw std::invalid_argument("solve_qr: data must be a flux-rate series");
    const GridSpec& spec = problem.spec;
    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    SparseMatrixCSR D = assemble_operator_D(spec, problem.c, problem.f, problem.f_t);
    auto [Dx, Dy] = assemble_gradient(spec);
    SparseMatrixCSR K1 = assemble_dirichlet_K1(spec);
    SparseMatrixCSR K2 = assemble_neumann_K2(spec);

    const double eps = problem.epsilon;
    const double w = problem.weighted_gram ? spec.dt() * spec.dx() * spec.dx() : 1.0;
    SparseMatrixCSR A = gram_accumulate(
        {{&D, w}, {&K1, 1.0}, {&K2, 1.0}, {&Dx, eps * w}, {&Dy, eps * w}}, eps * w);

    std::vector<double> g = lineup_data(problem.data_gt);
    std::vector<double> b = matvec_transpose(K2, g);
    auto t1 = clock::now();

    SolveResult sol = solve_spd(A, b, 1e-10, 0, SpdMethod::direct);
    auto t2 = clock::now();

    QrSolution out;
    out.v = from_lineup(spec, sol.x);
    out.p = SpatialField(spec);
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j)
            out.p.at(i, j) = out.v.at(i, j, 1) / problem.f.at(i, j, 1);
    out.residual = sol.residual;
    out.iterations = sol.iterations;

    auto sq = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return s;
    };
    std::vector<double> K2v = matvec(K2, sol.x);
    for (size_t k = 0; k < K2v.size(); ++k) K2v[k] -= g[k];
    out.misfit = w * sq(matvec(D, sol.x)) + sq(matvec(K1, sol.x)) + sq(K2v);
    out.penalty = sq(sol.x) + sq(matvec(Dx, sol.x)) + sq(matvec(Dy, sol.x));
    out.assemble_seconds = std::chrono::duration<double>(t1 - t0).count();
    out.solve_seconds = std::chrono::duration<double>(t2 - t1).count();
    return out;
}

}  // namespace invsrc
