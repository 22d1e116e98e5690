#include "invsrc/sparse.hpp"

#include <Eigen/CholmodSupport>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace invsrc {

SparseMatrixCSR SparseMatrixCSR::from_triplets(int rows, int cols,
                                               std::vector<Triplet> triplets) {
    for (const Triplet& t : triplets)
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::domain_error("from_triplets: entry out of bounds");
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    SparseMatrixCSR A;
    A.rows = rows;
    A.cols = cols;
    A.row_offsets.assign(rows + 1, 0);
    for (size_t k = 0; k < triplets.size();) {
        size_t m = k + 1;
        double sum = triplets[k].value;
        while (m < triplets.size() && triplets[m].row == triplets[k].row &&
               triplets[m].col == triplets[k].col) {
            sum += triplets[m].value;
            ++m;
        }
        A.col_indices.push_back(triplets[k].col);
        A.values.push_back(sum);
        A.row_offsets[triplets[k].row + 1]++;
        k = m;
    }
    for (int r = 0; r < rows; ++r) A.row_offsets[r + 1] += A.row_offsets[r];
    return A;
}

SparseMatrixCSR SparseMatrixCSR::identity(int n) {
    SparseMatrixCSR A;
    A.rows = A.cols = n;
    A.row_offsets.resize(n + 1);
    A.col_indices.resize(n);
    A.values.assign(n, 1.0);
    for (int r = 0; r <= n; ++r) A.row_offsets[r] = r;
    for (int r = 0; r < n; ++r) A.col_indices[r] = r;
    return A;
}

std::vector<double> matvec(const SparseMatrixCSR& A, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != A.cols)
        throw std::domain_error("matvec: dimension mismatch");
    std::vector<double> y(A.rows, 0.0);
    for (int r = 0; r < A.rows; ++r) {
        double s = 0.0;
        for (int k = A.row_offsets[r]; k < A.row_offsets[r + 1]; ++k)
            s += A.values[k] * x[A.col_indices[k]];
        y[r] = s;
    }
    return y;
}

std::vector<double> matvec_transpose(const SparseMatrixCSR& A, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != A.rows)
        throw std::domain_error("matvec_transpose: dimension mismatch");
    std::vector<double> y(A.cols, 0.0);
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_offsets[r]; k < A.row_offsets[r + 1]; ++k)
            y[A.col_indices[k]] += A.values[k] * x[r];
    return y;
}

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseMatrixCSR& A) {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(A.nnz());
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_offsets[r]; k < A.row_offsets[r + 1]; ++k)
            trips.emplace_back(r, A.col_indices[k], A.values[k]);
    Eigen::SparseMatrix<double> E(A.rows, A.cols);
    E.setFromTriplets(trips.begin(), trips.end());
    return E;
}

SparseMatrixCSR from_eigen(const Eigen::SparseMatrix<double>& E) {
    Eigen::SparseMatrix<double, Eigen::RowMajor> R = E;
    R.makeCompressed();
    SparseMatrixCSR A;
    A.rows = static_cast<int>(R.rows());
    A.cols = static_cast<int>(R.cols());
    A.row_offsets.assign(R.outerIndexPtr(), R.outerIndexPtr() + R.rows() + 1);
    A.col_indices.assign(R.innerIndexPtr(), R.innerIndexPtr() + R.nonZeros());
    A.values.assign(R.valuePtr(), R.valuePtr() + R.nonZeros());
    return A;
}

}  // namespace

SparseMatrixCSR gram_accumulate(
    const std::vector<std::pair<const SparseMatrixCSR*, double>>& terms,
    double identity_weight) {
    if (terms.empty() && identity_weight == 0.0)
        throw std::domain_error("gram_accumulate: nothing to accumulate");
    int n = terms.empty() ? 0 : terms.front().first->cols;
    for (const auto& [A, w] : terms) {
        (void)w;
        if (A->cols != n) throw std::domain_error("gram_accumulate: column dimension mismatch");
    }
    Eigen::SparseMatrix<double> S(n, n);
    for (const auto& [A, w] : terms) {
        Eigen::SparseMatrix<double> E = to_eigen(*A);
        S += w * Eigen::SparseMatrix<double>(E.transpose() * E);
    }
    if (identity_weight != 0.0) {
        Eigen::SparseMatrix<double> I(n, n);
        I.setIdentity();
        S += identity_weight * I;
    }
    return from_eigen(S);
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

namespace {

SolveResult solve_direct(const SparseMatrixCSR& A, const std::vector<double>& b, double tol) {
    Eigen::SparseMatrix<double> E = to_eigen(A);
    // Supernodal Cholesky (CHOLMOD) with nested-dissection ordering: on these
    // space-time Gram systems it is an order of magnitude faster than Eigen's
    // simplicial factorization.
    Eigen::CholmodSupernodalLLT<Eigen::SparseMatrix<double>> ldlt(E);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("solve_spd: Cholesky factorization failed");
    Eigen::Map<const Eigen::VectorXd> bv(b.data(), b.size());
    Eigen::VectorXd x = ldlt.solve(bv);
    const double bnorm = bv.norm();
    SolveResult out;
    out.iterations = 1;
    // Iterative refinement: the factorization of a severely ill-conditioned
    // Gram system can leave a residual above tol.
    for (int pass = 0; pass < 4; ++pass) {
        Eigen::VectorXd r = bv - E * x;
        out.residual = r.norm() / bnorm;
        if (out.residual <= tol) break;
        x += ldlt.solve(r);
        out.iterations++;
    }
    out.x.assign(x.data(), x.data() + x.size());
    return out;
}

SolveResult solve_cg(const SparseMatrixCSR& A, const std::vector<double>& b, double tol,
                     int max_iter) {
    const int n = A.rows;
    std::vector<double> diag(n, 1.0);
    for (int r = 0; r < n; ++r)
        for (int k = A.row_offsets[r]; k < A.row_offsets[r + 1]; ++k)
            if (A.col_indices[k] == r && A.values[k] != 0.0) diag[r] = A.values[k];

    SolveResult out;
    out.x.assign(n, 0.0);
    std::vector<double> r = b;
    const double bnorm = norm2(b);
    std::vector<double> z(n), p(n);
    for (int k = 0; k < n; ++k) z[k] = r[k] / diag[k];
    p = z;
    double rz = dot(r, z);
    for (int it = 0; it < max_iter; ++it) {
        out.residual = norm2(r) / bnorm;
        if (out.residual <= tol) return out;
        std::vector<double> Ap = matvec(A, p);
        double alpha = rz / dot(p, Ap);
        for (int k = 0; k < n; ++k) {
            out.x[k] += alpha * p[k];
            r[k] -= alpha * Ap[k];
        }
        for (int k = 0; k < n; ++k) z[k] = r[k] / diag[k];
        double rz_new = dot(r, z);
        double beta = rz_new / rz;
        rz = rz_new;
        for (int k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
        out.iterations = it + 1;
    }
    out.residual = norm2(r) / bnorm;
    if (out.residual > tol)
        throw std::runtime_error("solve_spd: cg did not converge, residual " +
                                 std::to_string(out.residual));
    return out;
}

}  // namespace

SolveResult solve_spd(const SparseMatrixCSR& A, const std::vector<double>& b, double tol,
                      int max_iter, SpdMethod method) {
    if (A.rows != A.cols || static_cast<int>(b.size()) != A.rows)
        throw std::domain_error("solve_spd: dimension mismatch");
    if (tol <= 0.0) throw std::domain_error("solve_spd: tol must be positive");
    if (norm2(b) == 0.0) {
        SolveResult out;
        out.x.assign(A.rows, 0.0);
        return out;
    }
    return method == SpdMethod::direct ? solve_direct(A, b, tol) : solve_cg(A, b, tol, max_iter);
}

void write_matrix_market(const SparseMatrixCSR& A, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("write_matrix_market: cannot open " + path);
    std::fprintf(f, "%%%%MatrixMarket matrix coordinate real general\n");
    std::fprintf(f, "%d %d %zu\n", A.rows, A.cols, A.nnz());
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_offsets[r]; k < A.row_offsets[r + 1]; ++k)
            std::fprintf(f, "%d %d %.17g\n", r + 1, A.col_indices[k] + 1, A.values[k]);
    std::fclose(f);
}

}  // namespace invsrc
