#pragma once

#include <string>
#include <vector>

namespace invsrc {

struct Triplet {
    int row;
    int col;
    double value;
};

/// Compressed sparse row matrix. Built from triplets (duplicates sum),
/// immutable afterwards.
struct SparseMatrixCSR {
    int rows = 0;
    int cols = 0;
    std::vector<int> row_offsets;  // size rows+1
    std::vector<int> col_indices;
    std::vector<double> values;

    static SparseMatrixCSR from_triplets(int rows, int cols, std::vector<Triplet> triplets);
    static SparseMatrixCSR identity(int n);

    size_t nnz() const { return values.size(); }
};

std::vector<double> matvec(const SparseMatrixCSR& A, const std::vector<double>& x);
std::vector<double> matvec_transpose(const SparseMatrixCSR& A, const std::vector<double>& x);

/// Sum of weight_k * A_k^T A_k over the given terms, plus identity_weight * Id.
/// All terms must share the column dimension; the result is symmetric.
SparseMatrixCSR gram_accumulate(
    const std::vector<std::pair<const SparseMatrixCSR*, double>>& terms,
    double identity_weight = 0.0);

enum class SpdMethod { direct, cg };

struct SolveResult {
    std::vector<double> x;
    int iterations = 0;
    double residual = 0.0;  // relative, ||Ax-b|| / ||b||
};

/// Solve Ax = b for symmetric positive definite A.
///
/// direct: sparse LDL^T factorization plus iterative refinement until the
/// relative residual reaches tol (iterations counts refinement passes).
/// cg: Jacobi-preconditioned conjugate gradients; suited to the
/// well-conditioned time-stepping systems, not to the Tikhonov Gram system.
/// Throws on failure to reach tol within max_iter (cg) or on a singular
/// factorization (direct). b = 0 returns x = 0 immediately.
SolveResult solve_spd(const SparseMatrixCSR& A, const std::vector<double>& b, double tol,
                      int max_iter, SpdMethod method = SpdMethod::direct);

double norm2(const std::vector<double>& v);
double dot(const std::vector<double>& a, const std::vector<double>& b);

/// MatrixMarket coordinate dump (1-based indices) for external verification.
void write_matrix_market(const SparseMatrixCSR& A, const std::string& path);

}  // namespace invsrc
