#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invsrc {

/// Square spatial grid on (-R,R)^2 plus a uniform partition of [0,T].
///
/// Grid nodes are (x_i, y_j) = (-R + (i-1)*dx, -R + (j-1)*dx) for
/// 1 <= i,j <= N_x+1 and time levels t_l = (l-1)*dt for 1 <= l <= N_t+1.
/// All public indices are 1-based; conversion to 0-based storage happens
/// inside the accessors and nowhere else.
struct GridSpec {
    double R = 1.0;
    int N_x = 2;
    int N_t = 1;
    double T = 0.2;

    GridSpec() = default;
    GridSpec(double R_, int N_x_, int N_t_, double T_)
        : R(R_), N_x(N_x_), N_t(N_t_), T(T_) {
        if (R <= 0.0 || T <= 0.0 || N_x < 2 || N_t < 1)
            throw std::invalid_argument("GridSpec: need R > 0, T > 0, N_x >= 2, N_t >= 1");
    }

    double dx() const { return 2.0 * R / N_x; }
    double dt() const { return T / N_t; }

    int n_space() const { return N_x + 1; }   // nodes per spatial axis
    int n_time() const { return N_t + 1; }    // time levels
    int lineup_size() const { return n_space() * n_space() * n_time(); }
    int n_boundary() const { return 4 * N_x; }

    double x(int i) const { return -R + (i - 1) * dx(); }
    double y(int j) const { return -R + (j - 1) * dx(); }
    double t(int l) const { return (l - 1) * dt(); }

    bool operator==(const GridSpec&) const = default;
};

/// 1-based (i, j, l) triple addressing one space-time node.
struct NodeIndex {
    int i = 1;
    int j = 1;
    int l = 1;

    bool operator==(const NodeIndex&) const = default;
};

inline void check_index(const GridSpec& spec, const NodeIndex& idx) {
    if (idx.i < 1 || idx.i > spec.n_space() || idx.j < 1 || idx.j > spec.n_space() ||
        idx.l < 1 || idx.l > spec.n_time())
        throw std::domain_error("node index (" + std::to_string(idx.i) + "," +
                                std::to_string(idx.j) + "," + std::to_string(idx.l) +
                                ") out of range for grid");
}

/// Ordinal of node (i,j,l) in the lineup vector:
///   n = (i-1)(N_x+1)(N_t+1) + (j-1)(N_t+1) + l,  1-based.
inline int lineup(const GridSpec& spec, const NodeIndex& idx) {
    check_index(spec, idx);
    return (idx.i - 1) * spec.n_space() * spec.n_time() + (idx.j - 1) * spec.n_time() + idx.l;
}

inline int lineup(const GridSpec& spec, int i, int j, int l) {
    return lineup(spec, NodeIndex{i, j, l});
}

/// Inverse of lineup().
inline NodeIndex delineup(const GridSpec& spec, int n) {
    if (n < 1 || n > spec.lineup_size())
        throw std::domain_error("lineup ordinal " + std::to_string(n) + " out of range");
    const int n0 = n - 1;
    const int stride_i = spec.n_space() * spec.n_time();
    NodeIndex idx;
    idx.i = n0 / stride_i + 1;
    idx.j = (n0 % stride_i) / spec.n_time() + 1;
    idx.l = n0 % spec.n_time() + 1;
    return idx;
}

inline bool is_boundary_node(const GridSpec& spec, int i, int j) {
    return i == 1 || i == spec.n_space() || j == 1 || j == spec.n_space();
}

/// Spatial boundary nodes (i,j) in row-major scan order, each corner listed
/// once. Count is always 4*N_x.
std::vector<std::pair<int, int>> boundary_nodes(const GridSpec& spec);

/// Which side a boundary node belongs to, x-sides taking precedence at
/// corners (this matches the clause order of the Neumann constraint matrix).
enum class BoundarySide { x_minus, x_plus, y_minus, y_plus };

BoundarySide boundary_side(const GridSpec& spec, int i, int j);

/// The interior node adjacent to a boundary node along its owning side.
std::pair<int, int> inward_neighbor(const GridSpec& spec, int i, int j);

}  // namespace invsrc
