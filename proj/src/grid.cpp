#include "invsrc/grid.hpp"

namespace invsrc {

std::vector<std::pair<int, int>> boundary_nodes(const GridSpec& spec) {
    std::vector<std::pair<int, int>> nodes;
    nodes.reserve(spec.n_boundary());
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j)
            if (is_boundary_node(spec, i, j)) nodes.emplace_back(i, j);
    return nodes;
}

BoundarySide boundary_side(const GridSpec& spec, int i, int j) {
    if (i == 1) return BoundarySide::x_minus;
    if (i == spec.n_space()) return BoundarySide::x_plus;
    if (j == 1) return BoundarySide::y_minus;
    if (j == spec.n_space()) return BoundarySide::y_plus;
    throw std::domain_error("boundary_side: (" + std::to_string(i) + "," +
                            std::to_string(j) + ") is not a boundary node");
}

std::pair<int, int> inward_neighbor(const GridSpec& spec, int i, int j) {
    switch (boundary_side(spec, i, j)) {
        case BoundarySide::x_minus: return {2, j};
        case BoundarySide::x_plus: return {spec.N_x, j};
        case BoundarySide::y_minus: return {i, 2};
        case BoundarySide::y_plus: return {i, spec.N_x};
    }
    throw std::logic_error("unreachable");
}

}  // namespace invsrc
