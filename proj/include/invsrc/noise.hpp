#pragma once

#include <cstdint>

#include "invsrc/fields.hpp"

namespace invsrc {

struct NoiseSpec {
    double delta = 0.0;      // noise level, e.g. 0.05
    std::uint64_t seed = 1;
};

/// Multiplicative uniform noise: each entry becomes
/// value * (1 + delta * (-1 + 2r)) with r ~ U[0,1), drawn independently per
/// (node, time) entry from a mt19937_64 stream seeded by spec.seed.
/// Entries are traversed node-major, time-minor, so runs are bit-reproducible.
BoundaryFluxSeries apply_noise(const BoundaryFluxSeries& data, const NoiseSpec& spec);

}  // namespace invsrc
