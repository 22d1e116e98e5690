#include "invsrc/noise.hpp"

#include <random>
#include <stdexcept>

namespace invsrc {

BoundaryFluxSeries apply_noise(const BoundaryFluxSeries& data, const NoiseSpec& spec) {
    if (spec.delta < 0.0) throw std::invalid_argument("apply_noise: delta must be >= 0");
    BoundaryFluxSeries out = data;
    if (spec.delta == 0.0) return out;
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> rand01(0.0, 1.0);
    for (double& v : out.values) v *= 1.0 + spec.delta * (-1.0 + 2.0 * rand01(rng));
    return out;
}

}  // namespace invsrc
