#include "invsrc/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace invsrc {

double SpatialField::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

double SpatialField::max() const { return *std::max_element(values.begin(), values.end()); }
double SpatialField::min() const { return *std::min_element(values.begin(), values.end()); }

SpatialField SpaceTimeField::slice(int l) const {
    SpatialField out(spec);
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j) out.at(i, j) = at(i, j, l);
    return out;
}

std::vector<double> to_lineup(const SpaceTimeField& field) {
    // Storage already follows the lineup ordinal.
    return field.values;
}

SpaceTimeField from_lineup(const GridSpec& spec, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != spec.lineup_size())
        throw std::domain_error("from_lineup: vector length does not match grid");
    SpaceTimeField field(spec);
    field.values = v;
    return field;
}

namespace {

// d/dt of a sequence sampled at uniform dt, second order everywhere.
// stride lets the same code walk boundary-series rows and field time lines.
void differentiate_line(const double* in, double* out, int n, double dt, size_t stride = 1) {
    out[0] = (-3.0 * in[0] + 4.0 * in[stride] - in[2 * stride]) / (2.0 * dt);
    for (int l = 1; l < n - 1; ++l)
        out[l * stride] = (in[(l + 1) * stride] - in[(l - 1) * stride]) / (2.0 * dt);
    out[(n - 1) * stride] =
        (3.0 * in[(n - 1) * stride] - 4.0 * in[(n - 2) * stride] + in[(n - 3) * stride]) /
        (2.0 * dt);
}

}  // namespace

BoundaryFluxSeries time_derivative(const BoundaryFluxSeries& series) {
    const GridSpec& spec = series.spec;
    if (spec.N_t < 2)
        throw std::invalid_argument("time_derivative: needs N_t >= 2");
    BoundaryKind out_kind =
        series.kind == BoundaryKind::flux ? BoundaryKind::flux_rate : series.kind;
    BoundaryFluxSeries out(spec, out_kind);
    const int nt = spec.n_time();
    for (int node = 0; node < spec.n_boundary(); ++node)
        differentiate_line(&series.values[static_cast<size_t>(node) * nt],
                           &out.values[static_cast<size_t>(node) * nt], nt, spec.dt());
    return out;
}

SpaceTimeField time_derivative(const SpaceTimeField& field) {
    const GridSpec& spec = field.spec;
    if (spec.N_t < 2)
        throw std::invalid_argument("time_derivative: needs N_t >= 2");
    SpaceTimeField out(spec);
    const int nt = spec.n_time();
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j) {
            size_t base = (static_cast<size_t>(i - 1) * spec.n_space() + (j - 1)) * nt;
            differentiate_line(&field.values[base], &out.values[base], nt, spec.dt());
        }
    return out;
}

BoundaryFluxSeries backward_time_derivative(const BoundaryFluxSeries& series) {
    const GridSpec& spec = series.spec;
    BoundaryKind out_kind =
        series.kind == BoundaryKind::flux ? BoundaryKind::flux_rate : series.kind;
    BoundaryFluxSeries out(spec, out_kind);
    for (int node = 0; node < spec.n_boundary(); ++node) {
        for (int l = 2; l <= spec.n_time(); ++l)
            out.at(node, l) = (series.at(node, l) - series.at(node, l - 1)) / spec.dt();
        out.at(node, 1) = out.at(node, 2);
    }
    return out;
}

SpatialField sample(const std::function<double(double, double)>& fn, const GridSpec& spec) {
    SpatialField out(spec);
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j) {
            double v = fn(spec.x(i), spec.y(j));
            if (!std::isfinite(v))
                throw std::runtime_error("sample: non-finite value at node (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            out.at(i, j) = v;
        }
    return out;
}

SpaceTimeField sample(const std::function<double(double, double, double)>& fn,
                      const GridSpec& spec) {
    SpaceTimeField out(spec);
    for (int i = 1; i <= spec.n_space(); ++i)
        for (int j = 1; j <= spec.n_space(); ++j)
            for (int l = 1; l <= spec.n_time(); ++l) {
                double v = fn(spec.x(i), spec.y(j), spec.t(l));
                if (!std::isfinite(v))
                    throw std::runtime_error("sample: non-finite value at node (" +
                                             std::to_string(i) + "," + std::to_string(j) +
                                             "," + std::to_string(l) + ")");
                out.at(i, j, l) = v;
            }
    return out;
}

}  // namespace invsrc
