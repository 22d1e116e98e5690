#pragma once

#include <functional>
#include <string>
#include <vector>

namespace invsrc {

/// One inclusion of a phantom: its (slightly dilatable) support predicate,
/// the sign of its extreme, and the value the extreme should take.
struct InclusionRegion {
    std::string name;
    std::function<bool(double, double)> contains;
    bool positive = true;       // max over the region if true, min otherwise
    double true_extreme = 1.0;
};

struct Phantom {
    std::string name;
    std::function<double(double, double)> value;
    std::vector<InclusionRegion> regions;
    double background = 0.0;    // value outside all inclusions
};

// True source functions of the inverse source experiments.
double eval_test1(double x, double y);
// The printed bump formula gives extremes +1/-1; the reported extreme table
// lists -2 for the negative inclusion, so the negative bump is scaled by 2 by
// default. Pass table_scaling = false for the unscaled formula.
double eval_test2(double x, double y, bool table_scaling = true);
double eval_test3(double x, double y);
double eval_test4(double x, double y);  // indicator of a letter Omega glyph

// True coefficients of the nonlinear experiments.
double eval_test5(double x, double y);  // 3 inside a letter Sigma glyph, 1 outside
double eval_test6(double x, double y);  // 5 inside two rectangles, 1 outside

// The fixed known functions shared by all inverse source tests.
double eval_f(double x, double y, double t);       // 1 + 0.2 exp(t |x|^2)
double eval_c_background(double x, double y);      // 0.2 |x|^2

// Glyph masks: polyline strokes of half-width 0.08 inside [-0.6, 0.6]^2.
bool letter_omega_contains(double x, double y);
bool letter_sigma_contains(double x, double y);

/// Lookup by name from {test1..test6, custom is assembled by callers}.
Phantom phantom_by_name(const std::string& name, bool test2_table_scaling = true);

/// Disk inclusion phantom: background + amplitude inside a disk.
Phantom disk_phantom(double cx, double cy, double radius, double amplitude,
                     double background);

}  // namespace invsrc
