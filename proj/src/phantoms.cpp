#include "invsrc/phantoms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace invsrc {

namespace {

// Smooth bump: exp(r^2 / (r^2 - rad^2)) inside r < rad, 0 outside.
double bump(double x, double y, double cx, double cy, double rad) {
    const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
    if (r2 >= rad * rad) return 0.0;
    return std::exp(r2 / (r2 - rad * rad));
}

struct Pt {
    double x, y;
};

double dist_to_segment(double x, double y, Pt a, Pt b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double wx = x - a.x, wy = y - a.y;
    const double vv = vx * vx + vy * vy;
    double s = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    const double dx = wx - s * vx, dy = wy - s * vy;
    return std::sqrt(dx * dx + dy * dy);
}

constexpr double kStrokeHalfWidth = 0.08;

bool near_polyline(double x, double y, const std::vector<Pt>& pts) {
    for (size_t k = 0; k + 1 < pts.size(); ++k)
        if (dist_to_segment(x, y, pts[k], pts[k + 1]) < kStrokeHalfWidth) return true;
    return false;
}

// Versioned stroke tables for the letter glyphs, drawn inside [-0.6, 0.6]^2.
// Omega: open circular arc with two horizontal feet.
const std::vector<Pt>& omega_strokes_arc() {
    static const std::vector<Pt> arc = [] {
        std::vector<Pt> p;
        const double cx = 0.0, cy = 0.08, r = 0.40;
        const double deg = M_PI / 180.0;
        for (double a = -70.0; a <= 250.0 + 1e-9; a += 5.0)
            p.push_back({cx + r * std::cos(a * deg), cy + r * std::sin(a * deg)});
        return p;
    }();
    return arc;
}

const std::vector<Pt>& omega_foot_right() {
    static const std::vector<Pt> s = [] {
        Pt e = omega_strokes_arc().front();
        return std::vector<Pt>{e, {0.45, e.y}};
    }();
    return s;
}

const std::vector<Pt>& omega_foot_left() {
    static const std::vector<Pt> s = [] {
        Pt e = omega_strokes_arc().back();
        return std::vector<Pt>{e, {-0.45, e.y}};
    }();
    return s;
}

const std::vector<Pt>& sigma_strokes() {
    static const std::vector<Pt> s = {
        {0.40, 0.45}, {-0.35, 0.45}, {0.10, 0.0}, {-0.35, -0.45}, {0.40, -0.45}};
    return s;
}

bool in_disk(double x, double y, double cx, double cy, double rad) {
    return (x - cx) * (x - cx) + (y - cy) * (y - cy) < rad * rad;
}

}  // namespace

double eval_test1(double x, double y) { return bump(x, y, 0.3, 0.0, 0.5); }

double eval_test2(double x, double y, bool table_scaling) {
    const double scale = table_scaling ? 2.0 : 1.0;
    return bump(x, y, 0.4, 0.4, 0.5) - scale * bump(x, y, -0.4, -0.4, 0.5);
}

double eval_test3(double x, double y) {
    if (in_disk(x, y, 0.45, 0.0, 0.25)) return -2.0;
    if (5.0 * (x + 0.45) * (x + 0.45) + y * y / 3.0 < 0.25 * 0.25) return 2.0;
    return 0.0;
}

bool letter_omega_contains(double x, double y) {
    return near_polyline(x, y, omega_strokes_arc()) ||
           near_polyline(x, y, omega_foot_left()) || near_polyline(x, y, omega_foot_right());
}

bool letter_sigma_contains(double x, double y) { return near_polyline(x, y, sigma_strokes()); }

double eval_test4(double x, double y) { return letter_omega_contains(x, y) ? 1.0 : 0.0; }

double eval_test5(double x, double y) { return letter_sigma_contains(x, y) ? 3.0 : 1.0; }

double eval_test6(double x, double y) {
    const bool horizontal = std::max(std::fabs(x + 0.3), 3.0 * std::fabs(y)) < 0.4;
    const bool vertical = std::max(6.0 * std::fabs(x - 0.5), std::fabs(y)) < 0.8;
    return (horizontal || vertical) ? 5.0 : 1.0;
}

double eval_f(double x, double y, double t) { return 1.0 + 0.2 * std::exp(t * (x * x + y * y)); }

double eval_c_background(double x, double y) { return 0.2 * (x * x + y * y); }

Phantom disk_phantom(double cx, double cy, double radius, double amplitude,
                     double background) {
    Phantom p;
    p.name = "disk";
    p.background = background;
    p.value = [=](double x, double y) {
        return background + (in_disk(x, y, cx, cy, radius) ? amplitude : 0.0);
    };
    p.regions.push_back({"inclusion 1",
                         [=](double x, double y) { return in_disk(x, y, cx, cy, radius); },
                         amplitude > 0.0, background + amplitude});
    return p;
}

Phantom phantom_by_name(const std::string& name, bool test2_table_scaling) {
    Phantom p;
    p.name = name;
    if (name == "test1") {
        p.value = [](double x, double y) { return eval_test1(x, y); };
        p.regions.push_back(
            {"inclusion 1", [](double x, double y) { return in_disk(x, y, 0.3, 0.0, 0.5); },
             true, 1.0});
    } else if (name == "test2") {
        p.value = [=](double x, double y) { return eval_test2(x, y, test2_table_scaling); };
        p.regions.push_back(
            {"inclusion 1", [](double x, double y) { return in_disk(x, y, 0.4, 0.4, 0.5); },
             true, 1.0});
        p.regions.push_back(
            {"inclusion 2", [](double x, double y) { return in_disk(x, y, -0.4, -0.4, 0.5); },
             false, test2_table_scaling ? -2.0 : -1.0});
    } else if (name == "test3") {
        p.value = [](double x, double y) { return eval_test3(x, y); };
        p.regions.push_back({"inclusion 1",
                             [](double x, double y) {
                                 return 5.0 * (x + 0.45) * (x + 0.45) + y * y / 3.0 <
                                        0.25 * 0.25;
                             },
                             true, 2.0});
        p.regions.push_back(
            {"inclusion 2", [](double x, double y) { return in_disk(x, y, 0.45, 0.0, 0.25); },
             false, -2.0});
    } else if (name == "test4") {
        p.value = [](double x, double y) { return eval_test4(x, y); };
        p.regions.push_back(
            {"inclusion 1", [](double x, double y) { return letter_omega_contains(x, y); },
             true, 1.0});
    } else if (name == "test5") {
        p.background = 1.0;
        p.value = [](double x, double y) { return eval_test5(x, y); };
        p.regions.push_back(
            {"inclusion 1", [](double x, double y) { return letter_sigma_contains(x, y); },
             true, 3.0});
    } else if (name == "test6") {
        p.background = 1.0;
        p.value = [](double x, double y) { return eval_test6(x, y); };
        p.regions.push_back({"inclusion 1",
                             [](double x, double y) {
                                 return std::max(std::fabs(x + 0.3), 3.0 * std::fabs(y)) < 0.4;
                             },
                             true, 5.0});
        p.regions.push_back({"inclusion 2",
                             [](double x, double y) {
                                 return std::max(6.0 * std::fabs(x - 0.5), std::fabs(y)) < 0.8;
                             },
                             true, 5.0});
    } else {
        throw std::invalid_argument("unknown phantom: " + name);
    }
    return p;
}

}  // namespace invsrc
