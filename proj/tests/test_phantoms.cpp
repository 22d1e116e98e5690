#include <doctest.h>

#include <cmath>

#include "invsrc/phantoms.hpp"

using namespace invsrc;

TEST_CASE("test1 smooth bump") {
    CHECK(eval_test1(0.3, 0.0) == doctest::Approx(1.0));
    CHECK(eval_test1(0.8, 0.0) == 0.0);  // support edge
    CHECK(eval_test1(-1.0, -1.0) == 0.0);
}

TEST_CASE("test2 two bumps") {
    CHECK(eval_test2(0.4, 0.4, false) == doctest::Approx(1.0));
    CHECK(eval_test2(-0.4, -0.4, false) == doctest::Approx(-1.0));
    // Table scaling doubles the negative inclusion.
    CHECK(eval_test2(0.4, 0.4) == doctest::Approx(1.0));
    CHECK(eval_test2(-0.4, -0.4) == doctest::Approx(-2.0));
    CHECK(eval_test2(0.0, 0.0) == 0.0);  // distance to both centers exceeds 0.5
}

TEST_CASE("test3 piecewise constant") {
    CHECK(eval_test3(0.45, 0.0) == -2.0);
    CHECK(eval_test3(-0.45, 0.0) == 2.0);
    CHECK(eval_test3(0.0, 1.0) == 0.0);
}

TEST_CASE("letter phantoms") {
    // A point on a declared stroke centerline is inside.
    CHECK(eval_test4(0.0, 0.48) == 1.0);   // top of the omega arc
    CHECK(eval_test4(0.95, 0.95) == 0.0);
    CHECK(eval_test5(0.0, 0.45) == 3.0);   // top bar of sigma
    CHECK(eval_test5(0.95, 0.95) == 1.0);
}

TEST_CASE("test6 rectangles") {
    CHECK(eval_test6(-0.3, 0.0) == 5.0);
    CHECK(eval_test6(0.5, 0.0) == 5.0);
    CHECK(eval_test6(-1.0, -1.0) == 1.0);
}

TEST_CASE("known functions f and c") {
    for (double t : {0.0, 0.1, 0.2}) CHECK(eval_f(0.0, 0.0, t) == doctest::Approx(1.2));
    CHECK(eval_c_background(1.0, 1.0) == doctest::Approx(0.4));
    // f(., 0) = 1.2 everywhere keeps the inverse source problem admissible.
    for (double x = -1.0; x <= 1.0; x += 0.25)
        for (double y = -1.0; y <= 1.0; y += 0.25)
            CHECK(eval_f(x, y, 0.0) == doctest::Approx(1.2));
}

TEST_CASE("supports lie strictly inside the domain") {
    // Sample along the boundary of (-1,1)^2: all source phantoms vanish there.
    for (double s = -1.0; s <= 1.0; s += 0.05) {
        for (auto [x, y] : {std::pair{s, -1.0}, {s, 1.0}, {-1.0, s}, {1.0, s}}) {
            CHECK(eval_test1(x, y) == 0.0);
            CHECK(eval_test2(x, y) == 0.0);
            CHECK(eval_test3(x, y) == 0.0);
            CHECK(eval_test4(x, y) == 0.0);
        }
    }
}

TEST_CASE("phantom_by_name regions match the evaluators") {
    Phantom p2 = phantom_by_name("test2");
    CHECK(p2.regions.size() == 2);
    CHECK(p2.regions[0].positive);
    CHECK(!p2.regions[1].positive);
    CHECK(p2.regions[1].true_extreme == -2.0);
    CHECK(phantom_by_name("test2", false).regions[1].true_extreme == -1.0);
    CHECK_THROWS_AS(phantom_by_name("test9"), std::invalid_argument);

    Phantom d = disk_phantom(0.0, 0.0, 0.25, 2.0, 1.0);
    CHECK(d.value(0.0, 0.0) == 3.0);
    CHECK(d.value(0.5, 0.5) == 1.0);
    CHECK(d.regions[0].true_extreme == 3.0);
}
