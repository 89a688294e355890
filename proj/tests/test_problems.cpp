#include <cmath>

#include <doctest.h>

#include "cdos/problems.hpp"

using namespace cdos;

TEST_CASE("corpus holds the six named problems") {
    const auto& all = corpus();
    CHECK(all.size() == 6);
    for (const char* name : {"quad_fig1", "rosenbrock", "abs_rosenbrock", "lin_wedge",
                             "nonlin_maze", "zigzag"}) {
        CHECK(find_problem(name) != nullptr);
    }
    CHECK(find_problem("nope") == nullptr);
}

TEST_CASE("every known minimum is feasible and reproduces the reference value") {
    for (const Problem& p : corpus()) {
        REQUIRE(p.known_xmin.has_value());
        REQUIRE(p.known_fmin.has_value());
        CHECK(is_feasible(p.constraints, *p.known_xmin));
        CHECK(std::abs(p.objective(*p.known_xmin) - *p.known_fmin) <= 1e-9);
        CHECK(p.fail_threshold == 1e-3);
        REQUIRE(!p.start_list.empty());
        for (const Vector& s : p.start_list) REQUIRE(s.size() == p.dim);
    }
}

TEST_CASE("objective spot values") {
    CHECK(find_problem("rosenbrock")->objective({1.0, 1.0}) == 0.0);
    CHECK(find_problem("abs_rosenbrock")->objective({1.0, 1.0}) == 0.0);
    CHECK(find_problem("quad_fig1")->objective({5.0, 3.0}) ==
          doctest::Approx(25.0 + 9.0 - 22.5));
    CHECK(find_problem("lin_wedge")->objective({100.0, 75.0}) == doctest::Approx(850.0));
    CHECK(find_problem("nonlin_maze")->objective({-1.0, -1.0}) == doctest::Approx(1.0));
    CHECK(find_problem("zigzag")->objective({100.0, 101.0}) == 0.0);
}

TEST_CASE("start lists match the published grids") {
    const Problem& rosen = *find_problem("rosenbrock");
    CHECK(rosen.start_list.size() == 500);
    CHECK(rosen.start_list.front() == Vector{-1.0, 2.0});
    CHECK(rosen.start_list[499] == Vector{498.0, 501.0});

    const Problem& abs_rosen = *find_problem("abs_rosenbrock");
    CHECK(abs_rosen.start_list.size() == 500);
    CHECK(abs_rosen.start_list[499] == Vector{498.0, 501.0});

    const Problem& wedge = *find_problem("lin_wedge");
    CHECK(wedge.start_list.size() == 500);
    CHECK(wedge.start_list.front() == Vector{1.0, 1.0});
    CHECK(wedge.start_list[499] == Vector{500.0, 500.0});

    CHECK(find_problem("quad_fig1")->start_list == std::vector<Vector>{{5.0, 3.0}});
    CHECK(find_problem("nonlin_maze")->start_list == std::vector<Vector>{{-1.1, -27.0}});
    CHECK(find_problem("zigzag")->start_list == std::vector<Vector>{{0.0, 0.0}});
}

TEST_CASE("the maze start satisfies each of the ten constraints individually") {
    const Problem& p = *find_problem("nonlin_maze");
    CHECK(p.constraints.c1.size() == 10);
    const Vector start{-1.1, -27.0};
    for (const auto& g : p.constraints.c1) CHECK(g(start) >= 0.0);
    CHECK(is_feasible(p.constraints, start));
}

TEST_CASE("the zigzag strip admits its start and minimum") {
    const Problem& p = *find_problem("zigzag");
    CHECK(p.constraints.c1.size() == 14);
    REQUIRE(p.constraints.bounds.has_value());
    CHECK(is_feasible(p.constraints, {0.0, 0.0}));
    CHECK(is_feasible(p.constraints, {100.0, 101.0}));
    // The corridor past a right-anchored tooth is tight but open.
    CHECK(is_feasible(p.constraints, {0.0, 12.0}));
    CHECK_FALSE(is_feasible(p.constraints, {50.0, 12.0}));
}
