#include "cdos/problems.hpp"

#include <cmath>

namespace cdos {

namespace {

Problem make_quad_fig1() {
    Problem p;
    p.name = "quad_fig1";
    p.dim = 2;
    p.objective = [](const Vector& v) {
        return v[0] * v[0] + v[1] * v[1] - 1.5 * v[0] * v[1];
    };
    p.known_fmin = 0.0;
    p.known_xmin = Vector{0.0, 0.0};
    p.start_list = {Vector{5.0, 3.0}};
    return p;
}

Problem make_rosenbrock() {
    Problem p;
    p.name = "rosenbrock";
    p.dim = 2;
    p.objective = [](const Vector& v) {
        const double a = v[1] - v[0] * v[0];
        const double b = 1.0 - v[0];
        return 100.0 * a * a + b * b;
    };
    p.known_fmin = 0.0;
    p.known_xmin = Vector{1.0, 1.0};
    for (int i = 0; i < 500; ++i) p.start_list.push_back({-1.0 + i, 2.0 + i});
    return p;
}

Problem make_abs_rosenbrock() {
    Problem p;
    p.name = "abs_rosenbrock";
    p.dim = 2;
    p.objective = [](const Vector& v) {
        return 100.0 * std::abs(v[1] - v[0] * v[0]) + std::abs(1.0 - v[0]);
    };
    p.known_fmin = 0.0;
    p.known_xmin = Vector{1.0, 1.0};
    for (int i = 0; i < 500; ++i) p.start_list.push_back({-1.0 + i, 2.0 + i});
    return p;
}

Problem make_lin_wedge() {
    Problem p;
    p.name = "lin_wedge";
    p.dim = 2;
    p.objective = [](const Vector& v) { return v[0] + 10.0 * v[1]; };
    p.constraints.c1 = {
        [](const Vector& v) { return 2.0 * v[0] - v[1]; },  // y <= 2x
        [](const Vector& v) { return v[1] - v[0] / 2.0; },  // y >= x/2
    };
    p.known_fmin = 0.0;
    p.known_xmin = Vector{0.0, 0.0};
    for (int i = 1; i <= 500; ++i) p.start_list.push_back({double(i), double(i)});
    return p;
}

Problem make_nonlin_maze() {
    Problem p;
    p.name = "nonlin_maze";
    p.dim = 2;
    p.objective = [](const Vector& v) {
        return std::pow(std::abs(v[1] - v[0]), 2.07) + std::pow(std::abs(v[0] * v[1]), 1.07);
    };
    p.constraints.c1 = {
        [](const Vector& v) { return -1.0 - v[0]; },                         // x <= -1
        [](const Vector& v) { return v[0] + 17.001; },                       // x >= -17.001
        [](const Vector& v) { return -1.0 - v[1]; },                         // y <= -1
        [](const Vector& v) { return v[1] + v[0] / 3.0 + 28.0; },            // y >= -x/3 - 28
        [](const Vector& v) {
            const double t = v[1] + 20.0;
            return t * t - 3.0 * v[0] - 51.0;
        },
        [](const Vector& v) {
            const double t = v[1] + 15.0;
            return std::abs(v[0] + 14.5) + t * t - 3.0;
        },
        [](const Vector& v) {
            const double t = v[0] + 16.0;
            return t * t + std::pow(std::abs(v[1] + 8.0), 1.5) - 20.0;
        },
        [](const Vector& v) {
            const double t = v[0] + 9.2;
            return t * t + std::abs(v[1] + 12.0) - 7.0;
        },
        [](const Vector& v) {
            const double a = v[0] + 6.0;
            const double b = v[1] + 15.0;
            return a * a + b * b - 29.8;
        },
        [](const Vector& v) {
            const double t = v[0] + 6.0;
            return t * t + std::pow(std::abs(v[1] + 1.0), 1.5) - 15.0;
        },
    };
    p.known_fmin = 1.0;
    p.known_xmin = Vector{-1.0, -1.0};
    p.start_list = {Vector{-1.1, -27.0}};
    return p;
}

Problem make_zigzag() {
    Problem p;
    p.name = "zigzag";
    p.dim = 2;
    p.objective = [](const Vector& v) {
        return std::abs(v[0] - 100.0) / 200.0 + std::abs(v[1] - 101.0);
    };
    p.constraints.bounds = Bounds{{0.0, 0.0}, {100.0, 101.01}};
    // Alternating teeth anchored to the left and right walls.
    for (int k = 0; k < 7; ++k) {
        const double a = 5.0 + 14.0 * k;
        const double b = 12.0 + 14.0 * k;
        p.constraints.c1.push_back([a](const Vector& v) {
            return std::abs(v[0]) + std::pow(std::abs(v[1] - a), 3.5) - 99.9;
        });
        p.constraints.c1.push_back([b](const Vector& v) {
            const double t = std::abs(v[1] - b);
            return std::abs(v[0] - 100.0) + t * t * t - 99.9;
        });
    }
    p.known_fmin = 0.0;
    p.known_xmin = Vector{100.0, 101.0};
    p.start_list = {Vector{0.0, 0.0}};
    return p;
}

}  // namespace

const std::vector<Problem>& corpus() {
    static const std::vector<Problem> problems = [] {
        std::vector<Problem> v;
        v.push_back(make_quad_fig1());
        v.push_back(make_rosenbrock());
        v.push_back(make_abs_rosenbrock());
        v.push_back(make_lin_wedge());
        v.push_back(make_nonlin_maze());
        v.push_back(make_zigzag());
        return v;
    }();
    return problems;
}

const Problem* find_problem(std::string_view name) {
    for (const Problem& p : corpus()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

}  // namespace cdos
