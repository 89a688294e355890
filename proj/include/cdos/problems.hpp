#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdos/constraints.hpp"
#include "cdos/trial.hpp"

namespace cdos {

// One benchmark problem: objective, constraints and the reference data used
// to score a run.
struct Problem {
    std::string name;
    std::size_t dim = 0;
    Objective objective;
    ConstraintSet constraints;
    std::optional<double> known_fmin;
    std::optional<Vector> known_xmin;
    std::vector<Vector> start_list;
    double fail_threshold = 1e-3;  // |f_min - f*| above this counts as a failure
};

// The built-in test problems:
//   quad_fig1       x^2 + y^2 - 1.5xy, start (5,3)
//   rosenbrock      100(y-x^2)^2 + (1-x)^2, starts (-1+i, 2+i), i=0..499
//   abs_rosenbrock  100|y-x^2| + |1-x|, same starts
//   lin_wedge       x + 10y s.t. y <= 2x, y >= x/2, starts (i,i), i=1..500
//   nonlin_maze     |y-x|^2.07 + |xy|^1.07 inside ten nonlinear constraints
//   zigzag          |x-100|/200 + |y-101| inside a zigzag feasible strip
const std::vector<Problem>& corpus();

const Problem* find_problem(std::string_view name);

}  // namespace cdos
