#pragma once

#include <optional>

#include "cdos/trial.hpp"

namespace cdos {

struct LineSearchResult {
    Vector x_min;
    double f_min = 0.0;
    std::uint64_t evals = 0;  // objective evaluations made by this search
    bool moved = false;       // x_min differs from the start point
};

// Signed offset of the parabola vertex from the first of three collinear
// sample points at displacements 0, d12, d13 with values f1, f2, f3.
// Requires d13 > d12 > 0. Throws DegenerateParabola when the function
// values are collinear.
double parabolic_step(double d12, double d13, double f1, double f2, double f3);

// One-dimensional minimum search from `start` along unit direction `u`:
// one step of nominal size `lambda` (schedule-reduced when constrained),
// doubling while the objective strictly decreases, then a single parabolic
// approximation over the last three points. When the first step gives no
// decrease the direction is reversed and the procedure repeated once.
// Returns the best point seen; never a point above the start value.
LineSearchResult line_minimize(TrialEvaluator& ev, const Vector& start, const Vector& u,
                               double lambda, std::optional<double> f_start = std::nullopt);

}  // namespace cdos
