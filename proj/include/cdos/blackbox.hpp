#pragma once

#include <chrono>
#include <memory>
#include <string>

#include "cdos/constraints.hpp"
#include "cdos/trial.hpp"

namespace cdos {

// External objective program. One evaluation per request line: the n
// coordinates in shortest round-trip decimal form, space separated. The
// program answers either `F <value>` or `INFEASIBLE` on a single line.
struct BlackBoxSpec {
    std::string command;
    std::chrono::milliseconds timeout{10000};
    std::size_t dim = 0;
};

struct BlackBoxFunctions {
    Objective objective;
    Predicate feasible;  // plug into ConstraintSet::c0
};

// Spawns the program and returns an objective plus a c0-style feasibility
// predicate backed by it. One request is sent per trial point: the predicate
// issues it and memoizes the reply, the objective reuses the memo, so an
// evaluation never costs the program a second call. Failures surface as
// ObjectiveEvalError with the raw reply attached. The child process lives as
// long as either returned callable.
BlackBoxFunctions blackbox_objective(const BlackBoxSpec& spec);

// Shortest decimal form that round-trips a double exactly; also used by the
// CSV writers.
std::string format_double(double v);

}  // namespace cdos
