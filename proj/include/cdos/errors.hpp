#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cdos {

// Linear dependence detected while orthonormalizing a set of directions.
struct DegenerateSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The step-reduction schedule was queried past its last trial (k > 50).
struct ScheduleExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No feasible point found for an orthogonal shift, even by random sampling.
struct NoFeasiblePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The three sampled function values admit no unique parabola vertex.
struct DegenerateParabola : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constraint callable failed to evaluate.
struct ConstraintEvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An objective evaluation failed. For black-box objectives the raw reply
// line (if any) is attached.
struct ObjectiveEvalError : std::runtime_error {
    explicit ObjectiveEvalError(const std::string& what, std::string raw = {})
        : std::runtime_error(what), raw_reply(std::move(raw)) {}

    std::string raw_reply;
};

}  // namespace cdos
