#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "cdos/constraints.hpp"
#include "cdos/linalg.hpp"

namespace cdos {

using Objective = std::function<double(const Vector&)>;
using PointTransform = std::function<Vector(const Vector&)>;

// Per-evaluation hook: (eval index, trial point, f, feasible).
using EvalObserver = std::function<void(std::uint64_t, const Vector&, double, bool)>;

// Control-flow signal thrown before the evaluation budget would be exceeded;
// caught by the solver run loop.
struct BudgetSpent {};

// Funnel for every trial point of one solver run: applies the optional trial
// transform (grid rounding in mixed mode), answers feasibility, and evaluates
// the objective with counting, best-point tracking and the trace observer.
class TrialEvaluator {
public:
    TrialEvaluator(Objective f, const ConstraintSet* constraints, std::uint64_t max_evals)
        : f_(std::move(f)), constraints_(constraints), max_evals_(max_evals) {}

    void set_transform(PointTransform t) { transform_ = std::move(t); }
    void set_observer(EvalObserver o) { observer_ = std::move(o); }

    Vector trial_point(const Vector& x) const { return transform_ ? transform_(x) : x; }

    bool same_trial(const Vector& a, const Vector& b) const {
        return trial_point(a) == trial_point(b);
    }

    bool feasible(const Vector& x) const {
        return is_feasible(*constraints_, trial_point(x));
    }

    // Evaluates f at the (transformed) trial point. Counts the call, tracks
    // the best point seen and feeds the observer. Throws BudgetSpent instead
    // of exceeding max_evals.
    double evaluate(const Vector& x);

    std::uint64_t eval_count() const { return count_; }

    bool has_best() const { return best_x_.has_value(); }
    const Vector& best_point() const { return *best_x_; }
    double best_value() const { return best_f_; }

private:
    Objective f_;
    const ConstraintSet* constraints_;
    PointTransform transform_;
    EvalObserver observer_;
    std::uint64_t max_evals_;
    std::uint64_t count_ = 0;
    std::optional<Vector> best_x_;
    double best_f_ = 0.0;
};

}  // namespace cdos
