#include "cdos/trial.hpp"

#include <exception>

#include "cdos/errors.hpp"

namespace cdos {

double TrialEvaluator::evaluate(const Vector& x) {
    if (count_ >= max_evals_) throw BudgetSpent{};
    const Vector p = trial_point(x);
    double value;
    try {
        value = f_(p);
    } catch (const ObjectiveEvalError&) {
        throw;
    } catch (const std::exception& e) {
        throw ObjectiveEvalError(e.what());
    }
    ++count_;
    if (!best_x_ || value < best_f_) {
        best_x_ = x;
        best_f_ = value;
    }
    if (observer_) observer_(count_, p, value, is_feasible(*constraints_, p));
    return value;
}

}  // namespace cdos
