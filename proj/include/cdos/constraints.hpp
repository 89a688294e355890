#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "cdos/linalg.hpp"

namespace cdos {

using Predicate = std::function<bool(const Vector&)>;
using ScalarFn = std::function<double(const Vector&)>;

struct Bounds {
    Vector lower;
    Vector upper;
};

// Inequality and equality constraints of a problem.
//   c0: black-box predicates reporting only violated / not violated,
//   c1: g(x) >= 0,   c2: g(x) > 0,   c3: g(x) != 0,
//   h:  equalities, handled by a quadratic penalty and never part of
//       is_feasible,
//   bounds: optional per-coordinate box, treated like c1 constraints.
struct ConstraintSet {
    std::vector<Predicate> c0;
    std::vector<ScalarFn> c1;
    std::vector<ScalarFn> c2;
    std::vector<ScalarFn> c3;
    std::vector<ScalarFn> h;
    std::optional<Bounds> bounds;

    bool has_inequalities() const {
        return !c0.empty() || !c1.empty() || !c2.empty() || !c3.empty() || bounds.has_value();
    }
    bool empty() const { return !has_inequalities() && h.empty(); }
};

// True iff every inequality constraint holds at x. Equalities are not
// checked here. Constraint evaluation failures surface as
// ConstraintEvalError.
bool is_feasible(const ConstraintSet& c, const Vector& x);

inline constexpr int kScheduleTrials = 50;

// Reduction factor eps_k of the k-th trial, 1 <= k <= 50. Throws
// ScheduleExhausted past the last trial.
double reduction_factor(int k);

// Trial-step ladder lambda_k = eps_k * lambda_{k-1}, starting at lambda_0.
class StepSchedule {
public:
    explicit StepSchedule(double lambda0) : lambda_(lambda0) {}

    double current() const { return lambda_; }
    int trial() const { return k_; }
    bool exhausted() const { return k_ >= kScheduleTrials; }

    // Advances to the next trial and returns the reduced step.
    double next() {
        lambda_ *= reduction_factor(++k_);
        return lambda_;
    }

private:
    double lambda_;
    int k_ = 0;
};

struct FeasibleStep {
    double lambda = 0.0;
    bool reversed = false;
};

// Largest step of the reduction schedule (lambda_0 first) for which
// x + lambda*u satisfies `feasible`, scanning one direction only.
std::optional<double> first_feasible_step(const Predicate& feasible, const Vector& x,
                                          const Vector& u, double lambda0);

// Same, but when the whole schedule exhausts in direction u the schedule is
// restarted in -u (reversed=true). nullopt when both directions exhaust.
std::optional<FeasibleStep> find_feasible_step(const Predicate& feasible, const Vector& x,
                                               const Vector& u, double lambda0);
std::optional<FeasibleStep> find_feasible_step(const ConstraintSet& c, const Vector& x,
                                               const Vector& u, double lambda0);

// Feasible point for an orthogonal shift of nominal size lambda_s from x
// along +-dir. Scheduled steps are floored at 0.1*lambda_s so the shift
// never shrinks to zero; when neither direction admits a feasible point a
// random feasible point near x is sampled (box of half-width 2*lambda_s,
// doubled every 100 failed draws, at most 1000 draws). Throws
// NoFeasiblePoint when sampling fails too.
Vector feasible_shift_point(const Predicate& feasible, const Vector& x, const Vector& dir,
                            double lambda_s, std::mt19937_64& rng);
Vector feasible_shift_point(const ConstraintSet& c, const Vector& x, const Vector& dir,
                            double lambda_s, std::mt19937_64& rng);

// x -> f(x) + mu * sum_j h_j(x)^2. Inequalities stay handled directly.
ScalarFn penalized_objective(ScalarFn f, std::vector<ScalarFn> equalities, double mu);

}  // namespace cdos
