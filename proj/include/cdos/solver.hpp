#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>

#include "cdos/constraints.hpp"
#include "cdos/linalg.hpp"
#include "cdos/linesearch.hpp"
#include "cdos/modes.hpp"
#include "cdos/trial.hpp"

namespace cdos {

enum class Sense { Minimize, Maximize };

enum class RunStatus { Converged, BudgetExhausted, NoFeasibleStart };

const char* to_string(RunStatus s);

struct SolverConfig {
    double lambda0 = 1.0;              // initial step
    std::optional<Vector> x0;          // defaults to (0.9, ..., 0.9)
    double tol = 1e-6;                 // extremum-point confidence interval
    double tol1 = 1e-6;                // step-size exit threshold
    double tol2 = 1e-6;                // f-decrease exit threshold
    int n_exit = 2;                    // 10 recommended for non-differentiable
    std::uint64_t max_evals = 1000000;
    std::optional<double> curve_step;  // lambda_c; defaults to the current step
    std::uint64_t seed = 0;
    Sense sense = Sense::Minimize;
    Mode mode = Mode::Local;
    std::optional<double> d_min;       // spacing knowledge for global/mixed
    double penalty_mu = 1e4;           // quadratic penalty weight for equalities
    PointTransform trial_transform;    // mixed-mode grid rounding hook
    EvalObserver observer;             // trace hook
};

struct RunResult {
    Vector x_min;
    double f_min = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t evals = 0;
    std::uint64_t line_searches = 0;
    std::uint64_t iterations = 0;  // main-cycle iterations
    RunStatus status = RunStatus::NoFeasibleStart;
    double max_equality_violation = 0.0;
};

struct SolverState {
    DirectionSet dirs;
    Vector x_min;
    double f_min = 0.0;
    double lambda = 0.0;
    double lambda_s = 0.0;
    std::uint64_t iter = 0;       // main-cycle iteration index
    int exit_streak = 0;          // consecutive satisfied exit conditions
    std::deque<Vector> history;   // last 2n+3 accepted minima
};

// Extrapolation target for the space-curve search through three successive
// minima: the strictly monotone coordinate with the largest spread becomes
// the parabola argument, every other coordinate follows its fitted parabola
// one lambda_c beyond the newest point. nullopt without a monotone
// coordinate.
std::optional<Vector> curve_extrapolate(const Vector& x1, const Vector& x2, const Vector& x3,
                                        double lambda_c);

// Conjugate-direction search with orthogonal shift. Stage I seeds the first
// direction from a quasi-gradient probe, stage II builds n mutually
// conjugate directions via orthogonal shifts, stage III iterates the shifted
// direction update with step adaptation until the exit condition holds
// n_exit times in a row.
class Solver {
public:
    Solver(std::size_t dim, Objective f, ConstraintSet constraints, SolverConfig config);

    RunResult run();

    // Staged interface; run() drives these in order. begin() returns false
    // when the start point is infeasible.
    bool begin();
    void stage1();
    void stage2();
    bool stage3_iteration();  // true when the exit condition held
    bool curve_search();      // true when the extrapolated point was accepted

    const SolverState& state() const { return state_; }
    std::uint64_t line_search_count() const { return line_searches_; }
    std::uint64_t eval_count() const { return evaluator_.eval_count(); }
    TrialEvaluator& evaluator() { return evaluator_; }

private:
    Vector shift_direction(const std::vector<Vector>& built, const Vector& probe) const;
    bool shifted_point(const Vector& q, Vector& y);  // false: shift skipped
    LineSearchResult search(const Vector& from, const Vector& u, double step, double f_from);
    RunResult make_result(RunStatus status);
    bool feasible(const Vector& x) const { return evaluator_.feasible(x); }

    std::size_t dim_;
    ConstraintSet constraints_;
    SolverConfig config_;
    TrialEvaluator evaluator_;
    std::mt19937_64 rng_;
    SolverState state_;
    Vector x0_;
    Vector stage2_prev_min_;
    std::uint64_t line_searches_ = 0;
    std::uint64_t since_curve_ = 0;
};

RunResult minimize(std::size_t dim, const Objective& f, const ConstraintSet& constraints,
                   const SolverConfig& config);

}  // namespace cdos
