#include "cdos/solver.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "cdos/errors.hpp"

namespace cdos {

namespace {

struct InfeasibleStart {};

Objective build_total_objective(Objective f, const ConstraintSet& c, const SolverConfig& cfg) {
    Objective base = std::move(f);
    if (cfg.sense == Sense::Maximize) {
        base = [inner = std::move(base)](const Vector& x) { return -inner(x); };
    }
    if (!c.h.empty()) {
        std::vector<ScalarFn> eqs(c.h.begin(), c.h.end());
        base = penalized_objective(std::move(base), std::move(eqs), cfg.penalty_mu);
    }
    return base;
}

void validate(const SolverConfig& cfg) {
    if (!(cfg.lambda0 > 0.0)) throw std::invalid_argument("lambda0 must be positive");
    if (!(cfg.tol > 0.0 && cfg.tol1 > 0.0 && cfg.tol2 > 0.0))
        throw std::invalid_argument("tolerances must be positive");
    if (cfg.n_exit < 1) throw std::invalid_argument("n_exit must be >= 1");
}

}  // namespace

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Converged: return "converged";
        case RunStatus::BudgetExhausted: return "budget_exhausted";
        case RunStatus::NoFeasibleStart: return "no_feasible_start";
    }
    return "?";
}

std::optional<Vector> curve_extrapolate(const Vector& x1, const Vector& x2, const Vector& x3,
                                        double lambda_c) {
    const std::size_t n = x1.size();
    std::size_t m = n;
    double best_spread = 0.0;
    bool increasing = false;
    for (std::size_t i = 0; i < n; ++i) {
        const bool inc = x1[i] < x2[i] && x2[i] < x3[i];
        const bool dec = x1[i] > x2[i] && x2[i] > x3[i];
        if (!inc && !dec) continue;
        const double spread = std::abs(x3[i] - x1[i]);
        if (m == n || spread > best_spread) {
            m = i;
            best_spread = spread;
            increasing = inc;
        }
    }
    if (m == n) return std::nullopt;

    const double a = x1[m];
    const double b = x2[m];
    const double c = x3[m];
    const double arg = increasing ? c + lambda_c : c - lambda_c;
    Vector out(n);
    out[m] = arg;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == m) continue;
        const double wa = (arg - b) * (arg - c) / ((a - b) * (a - c));
        const double wb = (arg - a) * (arg - c) / ((b - a) * (b - c));
        const double wc = (arg - a) * (arg - b) / ((c - a) * (c - b));
        out[k] = wa * x1[k] + wb * x2[k] + wc * x3[k];
    }
    return out;
}

Solver::Solver(std::size_t dim, Objective f, ConstraintSet constraints, SolverConfig config)
    : dim_(dim),
      constraints_(std::move(constraints)),
      config_(std::move(config)),
      evaluator_(build_total_objective(std::move(f), constraints_, config_), &constraints_,
                 config_.max_evals),
      rng_(config_.seed) {
    if (dim_ == 0) throw std::invalid_argument("dimension must be >= 1");
    validate(config_);
    if (config_.trial_transform) evaluator_.set_transform(config_.trial_transform);
    if (config_.observer) evaluator_.set_observer(config_.observer);
    x0_ = config_.x0 ? *config_.x0 : Vector(dim_, 0.9);
    if (x0_.size() != dim_) throw std::invalid_argument("x0 dimension mismatch");
    state_.dirs = DirectionSet(dim_);
    state_.lambda = config_.lambda0;
    state_.lambda_s = 0.62 * config_.lambda0;
}

LineSearchResult Solver::search(const Vector& from, const Vector& u, double step,
                                double f_from) {
    ++line_searches_;
    return line_minimize(evaluator_, from, u, step, f_from);
}

Vector Solver::shift_direction(const std::vector<Vector>& built, const Vector& probe) const {
    std::span<const Vector> span(built.data(), built.size());
    try {
        return orthogonal_shift_direction(span, probe);
    } catch (const DegenerateSet&) {
    }
    // Dependent probe: substitute coordinate axes until one works.
    for (std::size_t i = 0; i < dim_; ++i) {
        try {
            return orthogonal_shift_direction(span, axis_vector(dim_, i));
        } catch (const DegenerateSet&) {
        }
    }
    throw DegenerateSet("no independent probe column for the orthogonal shift");
}

// Shift from the current minimum; returns false when no feasible shift point
// exists (the iteration proceeds without a shift).
bool Solver::shifted_point(const Vector& q, Vector& y) {
    try {
        y = feasible_shift_point([this](const Vector& p) { return feasible(p); }, state_.x_min,
                                 q, state_.lambda_s, rng_);
        return true;
    } catch (const NoFeasiblePoint&) {
        return false;
    }
}

bool Solver::begin() {
    if (!feasible(x0_)) return false;
    state_.f_min = evaluator_.evaluate(x0_);
    state_.x_min = x0_;
    return true;
}

void Solver::stage1() {
    const double lambda = config_.lambda0;
    const auto pred = [this](const Vector& p) { return feasible(p); };

    // One probe step per coordinate axis; increments seed the quasi-gradient.
    Vector s(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        const Vector ei = axis_vector(dim_, i);
        const auto fs = find_feasible_step(pred, x0_, ei, lambda);
        if (!fs) continue;  // axis blocked both ways
        const double t = fs->reversed ? -fs->lambda : fs->lambda;
        const double fp = evaluator_.evaluate(plus_scaled(x0_, t, ei));
        const double df = fp - state_.f_min;
        s[i] = fs->reversed ? -df : df;
    }

    Vector u1;
    if (norm(s) < 1e-300)
        u1 = axis_vector(dim_, 0);  // flat start
    else
        u1 = scaled(s, -1.0 / norm(s));
    state_.dirs[0] = u1;

    const LineSearchResult r = search(x0_, u1, lambda, state_.f_min);
    state_.x_min = r.x_min;
    state_.f_min = r.f_min;
    stage2_prev_min_ = state_.x_min;
}

void Solver::stage2() {
    const std::size_t n = dim_;
    const double lambda = config_.lambda0;       // fixed for the whole stage
    state_.lambda = lambda;
    state_.lambda_s = 0.62 * lambda;

    for (std::size_t i = 2; i <= n; ++i) {
        stage2_prev_min_ = state_.x_min;

        std::vector<Vector> built(state_.dirs.dirs.begin(), state_.dirs.dirs.begin() + (i - 1));
        const Vector q = shift_direction(built, state_.dirs[i - 1]);

        Vector y = state_.x_min;
        double f_y = state_.f_min;
        if (shifted_point(q, y)) f_y = evaluator_.evaluate(y);

        // Repeated movement in the i-1 available conjugate directions.
        for (std::size_t j = 0; j + 1 < i; ++j) {
            const LineSearchResult r = search(y, state_.dirs[j], lambda, f_y);
            if (r.f_min < f_y) {
                y = r.x_min;
                f_y = r.f_min;
            }
        }

        // New direction through the two minima, oriented from the worse
        // point toward the better one.
        const double sep = distance(state_.x_min, y);
        Vector ui;
        if (sep < 1e-14)
            ui = q;
        else if (state_.f_min < f_y)
            ui = scaled(difference(state_.x_min, y), 1.0 / sep);
        else
            ui = scaled(difference(y, state_.x_min), 1.0 / sep);
        state_.dirs[i - 1] = ui;

        const bool x_better = state_.f_min < f_y;
        const Vector& base = x_better ? state_.x_min : y;
        const double f_base = x_better ? state_.f_min : f_y;
        const LineSearchResult r = search(base, ui, lambda, f_base);
        state_.x_min = r.x_min;
        state_.f_min = r.f_min;
    }

    // Initial step and shift for the main cycle.
    double lam = 0.3 * distance(state_.x_min, stage2_prev_min_) + 0.091 * config_.lambda0;
    if (lam == 0.0) lam = config_.tol;
    state_.lambda = lam;
    state_.lambda_s = 0.62 * lam;
    if (state_.lambda_s == 0.0) state_.lambda_s = lam;
}

bool Solver::stage3_iteration() {
    const std::size_t n = dim_;
    const Vector x_prev = state_.x_min;
    const double f_prev = state_.f_min;

    // Shift direction orthogonal to u_n..u_2, probe column u_1. Keep it
    // aligned with the direction about to be retired.
    const Vector u1 = state_.dirs[0];
    std::vector<Vector> kept;
    kept.reserve(n - 1);
    for (std::size_t i = n; i >= 2; --i) kept.push_back(state_.dirs[i - 1]);
    Vector q = shift_direction(kept, u1);
    if (distance(q, u1) > norm(plus_scaled(q, 1.0, u1))) q = scaled(q, -1.0);

    Vector y = state_.x_min;
    double f_y = state_.f_min;
    if (shifted_point(q, y)) f_y = evaluator_.evaluate(y);

    state_.dirs.rotate_left();

    // Non-greedy sweep: the scale of function variation has grown away from
    // the minimum, hence the 3x step.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const LineSearchResult r = search(y, state_.dirs[j], 3.0 * state_.lambda, f_y);
        if (r.f_min < f_y) {
            y = r.x_min;
            f_y = r.f_min;
        }
    }

    const double sep = distance(state_.x_min, y);
    Vector un;
    if (sep < 1e-14)
        un = q;
    else if (state_.f_min < f_y)
        un = scaled(difference(state_.x_min, y), 1.0 / sep);
    else
        un = scaled(difference(y, state_.x_min), 1.0 / sep);
    state_.dirs[n - 1] = un;

    const bool x_better = state_.f_min < f_y;
    const Vector& base = x_better ? state_.x_min : y;
    const double f_base = x_better ? state_.f_min : f_y;
    const LineSearchResult r = search(base, un, state_.lambda, f_base);
    if (r.f_min < state_.f_min) {
        state_.x_min = r.x_min;
        state_.f_min = r.f_min;
    }

    double lam = adapt_step(config_.mode, state_.lambda, distance(state_.x_min, x_prev),
                            config_.d_min, config_.tol);
    state_.lambda = lam;
    state_.lambda_s = 0.62 * lam;
    if (state_.lambda_s == 0.0) state_.lambda_s = lam;

    ++state_.iter;
    state_.history.push_back(state_.x_min);
    while (state_.history.size() > 2 * n + 3) state_.history.pop_front();

    const bool exit_ok = lam <= config_.tol1 && (f_prev - state_.f_min) <= config_.tol2;
    state_.exit_streak = exit_ok ? state_.exit_streak + 1 : 0;
    return exit_ok;
}

bool Solver::curve_search() {
    const std::size_t n = dim_;
    if (state_.history.size() < 2 * n + 3) return false;
    const Vector& x1 = state_.history[0];
    const Vector& x2 = state_.history[n + 1];
    const Vector& x3 = state_.history[2 * n + 2];
    const double lambda_c = config_.curve_step ? *config_.curve_step : state_.lambda;

    const auto xc = curve_extrapolate(x1, x2, x3, lambda_c);
    if (!xc) return false;
    if (!feasible(*xc)) return false;
    const double fc = evaluator_.evaluate(*xc);
    if (fc < state_.f_min) {
        state_.x_min = *xc;
        state_.f_min = fc;
        return true;
    }
    return false;
}

RunResult Solver::run() {
    try {
        if (!begin()) return make_result(RunStatus::NoFeasibleStart);
        stage1();
        stage2();
        while (true) {
            stage3_iteration();
            if (state_.exit_streak >= config_.n_exit) return make_result(RunStatus::Converged);
            if (++since_curve_ >= dim_ + 1 && state_.history.size() == 2 * dim_ + 3) {
                curve_search();
                since_curve_ = 0;
            }
        }
    } catch (const BudgetSpent&) {
        return make_result(RunStatus::BudgetExhausted);
    }
}

RunResult Solver::make_result(RunStatus status) {
    RunResult result;
    result.status = status;
    result.evals = evaluator_.eval_count();
    result.line_searches = line_searches_;
    result.iterations = state_.iter;
    if (status == RunStatus::NoFeasibleStart) {
        result.x_min = x0_;
        return result;
    }

    Vector x;
    double f;
    if (!state_.x_min.empty()) {
        x = state_.x_min;
        f = state_.f_min;
    } else if (evaluator_.has_best()) {
        x = evaluator_.best_point();
        f = evaluator_.best_value();
    } else {
        result.x_min = x0_;  // budget spent before the first evaluation
        return result;
    }
    if (evaluator_.has_best() && evaluator_.best_value() < f) {
        x = evaluator_.best_point();
        f = evaluator_.best_value();
    }
    result.x_min = x;
    result.f_min = config_.sense == Sense::Maximize ? -f : f;

    if (!constraints_.h.empty()) {
        const Vector p = evaluator_.trial_point(x);
        double worst = 0.0;
        for (const auto& h : constraints_.h) worst = std::max(worst, std::abs(h(p)));
        result.max_equality_violation = worst;
    }
    return result;
}

RunResult minimize(std::size_t dim, const Objective& f, const ConstraintSet& constraints,
                   const SolverConfig& config) {
    Solver solver(dim, f, constraints, config);
    return solver.run();
}

}  // namespace cdos
