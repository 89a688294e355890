#include "cdos/constraints.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "cdos/errors.hpp"

namespace cdos {

namespace {

double eval_constraint(const ScalarFn& g, const Vector& x) {
    try {
        return g(x);
    } catch (const std::exception& e) {
        throw ConstraintEvalError(e.what());
    }
}

bool eval_predicate(const Predicate& p, const Vector& x) {
    try {
        return p(x);
    } catch (const std::exception& e) {
        throw ConstraintEvalError(e.what());
    }
}

}  // namespace

bool is_feasible(const ConstraintSet& c, const Vector& x) {
    if (c.bounds) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < c.bounds->lower[i] || x[i] > c.bounds->upper[i]) return false;
        }
    }
    for (const auto& g : c.c1)
        if (!(eval_constraint(g, x) >= 0.0)) return false;
    for (const auto& g : c.c2)
        if (!(eval_constraint(g, x) > 0.0)) return false;
    for (const auto& g : c.c3)
        if (!(eval_constraint(g, x) != 0.0)) return false;
    for (const auto& p : c.c0)
        if (!eval_predicate(p, x)) return false;
    return true;
}

double reduction_factor(int k) {
    if (k < 1) throw std::invalid_argument("reduction_factor: k must be >= 1");
    if (k > kScheduleTrials) throw ScheduleExhausted("reduction schedule ends at k = 50");
    if (k <= 6) return 1.0 / 1.1;
    if (k <= 8) return 1.0 / 1.2;
    if (k <= 10) return 1.0 / 1.5;
    if (k <= 16) return 1.0 / 2.0;
    if (k <= 20) return 1.0 / 5.0;
    if (k <= 40) return 1.0 / 10.0;
    return 1.0 / 100.0;
}

std::optional<double> first_feasible_step(const Predicate& feasible, const Vector& x,
                                          const Vector& u, double lambda0) {
    StepSchedule schedule(lambda0);
    while (true) {
        const Vector candidate = plus_scaled(x, schedule.current(), u);
        if (candidate == x) return std::nullopt;  // step rounded to no displacement
        if (feasible(candidate)) return schedule.current();
        if (schedule.exhausted()) return std::nullopt;
        schedule.next();
    }
}

std::optional<FeasibleStep> find_feasible_step(const Predicate& feasible, const Vector& x,
                                               const Vector& u, double lambda0) {
    if (auto fwd = first_feasible_step(feasible, x, u, lambda0))
        return FeasibleStep{*fwd, false};
    const Vector minus_u = scaled(u, -1.0);
    if (auto rev = first_feasible_step(feasible, x, minus_u, lambda0))
        return FeasibleStep{*rev, true};
    return std::nullopt;
}

std::optional<FeasibleStep> find_feasible_step(const ConstraintSet& c, const Vector& x,
                                               const Vector& u, double lambda0) {
    return find_feasible_step([&c](const Vector& p) { return is_feasible(c, p); }, x, u,
                              lambda0);
}

namespace {

// One direction of the floored shift ladder. The floor makes the tail of the
// schedule collapse onto a single candidate, so stop once it is reached.
std::optional<Vector> floored_shift(const Predicate& feasible, const Vector& x,
                                    const Vector& dir, double lambda_s) {
    const double floor_step = 0.1 * lambda_s;
    StepSchedule schedule(lambda_s);
    while (true) {
        const double step = std::max(schedule.current(), floor_step);
        Vector candidate = plus_scaled(x, step, dir);
        if (candidate == x) return std::nullopt;
        if (feasible(candidate)) return candidate;
        if (schedule.exhausted() || schedule.current() <= floor_step) return std::nullopt;
        schedule.next();
    }
}

}  // namespace

Vector feasible_shift_point(const Predicate& feasible, const Vector& x, const Vector& dir,
                            double lambda_s, std::mt19937_64& rng) {
    if (auto p = floored_shift(feasible, x, dir, lambda_s)) return *p;
    if (auto p = floored_shift(feasible, x, scaled(dir, -1.0), lambda_s)) return *p;

    // Any random feasible point will do; stay near the current minimum first.
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double half_width = 2.0 * lambda_s;
    for (int draw = 1; draw <= 1000; ++draw) {
        Vector candidate(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) candidate[i] = x[i] + half_width * unit(rng);
        if (feasible(candidate)) return candidate;
        if (draw % 100 == 0) half_width *= 2.0;
    }
    throw NoFeasiblePoint("no feasible shift point within the sampling budget");
}

Vector feasible_shift_point(const ConstraintSet& c, const Vector& x, const Vector& dir,
                            double lambda_s, std::mt19937_64& rng) {
    return feasible_shift_point([&c](const Vector& p) { return is_feasible(c, p); }, x, dir,
                                lambda_s, rng);
}

ScalarFn penalized_objective(ScalarFn f, std::vector<ScalarFn> equalities, double mu) {
    assert(mu > 0.0);
    if (equalities.empty()) return f;
    return [f = std::move(f), equalities = std::move(equalities), mu](const Vector& x) {
        double value = f(x);
        for (const auto& h : equalities) {
            const double v = h(x);
            value += mu * v * v;
        }
        return value;
    };
}

}  // namespace cdos
