#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cdos/constraints.hpp"
#include "cdos/linalg.hpp"
#include "cdos/trial.hpp"

namespace cdos::test {

// Objective wrapper that records every evaluated point and counts calls at
// points where the inequality constraints do not hold. Used to enforce the
// "never evaluates an infeasible point" guarantee.
class FeasibilityCounter {
public:
    FeasibilityCounter(Objective inner, ConstraintSet constraints)
        : inner_(std::move(inner)), constraints_(std::move(constraints)) {}

    Objective objective() {
        return [this](const Vector& x) {
            ++calls_;
            if (!is_feasible(constraints_, x)) ++infeasible_calls_;
            points_.push_back(x);
            return inner_(x);
        };
    }

    std::uint64_t calls() const { return calls_; }
    std::uint64_t infeasible_calls() const { return infeasible_calls_; }
    const std::vector<Vector>& points() const { return points_; }

private:
    Objective inner_;
    ConstraintSet constraints_;
    std::uint64_t calls_ = 0;
    std::uint64_t infeasible_calls_ = 0;
    std::vector<Vector> points_;
};

// Dense symmetric positive-definite quadratic f(x) = 0.5 x'Hx + g'x + c.
struct QuadraticProblem {
    std::vector<Vector> H;  // n x n, symmetric
    Vector g;
    double c = 0.0;

    std::size_t dim() const { return g.size(); }

    double operator()(const Vector& x) const {
        const std::size_t n = dim();
        double v = c;
        for (std::size_t i = 0; i < n; ++i) {
            v += g[i] * x[i];
            double hx = 0.0;
            for (std::size_t j = 0; j < n; ++j) hx += H[i][j] * x[j];
            v += 0.5 * x[i] * hx;
        }
        return v;
    }

    double quad_form(const Vector& a, const Vector& b) const {  // a'Hb
        const std::size_t n = dim();
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double hb = 0.0;
            for (std::size_t j = 0; j < n; ++j) hb += H[i][j] * b[j];
            v += a[i] * hb;
        }
        return v;
    }
};

// Gaussian elimination with partial pivoting; independent route to the
// algebraic minimum x* = -H^{-1} g.
inline Vector solve_linear(std::vector<Vector> a, Vector b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        assert(std::abs(a[col][col]) > 0.0);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = a[r][col] / a[col][col];
            for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= m * a[col][cc];
            b[r] -= m * b[col];
        }
    }
    Vector x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

// Random SPD quadratic with condition number at most `max_cond` and a
// minimizer drawn from [-3, 3]^n.
QuadraticProblem random_spd_quadratic(std::mt19937_64& rng, std::size_t n,
                                      double max_cond = 1e3);

inline Vector quadratic_minimizer(const QuadraticProblem& q) {
    return solve_linear(q.H, scaled(q.g, -1.0));
}

}  // namespace cdos::test
