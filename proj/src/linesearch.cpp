#include "cdos/linesearch.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cdos/errors.hpp"

namespace cdos {

double parabolic_step(double d12, double d13, double f1, double f2, double f3) {
    const double x1 = d12;
    const double x2 = d13;
    const double num = x1 * x1 * (f1 - f3) + x2 * x2 * (f2 - f1);
    const double den = f3 * (0.0 - x1) + f2 * (x2 - 0.0) + f1 * (x1 - x2);
    const double scale = std::max({std::abs(f1), std::abs(f2), std::abs(f3), 1.0});
    if (std::abs(den) < 1e-300 * scale)
        throw DegenerateParabola("parabolic_step: collinear function values");
    return 0.5 * num / den;
}

namespace {

struct Sample {
    double t;  // displacement from the start along the walk direction
    double f;
};

struct Best {
    Vector x;
    double f;

    void offer(const Vector& p, double fp) {
        if (fp < f) {
            x = p;
            f = fp;
        }
    }
};

constexpr int kMaxDoublings = 60;

struct WalkOutcome {
    bool first_step_decreased = false;
    bool capped = false;
    std::vector<Sample> samples;  // evaluated displacements t > 0, in order
};

// Doubling walk along `dir`. Every candidate point is built as
// start + t*dir so the point that passed the feasibility ladder is exactly
// the point that gets evaluated.
WalkOutcome walk(TrialEvaluator& ev, const Vector& start, double f0, const Vector& dir,
                 double lambda, Best& best) {
    WalkOutcome out;

    auto feasible_advance = [&](double t_base, double want) -> std::optional<double> {
        const Vector at_base = plus_scaled(start, t_base, dir);
        StepSchedule schedule(want);
        while (true) {
            const Vector candidate = plus_scaled(start, t_base + schedule.current(), dir);
            if (candidate == at_base) return std::nullopt;  // rounded to no displacement
            if (ev.feasible(candidate)) return schedule.current();
            if (schedule.exhausted()) return std::nullopt;
            schedule.next();
        }
    };

    const auto t1 = feasible_advance(0.0, lambda);
    if (!t1) return out;  // no feasible step in this direction at all
    {
        const Vector p = plus_scaled(start, *t1, dir);
        const double f = ev.evaluate(p);
        out.samples.push_back({*t1, f});
        best.offer(p, f);
        if (!(f < f0)) return out;
    }
    out.first_step_decreased = true;

    double t_cur = *t1;
    double f_cur = out.samples.back().f;
    double step = *t1;
    for (int doublings = 0;; ++doublings) {
        if (doublings >= kMaxDoublings) {
            out.capped = true;
            break;
        }
        const auto dt = feasible_advance(t_cur, 2.0 * step);
        if (!dt) break;  // blocked by constraints: unsuccessful step
        const double t_next = t_cur + *dt;
        const Vector p = plus_scaled(start, t_next, dir);
        const double f = ev.evaluate(p);
        out.samples.push_back({t_next, f});
        best.offer(p, f);
        if (!(f < f_cur)) break;  // first unsuccessful step
        step = *dt;
        t_cur = t_next;
        f_cur = f;
    }
    return out;
}

// Single parabolic approximation over three ordered samples; evaluates the
// vertex when it is feasible, inside the clamped bracket and not a repeat of
// an already-evaluated point.
void try_vertex(TrialEvaluator& ev, const Vector& start, const Vector& dir, const Sample& s1,
                const Sample& s2, const Sample& s3, Best& best) {
    const double d12 = s2.t - s1.t;
    const double d13 = s3.t - s1.t;
    if (!(d12 > 0.0) || !(d13 > d12)) return;
    double d;
    try {
        d = parabolic_step(d12, d13, s1.f, s2.f, s3.f);
    } catch (const DegenerateParabola&) {
        return;  // keep the best sampled point
    }
    if (!std::isfinite(d)) return;
    d = std::clamp(d, 0.0, 2.0 * d13);
    const Vector vertex = plus_scaled(start, s1.t + d, dir);
    for (const Sample* s : {&s1, &s2, &s3}) {
        if (ev.same_trial(vertex, plus_scaled(start, s->t, dir))) return;
    }
    if (!ev.feasible(vertex)) return;
    best.offer(vertex, ev.evaluate(vertex));
}

void fit_walk_tail(TrialEvaluator& ev, const Vector& start, double f0, const Vector& dir,
                   const WalkOutcome& wo, Best& best) {
    if (wo.capped) return;  // cap returns the best point found, no fit
    std::vector<Sample> pts;
    pts.reserve(wo.samples.size() + 1);
    pts.push_back({0.0, f0});
    pts.insert(pts.end(), wo.samples.begin(), wo.samples.end());
    if (pts.size() < 3) return;
    const std::size_t k = pts.size();
    try_vertex(ev, start, dir, pts[k - 3], pts[k - 2], pts[k - 1], best);
}

}  // namespace

LineSearchResult line_minimize(TrialEvaluator& ev, const Vector& start, const Vector& u,
                               double lambda, std::optional<double> f_start) {
    const std::uint64_t evals_before = ev.eval_count();
    const double f0 = f_start ? *f_start : ev.evaluate(start);
    Best best{start, f0};

    const auto finish = [&]() {
        LineSearchResult r;
        r.x_min = best.x;
        r.f_min = best.f;
        r.evals = ev.eval_count() - evals_before;
        r.moved = best.x != start;
        return r;
    };

    const WalkOutcome fwd = walk(ev, start, f0, u, lambda, best);
    if (fwd.first_step_decreased) {
        fit_walk_tail(ev, start, f0, u, fwd, best);
        return finish();
    }

    const Vector minus_u = scaled(u, -1.0);
    const WalkOutcome rev = walk(ev, start, f0, minus_u, lambda, best);
    if (rev.first_step_decreased) {
        fit_walk_tail(ev, start, f0, minus_u, rev, best);
        return finish();
    }

    // Neither first step decreased. When both were evaluated the three
    // points straddle the start and still bracket the minimum.
    if (!fwd.samples.empty() && !rev.samples.empty()) {
        const Sample s1{-rev.samples.front().t, rev.samples.front().f};
        const Sample s2{0.0, f0};
        const Sample s3{fwd.samples.front().t, fwd.samples.front().f};
        try_vertex(ev, start, u, s1, s2, s3, best);
    }
    return finish();
}

}  // namespace cdos
