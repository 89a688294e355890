#include "cdos/multistart.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace cdos {

namespace {

constexpr int kHaltonPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

double halton(std::uint64_t index, int base) {
    double f = 1.0;
    double r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct StartOutcome {
    bool ok = false;
    Vector x;
    double f = 0.0;
};

}  // namespace

std::uint64_t start_seed(std::uint64_t base_seed, std::uint64_t start_index) {
    return splitmix64(base_seed ^ splitmix64(start_index + 1));
}

std::vector<Vector> sample_starts(std::size_t dim, int count, const Bounds& box,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vector rotation(dim);
    for (double& r : rotation) r = unit(rng);

    std::vector<Vector> starts;
    starts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Vector p(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            const int base = kHaltonPrimes[d % std::size(kHaltonPrimes)];
            double u = halton(static_cast<std::uint64_t>(i) + 1, base) + rotation[d];
            u -= std::floor(u);
            p[d] = box.lower[d] + u * (box.upper[d] - box.lower[d]);
        }
        starts.push_back(std::move(p));
    }
    return starts;
}

OptimaSet multistart(std::size_t dim, const Objective& f, const ConstraintSet& constraints,
                     const SolverConfig& base, const ModeConfig& mc) {
    SolverConfig proto = base;
    proto.mode = mc.mode;
    proto.lambda0 = mc.lambda0 ? *mc.lambda0 : default_lambda0(mc.mode);
    if (mc.d_min) proto.d_min = mc.d_min;
    PointTransform snap;
    if (mc.mode == Mode::Mixed && mc.discrete_mask.any()) {
        snap = grid_transform(mc.discrete_mask);
        proto.trial_transform = snap;
    }

    std::vector<Vector> starts = mc.start_list;
    if (starts.empty()) {
        const int count = mc.starts > 0 ? mc.starts : default_starts(mc.mode);
        Bounds box;
        if (mc.sample_box) {
            box = *mc.sample_box;
        } else {
            // No sampling region given: a box around the nominal start,
            // scaled by the step size.
            const Vector center = base.x0 ? *base.x0 : Vector(dim, 0.9);
            const double half = 10.0 * proto.lambda0;
            box.lower.resize(dim);
            box.upper.resize(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                box.lower[d] = center[d] - half;
                box.upper[d] = center[d] + half;
            }
        }
        starts = sample_starts(dim, count, box, base.seed);
    } else if (mc.starts > 0 && static_cast<std::size_t>(mc.starts) < starts.size()) {
        starts.resize(static_cast<std::size_t>(mc.starts));
    }

    std::vector<StartOutcome> outcomes(starts.size());
    auto run_one = [&](std::size_t i) {
        SolverConfig cfg = proto;
        cfg.x0 = starts[i];
        cfg.seed = start_seed(base.seed, i);
        try {
            RunResult r;
            if (mc.per_run_problem) {
                const auto [run_f, run_c] = mc.per_run_problem();
                r = minimize(dim, run_f, run_c, cfg);
            } else {
                r = minimize(dim, f, constraints, cfg);
            }
            if (r.status == RunStatus::NoFeasibleStart || !std::isfinite(r.f_min)) return;
            outcomes[i].ok = true;
            outcomes[i].x = snap ? snap(r.x_min) : r.x_min;
            outcomes[i].f = r.f_min;
        } catch (const std::exception&) {
            // failed start, recorded below
        }
    };

    const int jobs = std::max(1, mc.jobs);
    if (jobs == 1 || starts.size() <= 1) {
        for (std::size_t i = 0; i < starts.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        const int workers = std::min<std::size_t>(jobs, starts.size());
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= starts.size()) return;
                    run_one(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    OptimaSet set;
    set.attempted = static_cast<int>(starts.size());

    // Cluster from the fully sorted result list so the outcome does not
    // depend on arrival order.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].ok)
            order.push_back(i);
        else
            ++set.failed;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (outcomes[a].f != outcomes[b].f) return outcomes[a].f < outcomes[b].f;
        if (outcomes[a].x != outcomes[b].x) return outcomes[a].x < outcomes[b].x;
        return a < b;
    });

    if (order.empty()) {
        set.diagnostic = "no start produced a usable result";
        return set;
    }

    const double radius = mc.dedupe_radius ? *mc.dedupe_radius : 10.0 * proto.tol;
    for (const std::size_t i : order) {
        bool merged = false;
        for (OptimumRecord& rec : set.optima) {
            if (distance(rec.x, outcomes[i].x) <= radius) {
                ++rec.basin_count;
                merged = true;
                break;
            }
        }
        if (!merged) set.optima.push_back({outcomes[i].x, outcomes[i].f, 1});
    }

    if ((mc.mode == Mode::Global || mc.mode == Mode::Mixed) && set.optima.size() > 1)
        set.optima.resize(1);
    return set;
}

}  // namespace cdos
