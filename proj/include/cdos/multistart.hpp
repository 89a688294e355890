#pragma once

#include <string>

#include "cdos/modes.hpp"
#include "cdos/solver.hpp"

namespace cdos {

struct ModeConfig {
    Mode mode = Mode::Local;
    int starts = 0;                        // 0: mode default (1/50/100/50)
    std::optional<double> lambda0;         // overrides the mode default step
    std::optional<double> d_min;
    GridMask discrete_mask;                // mixed mode only
    std::optional<double> dedupe_radius;   // defaults to 10*tol
    std::optional<Bounds> sample_box;      // start sampling region
    std::vector<Vector> start_list;        // explicit starts override sampling
    int jobs = 1;
    // When set, called once per start to build that run's objective and
    // constraints (black-box sweeps spawn one child process per run; must be
    // safe to call concurrently). The multistart f/constraints arguments are
    // ignored for such sweeps.
    std::function<std::pair<Objective, ConstraintSet>()> per_run_problem;
};

struct OptimumRecord {
    Vector x;
    double f = 0.0;
    int basin_count = 0;  // starts that converged into this cluster
};

// Distinct optima found by a sweep, ordered by f ascending. Pairwise
// distances between records exceed the dedupe radius.
struct OptimaSet {
    std::vector<OptimumRecord> optima;
    int attempted = 0;
    int failed = 0;
    std::string diagnostic;
};

// Deterministic per-start seed derived from the base seed; independent of
// how the sweep is scheduled.
std::uint64_t start_seed(std::uint64_t base_seed, std::uint64_t start_index);

// Reproducible low-discrepancy start points over a box (Halton sequence with
// a seeded rotation).
std::vector<Vector> sample_starts(std::size_t dim, int count, const Bounds& box,
                                  std::uint64_t seed);

// Runs the solver from every start and clusters the results. Global and
// mixed mode report only the best record; local and multimodal report every
// cluster. Per-start failures are aggregated, never fatal.
OptimaSet multistart(std::size_t dim, const Objective& f, const ConstraintSet& constraints,
                     const SolverConfig& base, const ModeConfig& mc);

}  // namespace cdos
