#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cdos/bench.hpp"
#include "cdos/blackbox.hpp"
#include "cdos/errors.hpp"
#include "cdos/multistart.hpp"
#include "cdos/problems.hpp"
#include "cdos/solver.hpp"

namespace {

using namespace cdos;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolveFailure = 3;
constexpr int kExitBlackBox = 4;

struct CommonOpts {
    std::string problem;
    std::string blackbox;
    std::size_t dim = 0;
    std::vector<double> x0;
    double step = 1.0;
    double tol_x = 1e-6;
    double tol_f = 1e-6;
    int n_exit = 2;
    std::uint64_t max_evals = 1000000;
    std::uint64_t seed = 0;
    std::string mode = "local";
    int starts = 0;
    std::vector<double> bounds;
    std::vector<double> grid;
    bool integer_grid = false;
    double d_min = 0.0;
    int jobs = 1;
    std::string trace;
    std::string out;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--problem", o.problem, "Benchmark problem name");
    cmd->add_option("--blackbox", o.blackbox, "External objective command (line protocol)");
    cmd->add_option("--dim", o.dim, "Dimension of the black-box objective");
    cmd->add_option("--x0", o.x0, "Start point, comma separated")->delimiter(',');
    cmd->add_option("--step", o.step, "Initial step size (default 1)");
    cmd->add_option("--tol-x", o.tol_x, "Extremum point tolerance (default 1e-6)");
    cmd->add_option("--tol-f", o.tol_f, "Extremum value tolerance (default 1e-6)");
    cmd->add_option("--n-exit", o.n_exit, "Consecutive exit checks (default 2)");
    cmd->add_option("--max-evals", o.max_evals, "Objective evaluation budget");
    cmd->add_option("--seed", o.seed, "Random source seed");
    cmd->add_option("--mode", o.mode, "local|global|multimodal|mixed")
        ->check(CLI::IsMember({"local", "global", "multimodal", "mixed"}));
    cmd->add_option("--starts", o.starts, "Number of starts (sweeps and multistart modes)");
    cmd->add_option("--bounds", o.bounds,
                    "Box bounds lo,hi (applied per coordinate, or 2n values)")
        ->delimiter(',');
    cmd->add_option("--grid", o.grid, "Mixed-mode grid steps per coordinate")->delimiter(',');
    cmd->add_flag("--integer-grid", o.integer_grid, "Mixed-mode unit grid on all coordinates");
    cmd->add_option("--d-min", o.d_min, "Minimum spacing between neighboring optima");
    cmd->add_option("--jobs", o.jobs, "Parallel starts (default 1)");
}

std::optional<Bounds> parse_bounds(const std::vector<double>& raw, std::size_t dim) {
    if (raw.empty()) return std::nullopt;
    Bounds b;
    b.lower.resize(dim);
    b.upper.resize(dim);
    if (raw.size() == 2) {
        for (std::size_t d = 0; d < dim; ++d) {
            b.lower[d] = raw[0];
            b.upper[d] = raw[1];
        }
        return b;
    }
    if (raw.size() == 2 * dim) {
        for (std::size_t d = 0; d < dim; ++d) {
            b.lower[d] = raw[2 * d];
            b.upper[d] = raw[2 * d + 1];
        }
        return b;
    }
    throw CLI::ValidationError("--bounds expects lo,hi or 2*dim values");
}

GridMask parse_grid(const CommonOpts& o, std::size_t dim) {
    if (o.integer_grid || (o.grid.empty() && o.mode == "mixed"))
        return GridMask::integers(dim);
    GridMask mask;
    mask.coords.assign(dim, std::nullopt);
    for (std::size_t d = 0; d < dim && d < o.grid.size(); ++d) {
        if (o.grid[d] > 0.0) mask.coords[d] = GridSpec{o.grid[d], 0.0};
    }
    return mask;
}

struct ResolvedProblem {
    Problem problem;
    bool from_blackbox = false;
};

ResolvedProblem resolve_problem(const CommonOpts& o) {
    ResolvedProblem rp;
    if (!o.blackbox.empty()) {
        if (o.dim == 0) throw CLI::ValidationError("--blackbox requires --dim");
        BlackBoxSpec spec;
        spec.command = o.blackbox;
        spec.dim = o.dim;
        BlackBoxFunctions fns = blackbox_objective(spec);
        rp.problem.name = "blackbox";
        rp.problem.dim = o.dim;
        rp.problem.objective = fns.objective;
        rp.problem.constraints.c0.push_back(fns.feasible);
        rp.from_blackbox = true;
        return rp;
    }
    const Problem* p = find_problem(o.problem);
    if (!p) throw CLI::ValidationError("unknown problem '" + o.problem + "'");
    rp.problem = *p;
    return rp;
}

SolverConfig make_config(const CommonOpts& o) {
    SolverConfig cfg;
    cfg.lambda0 = o.step;
    cfg.tol = o.tol_x;
    cfg.tol1 = o.tol_x;
    cfg.tol2 = o.tol_f;
    cfg.n_exit = o.n_exit;
    cfg.max_evals = o.max_evals;
    cfg.seed = o.seed;
    return cfg;
}

class TraceWriter {
public:
    TraceWriter(const std::string& path, std::size_t dim) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open trace file " + path);
        out_ << "eval_index";
        for (std::size_t d = 1; d <= dim; ++d) out_ << ",x" << d;
        out_ << ",f,feasible\n";
    }

    EvalObserver observer() {
        return [this](std::uint64_t index, const Vector& x, double f, bool feasible) {
            out_ << index;
            for (const double c : x) out_ << ',' << format_double(c);
            out_ << ',' << format_double(f) << ',' << (feasible ? 1 : 0) << '\n';
        };
    }

private:
    std::ofstream out_;
};

void print_result(const Problem& p, const RunResult& r) {
    std::cout << "problem: " << p.name << "\n";
    std::cout << "status: " << to_string(r.status) << "\n";
    std::cout << "x_min:";
    for (const double c : r.x_min) std::cout << ' ' << format_double(c);
    std::cout << "\n";
    std::cout << "f_min: " << format_double(r.f_min) << "\n";
    std::cout << "evals: " << r.evals << "\n";
    std::cout << "line_searches: " << r.line_searches << "\n";
    std::cout << "iterations: " << r.iterations << "\n";
    if (p.known_fmin)
        std::cout << "err_vs_known: " << format_double(std::abs(r.f_min - *p.known_fmin))
                  << "\n";
    if (!p.constraints.h.empty())
        std::cout << "max_equality_violation: " << format_double(r.max_equality_violation)
                  << "\n";
}

int cmd_solve(const CommonOpts& o) {
    ResolvedProblem rp = resolve_problem(o);
    const Problem& p = rp.problem;
    SolverConfig cfg = make_config(o);

    if (!o.x0.empty()) {
        if (o.x0.size() != p.dim) throw CLI::ValidationError("--x0 dimension mismatch");
        cfg.x0 = o.x0;
    } else if (!p.start_list.empty()) {
        cfg.x0 = p.start_list.front();
    }

    ConstraintSet constraints = p.constraints;
    const auto box = parse_bounds(o.bounds, p.dim);
    if (box) constraints.bounds = box;

    const Mode mode = *mode_from_string(o.mode);
    if (mode == Mode::Local && o.starts <= 1) {
        std::optional<TraceWriter> trace;
        if (!o.trace.empty()) {
            trace.emplace(o.trace, p.dim);
            cfg.observer = trace->observer();
        }
        const RunResult r = minimize(p.dim, p.objective, constraints, cfg);
        print_result(p, r);
        return r.status == RunStatus::NoFeasibleStart ? kExitSolveFailure : kExitOk;
    }

    ModeConfig mc;
    mc.mode = mode;
    mc.starts = o.starts;
    mc.lambda0 = o.step;
    if (o.d_min > 0.0) mc.d_min = o.d_min;
    if (mode == Mode::Mixed) mc.discrete_mask = parse_grid(o, p.dim);
    mc.sample_box = box;
    mc.jobs = o.jobs;
    if (rp.from_blackbox) {
        // One child process per run; sweeps may spawn them concurrently.
        BlackBoxSpec spec;
        spec.command = o.blackbox;
        spec.dim = o.dim;
        mc.per_run_problem = [spec, box]() {
            BlackBoxFunctions fns = blackbox_objective(spec);
            ConstraintSet c;
            c.c0.push_back(fns.feasible);
            if (box) c.bounds = box;
            return std::make_pair(Objective(fns.objective), std::move(c));
        };
    }

    const OptimaSet set = multistart(p.dim, p.objective, constraints, cfg, mc);
    std::cout << "mode: " << to_string(mode) << "\n";
    std::cout << "starts: " << set.attempted << " (failed: " << set.failed << ")\n";
    if (set.optima.empty()) {
        std::cout << "no optima found: " << set.diagnostic << "\n";
        return kExitSolveFailure;
    }
    std::cout << "optima:\n";
    for (const OptimumRecord& rec : set.optima) {
        std::cout << "  f=" << format_double(rec.f) << " basin_count=" << rec.basin_count
                  << " x=";
        for (std::size_t i = 0; i < rec.x.size(); ++i)
            std::cout << (i ? "," : "") << format_double(rec.x[i]);
        std::cout << "\n";
    }
    return kExitOk;
}

int bench_one(const Problem& p, const CommonOpts& o, bool write_out) {
    BenchOptions options;
    options.base = make_config(o);
    options.jobs = o.jobs;
    if (o.starts > 0) options.limit_starts = o.starts;

    const BenchOutcome outcome = run_benchmark(p, options);

    if (write_out && !o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) {
            std::cerr << "cannot open " << o.out << "\n";
            return kExitSolveFailure;
        }
        out << per_start_csv(p, outcome.rows);
    }

    const BenchmarkReport& rep = outcome.report;
    std::printf("%-14s starts=%-4d avg_evals=%-9.1f median_err=%-12.3g reliability=%.1f%% wall=%.2fs\n",
                rep.problem.c_str(), rep.starts, rep.avg_evals, rep.median_err,
                rep.reliability_pct, rep.wall_seconds);
    std::cout << report_csv_header() << report_csv_row(rep);
    return kExitOk;
}

int cmd_bench(const CommonOpts& o, bool all) {
    if (all) {
        int rc = kExitOk;
        for (const Problem& p : corpus()) rc = std::max(rc, bench_one(p, o, false));
        return rc;
    }
    ResolvedProblem rp = resolve_problem(o);
    if (rp.problem.start_list.empty()) throw CLI::ValidationError("problem has no start list");
    return bench_one(rp.problem, o, true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derivative-free conjugate-direction optimizer and benchmark harness"};
    app.require_subcommand(1);

    CommonOpts solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "Run a single optimization");
    add_common_flags(solve, solve_opts);
    solve->add_option("--trace", solve_opts.trace, "CSV trace of every objective evaluation");

    CommonOpts bench_opts;
    bool bench_all = false;
    CLI::App* bench = app.add_subcommand("bench", "Sweep a problem's start list");
    add_common_flags(bench, bench_opts);
    bench->add_option("--out", bench_opts.out, "Per-start CSV output path");
    bench->add_flag("--all", bench_all, "Sweep every corpus problem");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opts);
        return cmd_bench(bench_opts, bench_all);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ObjectiveEvalError& e) {
        std::cerr << "objective evaluation failed: " << e.what();
        if (!e.raw_reply.empty()) std::cerr << " (reply: '" << e.raw_reply << "')";
        std::cerr << "\n";
        return kExitBlackBox;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolveFailure;
    }
}
