#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdos/problems.hpp"
#include "cdos/solver.hpp"

namespace cdos {

struct BenchOptions {
    SolverConfig base;                 // step, tolerances, n_exit, budget, seed
    int jobs = 1;
    std::optional<int> limit_starts;   // run only the first N starts
};

struct StartRecord {
    int index = 0;
    Vector x0;
    RunResult result;
    double err = 0.0;       // |f_min - known f*|; infinite for failed runs
    bool run_failed = false;
    std::string error;
};

// Aggregate row of one problem sweep.
struct BenchmarkReport {
    std::string method = "CDOS";
    std::string problem;
    int starts = 0;
    double avg_evals = 0.0;
    double median_err = 0.0;
    double reliability_pct = 0.0;  // starts with err <= fail_threshold
    double wall_seconds = 0.0;
};

struct BenchOutcome {
    BenchmarkReport report;
    std::vector<StartRecord> rows;
};

// Full sweep over the problem's start list with per-start seeds derived from
// the base seed; schedulable over several threads with identical results.
BenchOutcome run_benchmark(const Problem& problem, const BenchOptions& options);

// CSV with header: problem,start_index,x0_1..x0_n,f_min,err,evals,status
std::string per_start_csv(const Problem& problem, const std::vector<StartRecord>& rows);

std::string report_csv_header();
std::string report_csv_row(const BenchmarkReport& report);

// Recomputes the aggregate from rows; used to cross-check the printed report.
BenchmarkReport aggregate_rows(const Problem& problem, const std::vector<StartRecord>& rows);

}  // namespace cdos
