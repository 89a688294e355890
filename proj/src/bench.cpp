#include "cdos/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "cdos/blackbox.hpp"
#include "cdos/multistart.hpp"

namespace cdos {

namespace {

double median(std::vector<double> values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

BenchmarkReport aggregate_rows(const Problem& problem, const std::vector<StartRecord>& rows) {
    BenchmarkReport rep;
    rep.problem = problem.name;
    rep.starts = static_cast<int>(rows.size());
    if (rows.empty()) return rep;

    double eval_sum = 0.0;
    int successes = 0;
    std::vector<double> errs;
    errs.reserve(rows.size());
    for (const StartRecord& r : rows) {
        eval_sum += static_cast<double>(r.result.evals);
        errs.push_back(r.err);
        if (r.err <= problem.fail_threshold) ++successes;
    }
    rep.avg_evals = eval_sum / static_cast<double>(rows.size());
    rep.median_err = median(std::move(errs));
    rep.reliability_pct = 100.0 * successes / static_cast<double>(rows.size());
    return rep;
}

BenchOutcome run_benchmark(const Problem& problem, const BenchOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();

    std::size_t count = problem.start_list.size();
    if (options.limit_starts && *options.limit_starts >= 0)
        count = std::min<std::size_t>(count, static_cast<std::size_t>(*options.limit_starts));

    std::vector<StartRecord> rows(count);
    auto run_one = [&](std::size_t i) {
        StartRecord& row = rows[i];
        row.index = static_cast<int>(i);
        row.x0 = problem.start_list[i];
        SolverConfig cfg = options.base;
        cfg.x0 = row.x0;
        cfg.seed = start_seed(options.base.seed, i);
        try {
            row.result = minimize(problem.dim, problem.objective, problem.constraints, cfg);
            if (problem.known_fmin && std::isfinite(row.result.f_min))
                row.err = std::abs(row.result.f_min - *problem.known_fmin);
            else
                row.err = std::numeric_limits<double>::infinity();
        } catch (const std::exception& e) {
            row.run_failed = true;
            row.error = e.what();
            row.err = std::numeric_limits<double>::infinity();
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(jobs, count);
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    run_one(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    BenchOutcome out;
    out.rows = std::move(rows);
    out.report = aggregate_rows(problem, out.rows);
    out.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::string per_start_csv(const Problem& problem, const std::vector<StartRecord>& rows) {
    std::string csv = "problem,start_index";
    for (std::size_t d = 1; d <= problem.dim; ++d) csv += ",x0_" + std::to_string(d);
    csv += ",f_min,err,evals,status\n";
    for (const StartRecord& r : rows) {
        csv += problem.name;
        csv += ',';
        csv += std::to_string(r.index);
        for (const double c : r.x0) {
            csv += ',';
            csv += format_double(c);
        }
        csv += ',';
        csv += r.run_failed ? "nan" : format_double(r.result.f_min);
        csv += ',';
        csv += format_double(r.err);
        csv += ',';
        csv += std::to_string(r.result.evals);
        csv += ',';
        csv += r.run_failed ? "run_failed" : to_string(r.result.status);
        csv += '\n';
    }
    return csv;
}

std::string report_csv_header() {
    return "method,problem,starts,avg_evals,median_err,reliability_pct,wall_seconds\n";
}

std::string report_csv_row(const BenchmarkReport& report) {
    std::string row = report.method;
    row += ',';
    row += report.problem;
    row += ',';
    row += std::to_string(report.starts);
    row += ',';
    row += format_double(report.avg_evals);
    row += ',';
    row += format_double(report.median_err);
    row += ',';
    row += format_double(report.reliability_pct);
    row += ',';
    row += format_double(report.wall_seconds);
    row += '\n';
    return row;
}

}  // namespace cdos
