#include "dse/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <thread>

#include "dse/error.hpp"
#include "dse/fixed_point.hpp"

namespace dse {

namespace {

double process_cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

double BenchReport::speedup(int algorithm) const {
    const auto find = [&](int a) -> const BenchRow& {
        for (const auto& r : rows)
            if (r.algorithm == a) return r;
        throw ParameterError("no row for algorithm " + std::to_string(a));
    };
    return find(1).wall_s / find(algorithm).wall_s;
}

BenchReport run_bench(const ModelParams& params, std::optional<unsigned> threads, int repeat) {
    params.validate();
    if (repeat < 1) throw ParameterError("repeat: must be >= 1");
    const MomentumGrid grid = build_grid(params);

    BenchReport report;
    report.params = params;
    report.hardware_threads = std::max(1u, std::thread::hardware_concurrency());
    report.timestamp = utc_timestamp();

    std::optional<PropagatorSolution> reference;
    for (const AlgorithmVariant& variant : all_variants(threads)) {
        BenchRow row;
        row.variant = variant.name();
        row.algorithm = variant.algorithm_number();
        row.threads = variant.resolved_threads();
        row.wall_s = std::numeric_limits<double>::infinity();
        PropagatorSolution sol;
        for (int r = 0; r < repeat; ++r) {
            const double cpu0 = process_cpu_seconds();
            const auto t0 = std::chrono::steady_clock::now();
            sol = solve(grid, params, variant);
            const auto t1 = std::chrono::steady_clock::now();
            const double cpu = process_cpu_seconds() - cpu0;
            const double wall = std::chrono::duration<double>(t1 - t0).count();
            if (wall < row.wall_s) {
                row.wall_s = wall;
                row.cpu_s = cpu;
            }
        }
        row.cpu_percent = row.wall_s > 0.0 ? 100.0 * row.cpu_s / row.wall_s : 0.0;
        row.iterations = sol.iterations;
        row.converged = sol.converged;

        if (!reference) {
            reference = std::move(sol);
        } else {
            if (sol.iterations != reference->iterations)
                throw ConsistencyError("variant " + row.variant + " took " +
                                       std::to_string(sol.iterations) + " iterations, expected " +
                                       std::to_string(reference->iterations));
            const double diff =
                std::max(max_abs_diff(sol.A, reference->A), max_abs_diff(sol.B, reference->B));
            if (!(diff <= kVariantAgreementTolerance))
                throw ConsistencyError("variant " + row.variant + " disagrees with " +
                                       report.rows.front().variant + " by " + std::to_string(diff));
            report.max_disagreement = std::max(report.max_disagreement, diff);
        }
        report.rows.push_back(row);
    }
    return report;
}

void write_bench_table(std::ostream& os, const BenchReport& report) {
    const ModelParams& p = report.params;
    char line[256];
    std::snprintf(line, sizeof line, "%5s %6s %6s %8s  %-12s %-12s %7s %8s %10s %10s %10s\n", "N",
                  "M_rad", "M_ang", "xi", "algorithm", "variant", "threads", "%CPU", "iterations",
                  "wall(s)", "cpu(s)");
    os << line;
    for (const auto& r : report.rows) {
        const std::string alg = "algorithm." + std::to_string(r.algorithm);
        std::snprintf(line, sizeof line, "%5d %6d %6d %8g  %-12s %-12s %7u %8.1f %10d %10.4f %10.4f\n",
                      p.n_ext, p.m_rad, p.m_ang, p.xi, alg.c_str(), r.variant.c_str(), r.threads,
                      r.cpu_percent, r.iterations, r.wall_s, r.cpu_s);
        os << line;
    }
    for (int a = 2; a <= 4; ++a) {
        std::snprintf(line, sizeof line, "speedup t(alg1)/t(alg%d) = %.2f\n", a, report.speedup(a));
        os << line;
    }
}

nlohmann::json to_json(const BenchReport& report) {
    const ModelParams& p = report.params;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"variant", r.variant},
                        {"algorithm", r.algorithm},
                        {"threads", r.threads},
                        {"wall_s", r.wall_s},
                        {"cpu_s", r.cpu_s},
                        {"cpu_percent", r.cpu_percent},
                        {"iterations", r.iterations},
                        {"converged", r.converged}});
    }
    return {
        {"params",
         {{"D", p.D}, {"omega", p.omega}, {"m0", p.m0}, {"xi", p.xi}, {"N", p.n_ext},
          {"M_rad", p.m_rad}, {"M_ang", p.m_ang}, {"p2_min", p.p2_min}, {"p2_max", p.p2_max}}},
        {"rows", rows},
        {"speedups",
         {{"alg1_over_alg2", report.speedup(2)},
          {"alg1_over_alg3", report.speedup(3)},
          {"alg1_over_alg4", report.speedup(4)}}},
        {"max_disagreement", report.max_disagreement},
        {"environment", {{"hardware_threads", report.hardware_threads}, {"timestamp", report.timestamp}}},
    };
}

}  // namespace dse
