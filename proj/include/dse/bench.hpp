#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dse/kernels.hpp"
#include "dse/solver.hpp"

namespace dse {

struct BenchRow {
    std::string variant;
    int algorithm = 0;
    unsigned threads = 1;
    double wall_s = 0.0;
    double cpu_s = 0.0;
    double cpu_percent = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct BenchReport {
    ModelParams params;
    std::vector<BenchRow> rows;  // algorithm order 1..4
    double max_disagreement = 0.0;
    unsigned hardware_threads = 0;
    std::string timestamp;  // UTC, ISO 8601

    // wall(alg1) / wall(algN)
    [[nodiscard]] double speedup(int algorithm) const;
};

/// Maximum |A| or |B| difference between variants allowed before a report is refused.
inline constexpr double kVariantAgreementTolerance = 1e-10;

/// Solves params with all four variants on one shared grid (built outside the timed
/// region). Each variant is timed over `repeat` runs and the minimum kept.
/// Throws ConsistencyError if iteration counts differ or solutions disagree beyond
/// kVariantAgreementTolerance.
BenchReport run_bench(const ModelParams& params, std::optional<unsigned> threads, int repeat = 1);

/// Table mirroring the N / M / xi / algorithm / %CPU / iterations / time columns.
void write_bench_table(std::ostream& os, const BenchReport& report);

nlohmann::json to_json(const BenchReport& report);

}  // namespace dse
