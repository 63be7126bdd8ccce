#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dse/error.hpp"
#include "dse/kernels.hpp"
#include "dse/solver.hpp"

namespace dse {

enum class Command { Solve, Bench };

struct RunConfig {
    Command command = Command::Solve;
    ModelParams params;
    AlgorithmVariant variant;  // used by `solve`
    std::optional<unsigned> threads;
    std::string out_path = "solution.csv";
    std::string history_path = "history.csv";
    std::string report_path = "bench.json";
    std::string table_path;   // bench table; stdout only when empty
    std::vector<double> probe_log10_p{-2.5, 0.0};
    std::uint64_t seed = 0;   // reserved; the solver is deterministic
    int repeat = 1;
};

/// Thrown by parse_config for --help; what() holds the usage text.
class HelpRequested : public Error {
public:
    using Error::Error;
};

/// Parses `dsesolve <solve|bench> [flags]`. args excludes the program name.
/// Precedence: built-in defaults < --config file (INI/TOML) < command-line flags.
/// Throws UsageError naming the offending flag or key.
RunConfig parse_config(const std::vector<std::string>& args);

}  // namespace dse
