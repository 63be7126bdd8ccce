// dsesolve: command-line front end.
//
//   dsesolve solve [flags]   solve once, write solution and history CSV
//   dsesolve bench [flags]   time the four algorithm variants
//
// Exit status: 0 success, 2 usage error, 3 I/O error, 4 solver or consistency error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dse/bench.hpp"
#include "dse/config.hpp"
#include "dse/error.hpp"
#include "dse/io.hpp"
#include "dse/solver.hpp"

namespace {

int run_solve(const dse::RunConfig& cfg) {
    dse::SolveOptions options;
    options.probe_log10_p = cfg.probe_log10_p;
    const dse::PropagatorSolution sol = dse::solve(cfg.params, cfg.variant, options);
    dse::write_solution_csv(cfg.out_path, sol);
    dse::write_history_csv(cfg.history_path, sol);
    std::cout << cfg.variant.name() << ": " << (sol.converged ? "converged" : "NOT converged")
              << " after " << sol.iterations << " iterations; A(p2_min)=" << sol.A.front()
              << " B(p2_min)=" << sol.B.front() << " GeV\n"
              << "wrote " << cfg.out_path << ", " << cfg.history_path << '\n';
    return sol.converged ? 0 : 4;
}

int run_bench(const dse::RunConfig& cfg) {
    const dse::BenchReport report = dse::run_bench(cfg.params, cfg.threads, cfg.repeat);
    dse::write_bench_table(std::cout, report);
    if (!cfg.table_path.empty()) {
        std::ofstream os(cfg.table_path);
        if (!os) throw dse::IoError("cannot open '" + cfg.table_path + "' for writing");
        dse::write_bench_table(os, report);
    }
    std::ofstream js(cfg.report_path);
    if (!js) throw dse::IoError("cannot open '" + cfg.report_path + "' for writing");
    js << dse::to_json(report).dump(2) << '\n';
    if (!js) throw dse::IoError("write to '" + cfg.report_path + "' failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const dse::RunConfig cfg = dse::parse_config(std::vector<std::string>(argv + 1, argv + argc));
        return cfg.command == dse::Command::Bench ? run_bench(cfg) : run_solve(cfg);
    } catch (const dse::HelpRequested& h) {
        std::cout << h.what();
        return 0;
    } catch (const dse::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\nRun with --help for options.\n";
        return 2;
    } catch (const dse::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 3;
    } catch (const dse::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
