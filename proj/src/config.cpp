#include "dse/config.hpp"

#include <algorithm>
#include <string>

#include "CLI11.hpp"
#include "dse/parallel.hpp"

namespace dse {

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    ModelParams& p = cfg.params;
    std::string variant = cfg.variant.name();
    unsigned threads = 0;

    CLI::App app{"Quark gap equation solver with Ball-Chiu vertex", "dsesolve"};
    app.set_config("--config", "", "INI/TOML file with option values (flags override it)");
    app.allow_config_extras(false);
    auto* solve_cmd = app.add_subcommand("solve", "Solve once and write solution/history CSV");
    auto* bench_cmd = app.add_subcommand("bench", "Time all four algorithm variants");
    solve_cmd->fallthrough();
    bench_cmd->fallthrough();
    app.require_subcommand(1);

    app.add_option("--D", p.D, "Interaction strength D [GeV^2]")->capture_default_str();
    app.add_option("--omega", p.omega, "Interaction width omega [GeV]")->capture_default_str();
    app.add_option("--m0", p.m0, "Current quark mass [GeV]")->capture_default_str();
    app.add_option("--xi", p.xi, "Convergence accuracy")->capture_default_str();
    app.add_option("--N", p.n_ext, "External momentum nodes")->capture_default_str();
    app.add_option("--M-rad", p.m_rad, "Radial Gauss-Legendre nodes")->capture_default_str();
    app.add_option("--M-ang", p.m_ang, "Angular Gauss-Chebyshev nodes")->capture_default_str();
    app.add_option("--p2-min", p.p2_min, "Lower momentum-squared bound [GeV^2]")->capture_default_str();
    app.add_option("--p2-max", p.p2_max, "Upper momentum-squared bound [GeV^2]")->capture_default_str();
    app.add_option("--max-iter", p.max_iterations, "Iteration cap")->capture_default_str();
    app.add_option("--relax", p.relaxation, "Relaxation factor in (0, 1]")->capture_default_str();
    app.add_option("--variant", variant, "Algorithm variant for solve")
        ->check(CLI::IsMember({"search-seq", "indexed-seq", "search-par", "indexed-par"}))
        ->capture_default_str();
    app.add_option("--threads", threads,
                   std::string("Worker threads for parallel variants (default: $") + kThreadsEnvVar +
                       " or hardware concurrency)");
    app.add_option("--out", cfg.out_path, "Solution CSV path")->capture_default_str();
    app.add_option("--history", cfg.history_path, "History CSV path")->capture_default_str();
    app.add_option("--report", cfg.report_path, "Bench JSON report path")->capture_default_str();
    app.add_option("--table", cfg.table_path, "Bench table path (stdout always)");
    app.add_option("--probes", cfg.probe_log10_p, "Probe momenta as log10(p/GeV)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Reserved; the solver is deterministic")->capture_default_str();
    app.add_option("--repeat", cfg.repeat, "Bench repetitions per variant (minimum kept)")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.command = bench_cmd->parsed() ? Command::Bench : Command::Solve;
    if (app.count("--threads") > 0) {
        if (threads == 0) throw UsageError("invalid --threads: must be >= 1");
        cfg.threads = threads;
    }
    if (cfg.repeat < 1) throw UsageError("invalid --repeat: must be >= 1");
    try {
        p.validate();
        cfg.variant = AlgorithmVariant::from_name(variant);
    } catch (const ParameterError& e) {
        throw UsageError(std::string("invalid --") + e.what());
    }
    cfg.variant.threads = cfg.threads;
    return cfg;
}

}  // namespace dse
