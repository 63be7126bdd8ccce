#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dse/bench.hpp"
#include "dse/error.hpp"
#include "dse/io.hpp"

namespace {

dse::ModelParams small_params() {
    dse::ModelParams p;
    p.n_ext = 40;
    p.m_rad = 32;
    p.m_ang = 10;
    return p;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');) out.push_back(f);
    return out;
}

const dse::AlgorithmVariant kIndexedSeq{dse::InterpStrategy::PrecomputedIndex, dse::Execution::Sequential, {}};

}  // namespace

TEST_CASE("solution CSV of the free theory") {
    auto p = small_params();
    p.D = 0.0;
    p.m0 = 0.25;
    const auto sol = dse::solve(p, kIndexedSeq);
    std::ostringstream os;
    dse::write_solution_csv(os, sol);
    const auto ls = lines(os.str());
    REQUIRE(ls.size() == sol.A.size() + 1);
    CHECK(ls[0] == "log10_p2,A,B");
    const auto first = fields(ls[1]);
    REQUIRE(first.size() == 3);
    CHECK(std::stod(first[0]) == doctest::Approx(-6.0));
    CHECK(fields(ls.back())[0] == "4");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        CHECK(f[1] == "1");
        CHECK(f[2] == "0.25");
        CHECK(std::stod(f[0]) == std::log10(sol.p2[i - 1]));
    }
}

TEST_CASE("history CSV layout") {
    const auto sol = dse::solve(small_params(), kIndexedSeq);
    std::ostringstream os;
    dse::write_history_csv(os, sol);
    const auto ls = lines(os.str());
    REQUIRE(ls.size() == sol.history.size() + 1);
    CHECK(ls[0] == "iteration,max_dA,max_dB,A@log10p=-2.5,A@log10p=0,B@log10p=-2.5,B@log10p=0");
    CHECK(fields(ls[1]) == std::vector<std::string>{"0", "nan", "nan", "1", "1", "1", "1"});
    const auto last = fields(ls.back());
    REQUIRE(last.size() == 7);
    CHECK(std::stoi(last[0]) == sol.iterations);
    CHECK(std::stod(last[1]) == sol.history.back().max_delta_a);
    CHECK(std::stod(last[5]) == sol.history.back().probe_b[0]);
}

TEST_CASE("output is byte-identical across runs and variants") {
    const auto p = small_params();
    std::string reference;
    for (const auto& v : dse::all_variants(3)) {
        std::ostringstream os;
        const auto sol = dse::solve(p, v);
        dse::write_solution_csv(os, sol);
        dse::write_history_csv(os, sol);
        if (reference.empty()) reference = os.str();
        CHECK(os.str() == reference);
    }
}

TEST_CASE("unwritable paths raise IoError") {
    auto p = small_params();
    p.D = 0.0;
    const auto sol = dse::solve(p, kIndexedSeq);
    CHECK_THROWS_AS(dse::write_solution_csv("/nonexistent-dir/solution.csv", sol), dse::IoError);
    CHECK_THROWS_AS(dse::write_history_csv("/nonexistent-dir/history.csv", sol), dse::IoError);
}

TEST_CASE("bench report covers all four variants") {
    const auto report = dse::run_bench(small_params(), 2u, 1);
    REQUIRE(report.rows.size() == 4);
    for (int a = 0; a < 4; ++a) {
        const auto& r = report.rows[a];
        CHECK(r.algorithm == a + 1);
        CHECK(r.converged);
        CHECK(r.iterations == report.rows[0].iterations);
        CHECK(r.wall_s > 0.0);
        CHECK(r.cpu_s >= 0.0);
    }
    CHECK(report.rows[2].threads == 2);
    CHECK(report.max_disagreement == 0.0);
    CHECK(report.speedup(1) == 1.0);

    const auto j = dse::to_json(report);
    CHECK(j.at("rows").size() == 4);
    CHECK(j.at("rows")[1].at("variant") == "indexed-seq");
    CHECK(j.at("speedups").contains("alg1_over_alg2"));
    CHECK(j.at("speedups").contains("alg1_over_alg4"));
    CHECK(j.at("environment").contains("hardware_threads"));
    CHECK(j.at("environment").contains("timestamp"));
    CHECK(j.at("params").at("N") == 40);

    std::ostringstream table;
    dse::write_bench_table(table, report);
    const auto ls = lines(table.str());
    CHECK(ls.size() == 1 + 4 + 3);
    CHECK(ls[1].find("algorithm.1") != std::string::npos);
    CHECK(ls.back().find("t(alg1)/t(alg4)") != std::string::npos);
}

TEST_CASE("one-thread parallel variant costs the same as sequential") {
    auto p = small_params();
    p.n_ext = 80;
    p.m_rad = 60;
    const auto report = dse::run_bench(p, 1u, 5);
    const double ratio = report.rows[2].wall_s / report.rows[0].wall_s;
    CAPTURE(ratio);
    CHECK(ratio > 0.67);
    CHECK(ratio < 1.5);
}

TEST_CASE("bench rejects invalid input") {
    auto p = small_params();
    CHECK_THROWS_AS(dse::run_bench(p, 1u, 0), dse::ParameterError);
    p.xi = -1.0;
    CHECK_THROWS_AS(dse::run_bench(p, 1u, 1), dse::ParameterError);
}
