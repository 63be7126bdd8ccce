#include "dse/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "dse/error.hpp"

namespace dse {

namespace {

// Shortest round-trip-safe form; identical bytes for identical doubles.
std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string label(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    writer(os);
    os.flush();
    if (!os) throw IoError("write to '" + path + "' failed");
}

}  // namespace

void write_solution_csv(std::ostream& os, const PropagatorSolution& sol) {
    os << "log10_p2,A,B\n";
    for (std::size_t i = 0; i < sol.A.size(); ++i)
        os << num(std::log10(sol.p2[i])) << ',' << num(sol.A[i]) << ',' << num(sol.B[i]) << '\n';
}

void write_history_csv(std::ostream& os, const PropagatorSolution& sol) {
    os << "iteration,max_dA,max_dB";
    for (double lp : sol.probe_log10_p) os << ",A@log10p=" << label(lp);
    for (double lp : sol.probe_log10_p) os << ",B@log10p=" << label(lp);
    os << '\n';
    for (const auto& r : sol.history) {
        os << r.iteration << ',' << num(r.max_delta_a) << ',' << num(r.max_delta_b);
        for (double a : r.probe_a) os << ',' << num(a);
        for (double b : r.probe_b) os << ',' << num(b);
        os << '\n';
    }
}

void write_solution_csv(const std::string& path, const PropagatorSolution& sol) {
    write_file(path, [&](std::ostream& os) { write_solution_csv(os, sol); });
}

void write_history_csv(const std::string& path, const PropagatorSolution& sol) {
    write_file(path, [&](std::ostream& os) { write_history_csv(os, sol); });
}

}  // namespace dse
