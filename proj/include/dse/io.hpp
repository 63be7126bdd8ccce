#pragma once

#include <ostream>
#include <string>

#include "dse/solver.hpp"

namespace dse {

// CSV, one header line. Columns: log10_p2,A,B
void write_solution_csv(std::ostream& os, const PropagatorSolution& sol);

// CSV, one row per iteration including the initial state. Columns:
// iteration,max_dA,max_dB,A@log10p=<x>...,B@log10p=<x>...
void write_history_csv(std::ostream& os, const PropagatorSolution& sol);

// File variants; throw IoError when the path cannot be written.
void write_solution_csv(const std::string& path, const PropagatorSolution& sol);
void write_history_csv(const std::string& path, const PropagatorSolution& sol);

}  // namespace dse
