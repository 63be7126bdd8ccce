#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dse/grid.hpp"
#include "dse/interpolation.hpp"
#include "dse/kernels.hpp"

namespace dse {

enum class Execution { Sequential, Parallel };

/// One of the four interpolation x execution combinations.
struct AlgorithmVariant {
    InterpStrategy interp = InterpStrategy::PrecomputedIndex;
    Execution execution = Execution::Sequential;
    std::optional<unsigned> threads;  // Parallel only; default_thread_count() when empty

    /// "search-seq", "indexed-seq", "search-par" or "indexed-par".
    [[nodiscard]] std::string name() const;
    /// 1..4 in the order above.
    [[nodiscard]] int algorithm_number() const noexcept;
    /// Threads the sweep will actually use.
    [[nodiscard]] unsigned resolved_threads() const;

    /// Throws ParameterError for unknown names.
    static AlgorithmVariant from_name(std::string_view name);
};

/// The four variants in algorithm order 1..4.
std::array<AlgorithmVariant, 4> all_variants(std::optional<unsigned> threads = std::nullopt);

struct IterationRecord {
    int iteration = 0;        // 0 is the initial state
    double max_delta_a = 0;   // NaN for the initial state
    double max_delta_b = 0;
    std::vector<double> probe_a;  // A, B at SolveOptions::probe_log10_p
    std::vector<double> probe_b;
};

struct PropagatorSolution {
    std::vector<double> p2;  // external grid
    std::vector<double> A;
    std::vector<double> B;   // GeV
    int iterations = 0;
    bool converged = false;
    std::vector<double> probe_log10_p;
    std::vector<IterationRecord> history;
};

struct SolveOptions {
    // Probe momenta as log10(p / GeV); values are read off the grid by search interpolation.
    std::vector<double> probe_log10_p{-2.5, 0.0};
    // Starting values of A and B at every node.
    double initial_a = 1.0;
    double initial_b = 1.0;
};

/// G(k^2) at every (p_i, q_j, z_k) of a grid. Depends only on the grid and the
/// interaction parameters, so a solve builds it once and reuses it every sweep.
class InteractionTable {
public:
    InteractionTable(const MomentumGrid& grid, const ModelParams& params);

    [[nodiscard]] double at(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return values_[(i * n_rad_ + j) * n_ang_ + k];
    }
    // The M_ang values for fixed (i, j).
    [[nodiscard]] std::span<const double> row(std::size_t i, std::size_t j) const noexcept {
        return {values_.data() + (i * n_rad_ + j) * n_ang_, n_ang_};
    }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

private:
    std::size_t n_rad_;
    std::size_t n_ang_;
    std::vector<double> values_;
};

/// One Jacobi sweep of the discretized gap equation:
///
///   A'(p_i) = z1      + C_F sum_jk w_j w_k m(q_j) G(k^2) [IA1 + IA2 + IA3] / den(q_j)
///   B'(p_i) = m0 z1   + C_F sum_jk w_j w_k m(q_j) G(k^2) [IB1 + IB2 + IB3] / den(q_j)
///
/// with den(q^2) = q^2 A^2(q^2) + B^2(q^2) and m the radial Jacobian (measure_factor).
/// A(q_j^2), B(q_j^2) come from the variant's interpolation strategy. Every output
/// slot depends only on the inputs, so the result is bitwise independent of
/// thread count and scheduling.
///
/// Throws ParameterError on size mismatch or non-finite input, and
/// NumericalFailure with the offending (i, j, k) on a non-finite sum.
std::pair<std::vector<double>, std::vector<double>> iterate_once(const MomentumGrid& grid,
                                                                 std::span<const double> A,
                                                                 std::span<const double> B,
                                                                 const ModelParams& params,
                                                                 const AlgorithmVariant& variant);

/// Same, with a prebuilt interaction table for this grid and params.
std::pair<std::vector<double>, std::vector<double>> iterate_once(const MomentumGrid& grid,
                                                                 const InteractionTable& table,
                                                                 std::span<const double> A,
                                                                 std::span<const double> B,
                                                                 const ModelParams& params,
                                                                 const AlgorithmVariant& variant);

/// Successive approximation from A = B = 1 until both max-norm updates drop below xi
/// or params.max_iterations is reached (converged = false, no exception).
PropagatorSolution solve(const ModelParams& params, const AlgorithmVariant& variant,
                         const SolveOptions& options = {});

/// Same, on a grid built beforehand from the same params.
PropagatorSolution solve(const MomentumGrid& grid, const ModelParams& params,
                         const AlgorithmVariant& variant, const SolveOptions& options = {});

MomentumGrid build_grid(const ModelParams& params);

}  // namespace dse
