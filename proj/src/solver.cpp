#include "dse/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dse/fixed_point.hpp"
#include "dse/parallel.hpp"

namespace dse {

std::string AlgorithmVariant::name() const {
    std::string s(to_string(interp));
    s += execution == Execution::Sequential ? "-seq" : "-par";
    return s;
}

int AlgorithmVariant::algorithm_number() const noexcept {
    const int base = interp == InterpStrategy::SearchBased ? 1 : 2;
    return execution == Execution::Sequential ? base : base + 2;
}

unsigned AlgorithmVariant::resolved_threads() const {
    if (execution == Execution::Sequential) return 1;
    return threads.value_or(default_thread_count());
}

AlgorithmVariant AlgorithmVariant::from_name(std::string_view name) {
    for (const auto& v : all_variants())
        if (v.name() == name) return v;
    throw ParameterError("unknown variant '" + std::string(name) +
                         "' (expected search-seq, indexed-seq, search-par or indexed-par)");
}

std::array<AlgorithmVariant, 4> all_variants(std::optional<unsigned> threads) {
    return {AlgorithmVariant{InterpStrategy::SearchBased, Execution::Sequential, std::nullopt},
            AlgorithmVariant{InterpStrategy::PrecomputedIndex, Execution::Sequential, std::nullopt},
            AlgorithmVariant{InterpStrategy::SearchBased, Execution::Parallel, threads},
            AlgorithmVariant{InterpStrategy::PrecomputedIndex, Execution::Parallel, threads}};
}

MomentumGrid build_grid(const ModelParams& params) {
    return build_grid(params.n_ext, params.m_rad, params.m_ang, params.p2_min, params.p2_max);
}

namespace {

template <InterpStrategy S>
struct Interpolate;

template <>
struct Interpolate<InterpStrategy::SearchBased> {
    static double at(const MomentumGrid& grid, std::span<const double> values, std::size_t j) {
        return interp_search_unchecked(grid.p2_ext, values, grid.q2_int[j]);
    }
};

template <>
struct Interpolate<InterpStrategy::PrecomputedIndex> {
    static double at(const MomentumGrid& grid, std::span<const double> values, std::size_t j) {
        return interp_indexed_unchecked(grid, values, j);
    }
};

// Integrand of both equations at one (p_i, q_j, z_k), without the C_F and
// radial/angular weights. Interpolation happens per evaluation, as the
// integrand needs A(q^2) and B(q^2).
struct PointTerms {
    double a;
    double b;
};

template <InterpStrategy S>
inline PointTerms point_terms(const MomentumGrid& grid, std::span<const double> A,
                              std::span<const double> B, double interaction, double p2, double ap,
                              double bp, std::size_t j, std::size_t k) {
    const double q2 = grid.q2_int[j];
    const double aq = Interpolate<S>::at(grid, A, j);
    const double bq = Interpolate<S>::at(grid, B, j);
    const Kinematics kin = kinematics(p2, q2, grid.z_nodes[k]);
    const FiniteQuotients fq = finite_quotients(ap, aq, bp, bq, p2, q2);
    const IntegrandTerms terms = integrand_terms_unchecked(kin, aq, bq, fq);
    const double kernel = interaction / (q2 * aq * aq + bq * bq);
    return {kernel * terms.a_sum(), kernel * terms.b_sum()};
}

template <InterpStrategy S>
[[noreturn]] void locate_failure(const MomentumGrid& grid, const InteractionTable& table,
                                 std::span<const double> A, std::span<const double> B,
                                 std::size_t i) {
    for (std::size_t j = 0; j < grid.n_rad(); ++j)
        for (std::size_t k = 0; k < grid.n_ang(); ++k) {
            const auto t = point_terms<S>(grid, A, B, table.at(i, j, k), grid.p2_ext[i], A[i],
                                          B[i], j, k);
            if (!std::isfinite(t.a) || !std::isfinite(t.b))
                throw NumericalFailure(i, j, k, "non-finite integrand");
        }
    throw NumericalFailure(i, grid.n_rad(), grid.n_ang(), "non-finite accumulated sum");
}

// Right-hand side of both equations at external node i.
template <InterpStrategy S>
void sweep_node(const MomentumGrid& grid, const InteractionTable& table,
                std::span<const double> A, std::span<const double> B, const ModelParams& params,
                std::size_t i, std::vector<double>& A_out, std::vector<double>& B_out) {
    const double p2 = grid.p2_ext[i];
    const double ap = A[i];
    const double bp = B[i];
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (std::size_t j = 0; j < grid.n_rad(); ++j) {
        const std::span<const double> g = table.row(i, j);
        double ang_a = 0.0;
        double ang_b = 0.0;
        for (std::size_t k = 0; k < grid.n_ang(); ++k) {
            const auto t = point_terms<S>(grid, A, B, g[k], p2, ap, bp, j, k);
            ang_a += grid.z_weights[k] * t.a;
            ang_b += grid.z_weights[k] * t.b;
        }
        const double w = grid.s_weights[j] * measure_factor(grid.q2_int[j]);
        sum_a += w * ang_a;
        sum_b += w * ang_b;
    }
    const double a_new = params.z1 + kColorFactor * sum_a;
    const double b_new = params.m0 * params.z1 + kColorFactor * sum_b;
    if (!std::isfinite(a_new) || !std::isfinite(b_new)) locate_failure<S>(grid, table, A, B, i);
    A_out[i] = a_new;
    B_out[i] = b_new;
}

template <InterpStrategy S>
void sweep(const MomentumGrid& grid, const InteractionTable& table, std::span<const double> A,
           std::span<const double> B, const ModelParams& params, unsigned threads,
           std::vector<double>& A_out, std::vector<double>& B_out) {
    parallel_for(grid.n_ext(), threads, [&](std::size_t i) {
        sweep_node<S>(grid, table, A, B, params, i, A_out, B_out);
    });
}

void check_iterate(const MomentumGrid& grid, std::span<const double> A, std::span<const double> B) {
    if (A.size() != grid.n_ext() || B.size() != grid.n_ext())
        throw ParameterError("iterate_once: A and B must have N = " + std::to_string(grid.n_ext()) +
                             " entries");
    for (std::size_t i = 0; i < A.size(); ++i)
        if (!std::isfinite(A[i]) || !std::isfinite(B[i]))
            throw ParameterError("iterate_once: non-finite input at i=" + std::to_string(i));
}

std::vector<double> probe_p2(const std::vector<double>& log10_p) {
    std::vector<double> out;
    out.reserve(log10_p.size());
    for (double lp : log10_p) out.push_back(std::pow(10.0, 2.0 * lp));
    return out;
}

IterationRecord record(int iteration, double da, double db, const MomentumGrid& grid,
                       const std::vector<double>& A, const std::vector<double>& B,
                       const std::vector<double>& probes) {
    IterationRecord r{iteration, da, db, {}, {}};
    for (double p2 : probes) {
        r.probe_a.push_back(interp_search_unchecked(grid.p2_ext, A, p2));
        r.probe_b.push_back(interp_search_unchecked(grid.p2_ext, B, p2));
    }
    return r;
}

}  // namespace

InteractionTable::InteractionTable(const MomentumGrid& grid, const ModelParams& params)
    : n_rad_(grid.n_rad()), n_ang_(grid.n_ang()) {
    values_.resize(grid.n_ext() * n_rad_ * n_ang_);
    std::size_t at = 0;
    for (double p2 : grid.p2_ext)
        for (double q2 : grid.q2_int)
            for (double z : grid.z_nodes)
                values_[at++] = effective_interaction(kinematics(p2, q2, z).k2, params);
}

std::pair<std::vector<double>, std::vector<double>> iterate_once(const MomentumGrid& grid,
                                                                 std::span<const double> A,
                                                                 std::span<const double> B,
                                                                 const ModelParams& params,
                                                                 const AlgorithmVariant& variant) {
    return iterate_once(grid, InteractionTable(grid, params), A, B, params, variant);
}

std::pair<std::vector<double>, std::vector<double>> iterate_once(const MomentumGrid& grid,
                                                                 const InteractionTable& table,
                                                                 std::span<const double> A,
                                                                 std::span<const double> B,
                                                                 const ModelParams& params,
                                                                 const AlgorithmVariant& variant) {
    check_iterate(grid, A, B);
    if (table.size() != grid.n_ext() * grid.n_rad() * grid.n_ang())
        throw ParameterError("iterate_once: interaction table does not match the grid");
    std::vector<double> A_out(grid.n_ext());
    std::vector<double> B_out(grid.n_ext());
    const unsigned threads = variant.resolved_threads();
    if (variant.interp == InterpStrategy::SearchBased)
        sweep<InterpStrategy::SearchBased>(grid, table, A, B, params, threads, A_out, B_out);
    else
        sweep<InterpStrategy::PrecomputedIndex>(grid, table, A, B, params, threads, A_out, B_out);
    return {std::move(A_out), std::move(B_out)};
}

PropagatorSolution solve(const ModelParams& params, const AlgorithmVariant& variant,
                         const SolveOptions& options) {
    params.validate();
    return solve(build_grid(params), params, variant, options);
}

PropagatorSolution solve(const MomentumGrid& grid, const ModelParams& params,
                         const AlgorithmVariant& variant, const SolveOptions& options) {
    params.validate();
    PropagatorSolution sol;
    sol.p2 = grid.p2_ext;
    sol.A.assign(grid.n_ext(), options.initial_a);
    sol.B.assign(grid.n_ext(), options.initial_b);
    sol.probe_log10_p = options.probe_log10_p;

    const std::vector<double> probes = probe_p2(options.probe_log10_p);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    sol.history.push_back(record(0, nan, nan, grid, sol.A, sol.B, probes));

    const InteractionTable table(grid, params);
    const double relax = params.relaxation;
    auto step = [&] {
        auto [A_next, B_next] = iterate_once(grid, table, sol.A, sol.B, params, variant);
        if (relax != 1.0) {
            for (std::size_t i = 0; i < A_next.size(); ++i) {
                A_next[i] = (1.0 - relax) * sol.A[i] + relax * A_next[i];
                B_next[i] = (1.0 - relax) * sol.B[i] + relax * B_next[i];
            }
        }
        const UpdateNorms norms{max_abs_diff(A_next, sol.A), max_abs_diff(B_next, sol.B)};
        sol.A = std::move(A_next);
        sol.B = std::move(B_next);
        return norms;
    };
    auto observe = [&](int n, const UpdateNorms& norms) {
        sol.history.push_back(record(n, norms.first, norms.second, grid, sol.A, sol.B, probes));
    };
    const IterationStatus status =
        successive_approximation(IterationControl{params.xi, params.max_iterations}, step, observe);
    sol.iterations = status.iterations;
    sol.converged = status.converged;
    return sol;
}

}  // namespace dse
