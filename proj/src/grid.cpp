#include "dse/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dse/error.hpp"

namespace dse {

std::vector<std::size_t> merge_brackets(const std::vector<double>& knots,
                                        const std::vector<double>& queries) {
    std::vector<std::size_t> out(queries.size());
    std::size_t i = 0;
    for (std::size_t j = 0; j < queries.size(); ++j) {
        while (i + 1 < knots.size() && knots[i + 1] <= queries[j]) ++i;
        out[j] = i;
    }
    return out;
}

double min_relative_gap(const MomentumGrid& grid) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < grid.q2_int.size(); ++j) {
        const double q2 = grid.q2_int[j];
        const std::size_t i = grid.bracket_idx[j];
        gap = std::min(gap, std::abs(q2 - grid.p2_ext[i]) / q2);
        if (i + 1 < grid.p2_ext.size()) gap = std::min(gap, std::abs(grid.p2_ext[i + 1] - q2) / q2);
    }
    return gap;
}

namespace {

std::vector<double> log_uniform(std::size_t n, double log_lo, double step, double offset) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::exp(log_lo + (static_cast<double>(i) + offset) * step);
    return out;
}

}  // namespace

MomentumGrid build_grid(int n_ext, int m_rad, int m_ang, double p2_min, double p2_max) {
    if (n_ext < 2) throw ParameterError("build_grid: N must be >= 2, got " + std::to_string(n_ext));
    if (m_rad < 2) throw ParameterError("build_grid: M_rad must be >= 2, got " + std::to_string(m_rad));
    if (m_ang < 1) throw ParameterError("build_grid: M_ang must be >= 1, got " + std::to_string(m_ang));
    if (!(p2_min > 0.0) || !(p2_min < p2_max) || !std::isfinite(p2_max))
        throw ParameterError("build_grid: need 0 < p2_min < p2_max");

    const double lo = std::log(p2_min);
    const double hi = std::log(p2_max);
    const auto n = static_cast<std::size_t>(n_ext);
    const double step = (hi - lo) / static_cast<double>(n - 1);

    MomentumGrid grid;
    const QuadratureRule radial = gauss_legendre(m_rad, lo, hi);
    grid.s_nodes = radial.nodes;
    grid.s_weights = radial.weights;
    grid.q2_int.resize(grid.s_nodes.size());
    std::transform(grid.s_nodes.begin(), grid.s_nodes.end(), grid.q2_int.begin(),
                   [](double s) { return std::exp(s); });

    grid.p2_ext = log_uniform(n, lo, step, 0.0);
    grid.p2_ext.front() = p2_min;
    grid.p2_ext.back() = p2_max;
    grid.bracket_idx = merge_brackets(grid.p2_ext, grid.q2_int);

    if (min_relative_gap(grid) <= kCoincidenceTolerance) {
        // Shift down so that every internal node stays above the first external one.
        grid.p2_ext = log_uniform(n, lo, step, -0.5);
        grid.bracket_idx = merge_brackets(grid.p2_ext, grid.q2_int);
        grid.shifted = true;
        if (min_relative_gap(grid) <= kCoincidenceTolerance)
            throw GridError("build_grid: internal and external nodes coincide for N=" +
                            std::to_string(n_ext) + ", M_rad=" + std::to_string(m_rad));
    }
    if (!(grid.q2_int.front() > grid.p2_ext.front()))
        throw GridError("build_grid: internal node below the external range");

    const QuadratureRule angular = gauss_chebyshev2(m_ang);
    grid.z_nodes = angular.nodes;
    grid.z_weights = angular.weights;
    return grid;
}

}  // namespace dse
