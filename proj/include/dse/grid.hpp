#pragma once

#include <cstddef>
#include <vector>

#include "dse/quadrature.hpp"

namespace dse {

/// External and internal momentum grids for the gap equation.
///
/// The solution lives on the external nodes p2_ext. Radial integrals run over
/// the Gauss-Legendre nodes in s = ln(q^2), and the dressing functions at
/// q2_int are obtained by linear interpolation between external nodes. The
/// bracket of every internal node is found once here by a merge pass, so no
/// search happens during iteration. No internal node coincides with an
/// external one, which keeps the 1/(q^2 - p^2) quotients finite.
///
/// Immutable after construction; safe to share across threads.
struct MomentumGrid {
    std::vector<double> p2_ext;     // N, strictly increasing, GeV^2
    std::vector<double> s_nodes;    // M_rad, ln(q^2 / GeV^2)
    std::vector<double> s_weights;  // M_rad
    std::vector<double> q2_int;     // M_rad, exp(s_nodes)
    // For internal node j, the index i with p2_ext[i] <= q2_int[j] < p2_ext[i+1].
    // Equals N-1 when q2_int[j] >= p2_ext[N-1]. 0-based. Construction guarantees
    // q2_int[0] > p2_ext[0], so no internal node lies below the external range.
    std::vector<std::size_t> bracket_idx;
    std::vector<double> z_nodes;    // M_ang, in (-1, 1)
    std::vector<double> z_weights;  // M_ang, measure sqrt(1 - z^2) dz
    bool shifted = false;           // external grid was moved by half a log step

    [[nodiscard]] std::size_t n_ext() const noexcept { return p2_ext.size(); }
    [[nodiscard]] std::size_t n_rad() const noexcept { return q2_int.size(); }
    [[nodiscard]] std::size_t n_ang() const noexcept { return z_nodes.size(); }
};

/// Relative distance below which an internal and an external node count as coincident.
inline constexpr double kCoincidenceTolerance = 1e-12;

/// Builds the grids. External nodes are log-uniform over [p2_min, p2_max]; if any
/// internal node coincides with one of them the whole external grid is shifted by
/// half a log step (down, or up if that leaves the range). Throws ParameterError
/// on invalid sizes/bounds and GridError if coincidence cannot be removed.
MomentumGrid build_grid(int n_ext, int m_rad, int m_ang, double p2_min, double p2_max);

/// Merge-pass bracket computation over two sorted arrays (0-based, see MomentumGrid).
std::vector<std::size_t> merge_brackets(const std::vector<double>& sorted_knots,
                                        const std::vector<double>& sorted_queries);

/// Smallest relative gap |q2 - p2| / q2 over all internal/external pairs.
double min_relative_gap(const MomentumGrid& grid);

}  // namespace dse
