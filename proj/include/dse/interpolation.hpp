#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "dse/error.hpp"
#include "dse/grid.hpp"

namespace dse {

enum class InterpStrategy {
    SearchBased,       // locate the bracket by binary search on every call
    PrecomputedIndex,  // read the bracket stored in MomentumGrid::bracket_idx
};

std::string_view to_string(InterpStrategy s) noexcept;

/// Observes comparisons of a query against grid knots. The default does nothing
/// and compiles away; tests pass a counting probe.
struct NoProbe {
    constexpr void compared() const noexcept {}
};

struct CountingProbe {
    std::size_t comparisons = 0;
    void compared() noexcept { ++comparisons; }
};

namespace detail {

// Linear segment between knots i and i+1; the top knot returns its value.
[[nodiscard]] inline double linear_segment(std::span<const double> knots,
                                           std::span<const double> values, std::size_t i,
                                           double query) noexcept {
    if (i + 1 >= knots.size()) return values[knots.size() - 1];
    return values[i] +
           (query - knots[i]) * ((values[i + 1] - values[i]) / (knots[i + 1] - knots[i]));
}

// Index i with knots[i] <= query < knots[i+1], or size-1 at/above the last knot.
// Requires query >= knots[0].
template <class Probe>
[[nodiscard]] inline std::size_t find_bracket(std::span<const double> knots, double query,
                                              Probe& probe) noexcept {
    std::size_t lo = 0;
    std::size_t hi = knots.size();
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        probe.compared();
        if (knots[mid] <= query)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace detail

/// Piecewise-linear interpolation with a binary-search "finding step".
/// Above the last knot it returns the last value; below the first, the first value.
/// No validation; see interp_search for the checked entry point.
template <class Probe = NoProbe>
[[nodiscard]] inline double interp_search_unchecked(std::span<const double> knots,
                                                    std::span<const double> values, double query,
                                                    Probe&& probe = Probe{}) noexcept {
    probe.compared();
    if (query < knots[0]) return values[0];
    return detail::linear_segment(knots, values, detail::find_bracket(knots, query, probe), query);
}

/// Interpolation at internal node j using the bracket stored in the grid.
/// Never compares against grid knots; bitwise equal to the search form at q2_int[j].
template <class Probe = NoProbe>
[[nodiscard]] inline double interp_indexed_unchecked(const MomentumGrid& grid,
                                                     std::span<const double> values, std::size_t j,
                                                     Probe&& = Probe{}) noexcept {
    return detail::linear_segment(grid.p2_ext, values, grid.bracket_idx[j], grid.q2_int[j]);
}

/// Checked: knots strictly increasing with at least 2 entries and values of equal length.
/// Throws ParameterError otherwise.
double interp_search(std::span<const double> knots, std::span<const double> values, double query);

/// Checked: values.size() == N and j < M_rad (0-based). Throws ParameterError otherwise.
double interp_indexed(const MomentumGrid& grid, std::span<const double> values, std::size_t j);

}  // namespace dse
