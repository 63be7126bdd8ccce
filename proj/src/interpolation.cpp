#include "dse/interpolation.hpp"

#include <cmath>
#include <string>

namespace dse {

std::string_view to_string(InterpStrategy s) noexcept {
    switch (s) {
        case InterpStrategy::SearchBased: return "search";
        case InterpStrategy::PrecomputedIndex: return "indexed";
    }
    return "unknown";
}

double interp_search(std::span<const double> knots, std::span<const double> values, double query) {
    if (knots.size() < 2) throw ParameterError("interp_search: need at least 2 knots");
    if (values.size() != knots.size())
        throw ParameterError("interp_search: " + std::to_string(values.size()) + " values for " +
                             std::to_string(knots.size()) + " knots");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i - 1] < knots[i]))
            throw ParameterError("interp_search: knots not strictly increasing at " + std::to_string(i));
    if (std::isnan(query)) throw ParameterError("interp_search: query is NaN");
    return interp_search_unchecked(knots, values, query);
}

double interp_indexed(const MomentumGrid& grid, std::span<const double> values, std::size_t j) {
    if (values.size() != grid.n_ext())
        throw ParameterError("interp_indexed: " + std::to_string(values.size()) + " values for " +
                             std::to_string(grid.n_ext()) + " knots");
    if (j >= grid.n_rad() || grid.bracket_idx.size() != grid.n_rad())
        throw ParameterError("interp_indexed: internal index " + std::to_string(j) + " out of range");
    return interp_indexed_unchecked(grid, values, j);
}

}  // namespace dse
