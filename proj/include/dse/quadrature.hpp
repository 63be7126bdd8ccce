#pragma once

#include <cstddef>
#include <vector>

namespace dse {

struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // positive
    double a = 0.0;
    double b = 0.0;

    [[nodiscard]] std::size_t order() const noexcept { return nodes.size(); }

    // Sum of w_i * f(x_i).
    template <class F>
    [[nodiscard]] double integrate(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// Gauss-Legendre rule of the given order on [a, b]. Nodes are the Legendre
/// roots refined by Newton iteration, mapped affinely onto the interval.
/// Throws ParameterError for order < 1 or a >= b.
QuadratureRule gauss_legendre(int order, double a, double b);

/// Gauss-Chebyshev rule of the second kind on (-1, 1): integrates f(z) sqrt(1 - z^2).
/// Nodes are returned in increasing order.
QuadratureRule gauss_chebyshev2(int order);

}  // namespace dse
