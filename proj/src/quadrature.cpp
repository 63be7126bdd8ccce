#include "dse/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dse/error.hpp"

namespace dse {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if (n == 0) return {1.0, 0.0};
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int order, double a, double b) {
    if (order < 1) throw ParameterError("gauss_legendre: order must be >= 1, got " + std::to_string(order));
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw ParameterError("gauss_legendre: need finite a < b");

    const auto n = static_cast<std::size_t>(order);
    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double mid = 0.5 * (b + a);
    const double half = 0.5 * (b - a);
    const std::size_t roots = (n + 1) / 2;
    for (std::size_t i = 0; i < roots; ++i) {
        double z = 0.0;
        double dp = 0.0;
        if (n % 2 == 1 && i == roots - 1) {
            z = 0.0;  // exact centre root for odd orders
            dp = legendre_with_derivative(order, z).second;
        } else {
            z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (order + 0.5));
            for (int it = 0; it < 100; ++it) {
                const auto [p, d] = legendre_with_derivative(order, z);
                const double dz = p / d;
                z -= dz;
                dp = d;
                if (std::abs(dz) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z))
                    break;
            }
            dp = legendre_with_derivative(order, z).second;
        }
        const double w = 2.0 * half / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = mid - half * z;
        rule.nodes[n - 1 - i] = mid + half * z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_chebyshev2(int order) {
    if (order < 1) throw ParameterError("gauss_chebyshev2: order must be >= 1, got " + std::to_string(order));
    const auto n = static_cast<std::size_t>(order);
    QuadratureRule rule;
    rule.a = -1.0;
    rule.b = 1.0;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double step = std::numbers::pi / (order + 1.0);
    for (std::size_t k = 1; k <= n; ++k) {
        // cos(k step) written as a sine so the centre node is exactly zero and the
        // rule is exactly symmetric; index reversed for increasing order.
        const double node = std::sin(0.5 * std::numbers::pi * (order + 1.0 - 2.0 * k) / (order + 1.0));
        const double s = std::sin(k * step);
        rule.nodes[n - k] = node;
        rule.weights[n - k] = step * s * s;
    }
    return rule;
}

}  // namespace dse
