#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dse/error.hpp"
#include "dse/quadrature.hpp"

using dse::gauss_chebyshev2;
using dse::gauss_legendre;

namespace {

double monomial_integral(int k, double a, double b) {
    return (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
}

}  // namespace

TEST_CASE("two-point Gauss-Legendre rule") {
    const auto r = gauss_legendre(2, -1.0, 1.0);
    REQUIRE(r.order() == 2);
    CHECK(r.nodes[0] == doctest::Approx(-0.5773502691896258).epsilon(1e-15));
    CHECK(r.nodes[1] == doctest::Approx(0.5773502691896258).epsilon(1e-15));
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("one-point rule is the midpoint rule") {
    const auto r = gauss_legendre(1, 0.0, 2.0);
    REQUIRE(r.order() == 1);
    CHECK(r.nodes[0] == 1.0);
    CHECK(r.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("five-point rule integrates x^8 exactly") {
    const auto r = gauss_legendre(5, -1.0, 1.0);
    const double got = r.integrate([](double x) { return std::pow(x, 8); });
    CHECK(std::abs(got - 2.0 / 9.0) < 1e-12);
}

TEST_CASE("Gauss-Legendre structural invariants") {
    for (int order : {1, 2, 3, 7, 20, 64, 100, 150, 300}) {
        for (auto [a, b] : {std::pair{-1.0, 1.0}, std::pair{0.0, 1.0}, std::pair{-13.8, 9.2}}) {
            const auto r = gauss_legendre(order, a, b);
            CAPTURE(order);
            double sum = 0.0;
            for (std::size_t i = 0; i < r.order(); ++i) {
                CHECK(r.nodes[i] > a);
                CHECK(r.nodes[i] < b);
                CHECK(r.weights[i] > 0.0);
                if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
                sum += r.weights[i];
            }
            CHECK(std::abs(sum - (b - a)) <= 1e-12 * (b - a));
        }
    }
}

TEST_CASE("nodes are Legendre roots to 1e-14") {
    for (int n : {4, 17, 100}) {
        const auto r = gauss_legendre(n, -1.0, 1.0);
        for (double x : r.nodes) {
            // Newton correction P_n / P_n' at the node.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            CHECK(std::abs(p1 / dp) <= 1e-14);
        }
    }
}

TEST_CASE("random polynomials up to degree 2M-1 are integrated exactly") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> order_dist(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = order_dist(rng);
        const double a = -1.5 + coef(rng);
        const double b = a + 0.5 + std::abs(coef(rng)) * 2.0;
        const auto r = gauss_legendre(m, a, b);
        std::vector<double> c(2 * m);
        for (auto& x : c) x = coef(rng);
        auto poly = [&](double x) {
            double s = 0.0;
            for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
            return s;
        };
        double exact = 0.0, scale = 0.0;
        for (int k = 0; k < 2 * m; ++k) {
            exact += c[k] * monomial_integral(k, a, b);
            scale += std::abs(c[k]) * (std::pow(std::max(std::abs(a), std::abs(b)), k) * (b - a));
        }
        CAPTURE(m);
        CHECK(std::abs(r.integrate(poly) - exact) <= 1e-10 * scale);
    }
}

TEST_CASE("invalid Gauss-Legendre arguments") {
    CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), dse::ParameterError);
    CHECK_THROWS_AS(gauss_legendre(3, 1.0, 1.0), dse::ParameterError);
    CHECK_THROWS_AS(gauss_legendre(3, 2.0, 1.0), dse::ParameterError);
}

TEST_CASE("Gauss-Chebyshev second kind") {
    SUBCASE("order 1") {
        const auto r = gauss_chebyshev2(1);
        REQUIRE(r.order() == 1);
        CHECK(r.nodes[0] == 0.0);
        CHECK(r.weights[0] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    }
    SUBCASE("order 32 moments") {
        const auto r = gauss_chebyshev2(32);
        CHECK(std::abs(r.integrate([](double) { return 1.0; }) - std::numbers::pi / 2) < 1e-12);
        CHECK(std::abs(r.integrate([](double z) { return z; })) < 1e-14);
        // int z^2 sqrt(1 - z^2) dz = pi / 8
        CHECK(std::abs(r.integrate([](double z) { return z * z; }) - std::numbers::pi / 8) < 1e-12);
        for (std::size_t i = 0; i < r.order(); ++i) {
            CHECK(std::abs(r.nodes[i]) < 1.0);
            CHECK(r.weights[i] > 0.0);
            if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
            CHECK(r.nodes[i] == -r.nodes[r.order() - 1 - i]);
        }
    }
    CHECK_THROWS_AS(gauss_chebyshev2(0), dse::ParameterError);
}
