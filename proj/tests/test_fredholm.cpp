#include <cmath>
#include <vector>

#include "doctest.h"
#include "dse/error.hpp"
#include "dse/fredholm.hpp"

namespace {

double max_error(const std::vector<double>& x, const std::vector<double>& y, double (*exact)(double)) {
    double e = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(y[i] - exact(x[i])));
    return e;
}

dse::FredholmSystem quadratic_single() {
    dse::FredholmSystem s;
    s.f1 = [](double x) { return 0.75 * x; };
    s.k1 = [](double x, double t) { return x * t; };
    s.F11 = [](double u, double) { return u * u; };
    return s;
}

dse::FredholmSystem coupled() {
    dse::FredholmSystem s;
    s.f1 = [](double x) { return 17.0 * x / 24.0; };
    s.f2 = [](double x) { return 11.0 * x * x / 15.0; };
    s.k1 = [](double x, double t) { return 0.5 * x * t; };
    s.k1bar = [](double x, double) { return 0.5 * x; };
    s.k2 = [](double x, double t) { return 0.5 * x * x * t; };
    s.k2bar = [](double x, double) { return x * x / 3.0; };
    s.F11 = [](double u, double) { return u * u; };
    s.F12 = [](double, double v) { return v; };
    s.F21 = [](double u, double v) { return u * v; };
    s.F22 = [](double u, double) { return u; };
    return s;
}

// u = f1 + int_0^1 |x-t|^(-alpha) u^2 / 8 dt with solution u = 1.
dse::FredholmSystem singular_system(double alpha) {
    dse::FredholmSystem s;
    s.f1 = [alpha](double x) {
        return 1.0 - (std::pow(x, 1.0 - alpha) + std::pow(1.0 - x, 1.0 - alpha)) / (8.0 * (1.0 - alpha));
    };
    s.F12 = [](double u, double) { return u * u / 8.0; };
    s.singular1 = dse::SingularKernel{alpha};
    return s;
}

double identity(double x) { return x; }
double square(double x) { return x * x; }
double one(double) { return 1.0; }
double zero(double) { return 0.0; }

}  // namespace

TEST_CASE("quadratic Fredholm equation recovers u = x") {
    const auto rule = dse::gauss_legendre(64, 0.0, 1.0);
    const std::vector<double> z(64, 0.0);
    const auto sol = dse::solve_generic(quadratic_single(), rule, z, z, 1e-14, 200);
    REQUIRE(sol.converged);
    CHECK(sol.x == rule.nodes);
    CHECK(max_error(sol.x, sol.u, identity) < 1e-8);
    CHECK(max_error(sol.x, sol.v, zero) == 0.0);
}

TEST_CASE("coupled system recovers u = x, v = x^2") {
    const auto rule = dse::gauss_legendre(32, 0.0, 1.0);
    const std::vector<double> z(32, 0.0);
    const auto sol = dse::solve_generic(coupled(), rule, z, z, 1e-13, 500);
    REQUIRE(sol.converged);
    CHECK(max_error(sol.x, sol.u, identity) < 1e-6);
    CHECK(max_error(sol.x, sol.v, square) < 1e-6);
}

TEST_CASE("zero kernels converge after one iteration") {
    dse::FredholmSystem s;
    s.f1 = [](double x) { return std::sin(x); };
    s.f2 = [](double x) { return std::cos(x); };
    const auto rule = dse::gauss_legendre(10, 0.0, 2.0);
    const std::vector<double> u0(10, 0.3), v0(10, -0.2);
    const auto sol = dse::solve_generic(s, rule, u0, v0, 1e-12, 10);
    CHECK(sol.converged);
    CHECK(sol.iterations <= 2);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(sol.u[i] == std::sin(sol.x[i]));
        CHECK(sol.v[i] == std::cos(sol.x[i]));
    }
}

TEST_CASE("error is non-increasing under refinement") {
    double previous = 1.0;
    for (int n : {2, 4, 8, 16, 32}) {
        const auto rule = dse::gauss_legendre(n, 0.0, 1.0);
        const std::vector<double> z(n, 0.0);
        const auto sol = dse::solve_generic(coupled(), rule, z, z, 1e-14, 1000);
        REQUIRE(sol.converged);
        const double e = std::max(max_error(sol.x, sol.u, identity), max_error(sol.x, sol.v, square));
        CAPTURE(n);
        CHECK(e <= std::max(previous, 1e-12));
        previous = e;
    }
}

TEST_CASE("interleaved points separate the nodes") {
    const auto rule = dse::gauss_legendre(7, -1.0, 3.0);
    const auto x = dse::interleaved_points(rule);
    REQUIRE(x.size() == 8);
    CHECK(x.front() == -1.0);
    CHECK(x.back() == 3.0);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        CHECK(x[j] < rule.nodes[j]);
        CHECK(rule.nodes[j] < x[j + 1]);
    }
}

TEST_CASE("weakly singular kernel converges towards the exact solution") {
    for (double alpha : {0.25, 0.5}) {
        double previous = 1.0;
        for (int n : {8, 32, 128}) {
            const auto rule = dse::gauss_legendre(n, 0.0, 1.0);
            const std::vector<double> z(n + 1, 0.0);
            const auto sol = dse::solve_generic(singular_system(alpha), rule, z, z, 1e-13, 500);
            REQUIRE(sol.converged);
            REQUIRE(sol.x.size() == static_cast<std::size_t>(n) + 1);
            const double e = max_error(sol.x, sol.u, one);
            CAPTURE(alpha);
            CAPTURE(n);
            CHECK(std::isfinite(e));
            CHECK(e < previous);
            previous = e;
        }
        CHECK(previous < 0.05);
    }
}

TEST_CASE("solve_generic rejects bad input") {
    const auto rule = dse::gauss_legendre(4, 0.0, 1.0);
    const std::vector<double> z4(4, 0.0), z5(5, 0.0);
    CHECK_THROWS_AS(dse::solve_generic(quadratic_single(), rule, z5, z5, 1e-10, 10), dse::ParameterError);
    CHECK_THROWS_AS(dse::solve_generic(quadratic_single(), rule, z4, z4, 0.0, 10), dse::ParameterError);
    CHECK_THROWS_AS(dse::solve_generic(quadratic_single(), rule, z4, z4, 1e-10, 0), dse::ParameterError);
    CHECK_THROWS_AS(dse::solve_generic(singular_system(0.5), rule, z4, z4, 1e-10, 10), dse::ParameterError);
    CHECK_THROWS_AS(dse::solve_generic(singular_system(1.0), rule, z5, z5, 1e-10, 10), dse::ParameterError);
    const auto ok = dse::solve_generic(singular_system(0.5), rule, z5, z5, 1e-10, 200);
    CHECK(ok.converged);
}

TEST_CASE("iteration cap is reported") {
    const auto rule = dse::gauss_legendre(16, 0.0, 1.0);
    const std::vector<double> z(16, 0.0);
    const auto sol = dse::solve_generic(coupled(), rule, z, z, 1e-15, 3);
    CHECK_FALSE(sol.converged);
    CHECK(sol.iterations == 3);
}
