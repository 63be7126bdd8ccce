#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dse/quadrature.hpp"

namespace dse {

/// Kernel |x - t|^(-alpha) with alpha in (0, 1).
struct SingularKernel {
    double alpha = 0.5;
};

/// Two coupled nonlinear Fredholm equations of the second kind on (a, b):
///
///   u(x) = f1(x) + int [ K1(x,t) F11(u,v) + Kbar1(x,t) F12(u,v) ] dt
///   v(x) = f2(x) + int [ K2(x,t) F21(u,v) + Kbar2(x,t) F22(u,v) ] dt
///
/// Kbar1/Kbar2 are smooth kernels (k1bar/k2bar) unless singular1/singular2 is set,
/// in which case they are |x - t|^(-alpha). Empty std::function kernels are zero.
struct FredholmSystem {
    using Fn1 = std::function<double(double)>;
    using Fn2 = std::function<double(double, double)>;

    Fn1 f1, f2;
    Fn2 k1, k1bar, k2, k2bar;
    Fn2 F11, F12, F21, F22;
    std::optional<SingularKernel> singular1, singular2;

    [[nodiscard]] bool has_singular() const noexcept { return singular1 || singular2; }
};

struct FredholmSolution {
    std::vector<double> x;  // where u, v are represented
    std::vector<double> u;
    std::vector<double> v;
    int iterations = 0;
    bool converged = false;
};

/// External points for a system with singular kernels: a, the midpoints of
/// consecutive quadrature nodes, and b. Node j lies strictly inside (x_j, x_{j+1}).
std::vector<double> interleaved_points(const QuadratureRule& rule);

/// Successive approximation of the discretized system.
///
/// Smooth systems are solved in Nyström form on the quadrature nodes. Systems with a
/// singular kernel are solved on interleaved_points(rule); u, v at the quadrature
/// nodes are linear interpolants with brackets fixed in advance, so x never meets t.
/// u0/v0 are initial values at the representation points (size of rule or rule + 1).
/// Throws ParameterError for mismatched sizes, tol <= 0 or alpha outside (0, 1).
FredholmSolution solve_generic(const FredholmSystem& sys, const QuadratureRule& rule,
                               std::span<const double> u0, std::span<const double> v0, double tol,
                               int cap);

}  // namespace dse
