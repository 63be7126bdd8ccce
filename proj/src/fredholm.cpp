#include "dse/fredholm.hpp"

#include <cmath>
#include <string>

#include "dse/error.hpp"
#include "dse/fixed_point.hpp"
#include "dse/grid.hpp"
#include "dse/interpolation.hpp"

namespace dse {

std::vector<double> interleaved_points(const QuadratureRule& rule) {
    std::vector<double> x;
    x.reserve(rule.nodes.size() + 1);
    x.push_back(rule.a);
    for (std::size_t j = 1; j < rule.nodes.size(); ++j)
        x.push_back(0.5 * (rule.nodes[j - 1] + rule.nodes[j]));
    x.push_back(rule.b);
    return x;
}

namespace {

// Dense kernel matrix over (x_i, t_j) including the quadrature weight; empty if absent.
using Matrix = std::vector<std::vector<double>>;

Matrix weighted_kernel(const std::vector<double>& x, const QuadratureRule& rule,
                       const FredholmSystem::Fn2& smooth,
                       const std::optional<SingularKernel>& singular) {
    if (!smooth && !singular) return {};
    Matrix m(x.size(), std::vector<double>(rule.nodes.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double t = rule.nodes[j];
            const double kernel =
                singular ? std::pow(std::abs(x[i] - t), -singular->alpha) : smooth(x[i], t);
            m[i][j] = rule.weights[j] * kernel;
        }
    return m;
}

void check_alpha(const std::optional<SingularKernel>& s, const char* which) {
    if (s && !(s->alpha > 0.0 && s->alpha < 1.0))
        throw ParameterError(std::string("solve_generic: ") + which + " alpha must be in (0, 1)");
}

}  // namespace

FredholmSolution solve_generic(const FredholmSystem& sys, const QuadratureRule& rule,
                               std::span<const double> u0, std::span<const double> v0, double tol,
                               int cap) {
    if (!(tol > 0.0)) throw ParameterError("solve_generic: tol must be > 0");
    if (cap < 1) throw ParameterError("solve_generic: cap must be >= 1");
    if (rule.nodes.empty()) throw ParameterError("solve_generic: empty quadrature rule");
    check_alpha(sys.singular1, "singular1");
    check_alpha(sys.singular2, "singular2");

    FredholmSolution sol;
    const bool offset = sys.has_singular();
    sol.x = offset ? interleaved_points(rule) : rule.nodes;
    const std::size_t n = sol.x.size();
    const std::size_t m = rule.nodes.size();
    if (u0.size() != n || v0.size() != n)
        throw ParameterError("solve_generic: initial values need " + std::to_string(n) + " entries");

    std::vector<double> f1(n, 0.0);
    std::vector<double> f2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (sys.f1) f1[i] = sys.f1(sol.x[i]);
        if (sys.f2) f2[i] = sys.f2(sol.x[i]);
    }
    const Matrix k1 = weighted_kernel(sol.x, rule, sys.k1, std::nullopt);
    const Matrix k1bar = weighted_kernel(sol.x, rule, sys.k1bar, sys.singular1);
    const Matrix k2 = weighted_kernel(sol.x, rule, sys.k2, std::nullopt);
    const Matrix k2bar = weighted_kernel(sol.x, rule, sys.k2bar, sys.singular2);

    // Brackets of the quadrature nodes among the representation points, fixed once.
    const std::vector<std::size_t> brackets = offset ? merge_brackets(sol.x, rule.nodes)
                                                     : std::vector<std::size_t>{};

    sol.u.assign(u0.begin(), u0.end());
    sol.v.assign(v0.begin(), v0.end());
    std::vector<double> ut(m);
    std::vector<double> vt(m);

    auto coupling = [](const FredholmSystem::Fn2& F, double u, double v) { return F ? F(u, v) : 0.0; };
    auto accumulate = [&](const Matrix& k, const FredholmSystem::Fn2& F, std::size_t i) {
        if (k.empty() || !F) return 0.0;
        double s = 0.0;
        for (std::size_t j = 0; j < m; ++j) s += k[i][j] * coupling(F, ut[j], vt[j]);
        return s;
    };

    auto step = [&] {
        for (std::size_t j = 0; j < m; ++j) {
            if (offset) {
                ut[j] = detail::linear_segment(sol.x, sol.u, brackets[j], rule.nodes[j]);
                vt[j] = detail::linear_segment(sol.x, sol.v, brackets[j], rule.nodes[j]);
            } else {
                ut[j] = sol.u[j];
                vt[j] = sol.v[j];
            }
        }
        std::vector<double> u_next(n);
        std::vector<double> v_next(n);
        for (std::size_t i = 0; i < n; ++i) {
            u_next[i] = f1[i] + accumulate(k1, sys.F11, i) + accumulate(k1bar, sys.F12, i);
            v_next[i] = f2[i] + accumulate(k2, sys.F21, i) + accumulate(k2bar, sys.F22, i);
        }
        const UpdateNorms norms{max_abs_diff(u_next, sol.u), max_abs_diff(v_next, sol.v)};
        sol.u = std::move(u_next);
        sol.v = std::move(v_next);
        return norms;
    };
    const IterationStatus status =
        successive_approximation(IterationControl{tol, cap}, step, [](int, const UpdateNorms&) {});
    sol.iterations = status.iterations;
    sol.converged = status.converged;
    return sol;
}

}  // namespace dse
