#pragma once

// Test-only oracle: Ball-Chiu gap-equation projections evaluated with explicit
// 4x4 Euclidean gamma matrices, independent of the closed-form integrand terms.

#include <array>

namespace oracle {

using Vec4 = std::array<double, 4>;

struct Projections {
    double a;  // Tr[-i gamma.p Sigma] / (4 p^2) * den(q)
    double b;  // Tr[Sigma] / 4 * den(q)
};

// Sigma = T_mu_nu(k) gamma_mu S(q) Gamma_nu(q, p), k = q - p, with
// S(q) = (-i gamma.q Aq + Bq) / den and the Ball-Chiu vertex
// Gamma_nu = gamma_nu (Ap + Aq)/2 + t_nu [ gamma.t dA / 2 - i dB ], t = q + p.
Projections bc_projections(const Vec4& p, const Vec4& q, double ap, double aq, double bp, double bq);

// p along the 4th axis and q at angle acos(z) in the (3,4) plane.
std::array<Vec4, 2> vectors_for(double p2, double q2, double z);

}  // namespace oracle
