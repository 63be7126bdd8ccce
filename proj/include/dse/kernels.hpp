#pragma once

#include <cmath>
#include <numbers>

#include "dse/error.hpp"

namespace dse {

/// Physical and numerical parameters of one gap-equation solve.
struct ModelParams {
    double D = 0.550;      // interaction strength, GeV^2
    double omega = 0.678;  // interaction width, GeV
    double m0 = 0.0;       // current quark mass, GeV
    double z1 = 1.0;       // renormalization constant
    double xi = 0.005;     // convergence accuracy on max |A_{n+1} - A_n|, max |B_{n+1} - B_n|

    int n_ext = 150;
    int m_rad = 100;
    int m_ang = 32;
    double p2_min = 1e-6;  // GeV^2
    double p2_max = 1e4;   // GeV^2

    int max_iterations = 500;
    double relaxation = 1.0;  // 1 = plain successive substitution

    /// Throws ParameterError naming the first offending field.
    void validate() const;
};

/// Euclidean scalar products for p, q with cos(angle) = z, and k = q - p, t = q + p.
struct Kinematics {
    double p2, q2, z;
    double k2, t2;
    double pq, pt, qt;
    double kp, kq, kt;
};

[[nodiscard]] inline Kinematics kinematics(double p2, double q2, double z) noexcept {
    const double rz = std::sqrt(p2 * q2) * z;
    return Kinematics{
        .p2 = p2,
        .q2 = q2,
        .z = z,
        .k2 = p2 + q2 - 2.0 * rz,
        .t2 = p2 + q2 + 2.0 * rz,
        .pq = rz,
        .pt = p2 + rz,
        .qt = q2 + rz,
        .kp = rz - p2,
        .kq = q2 - rz,
        .kt = q2 - p2,
    };
}

/// Gaussian infrared interaction G(k^2) = 8 pi^2 D / omega^4 * exp(-k^2 / omega^2), GeV^-2.
[[nodiscard]] inline double effective_interaction(double k2, double D, double omega) noexcept {
    const double w2 = omega * omega;
    return 8.0 * std::numbers::pi * std::numbers::pi / (w2 * w2) * D * std::exp(-k2 / w2);
}

[[nodiscard]] inline double effective_interaction(double k2, const ModelParams& params) noexcept {
    return effective_interaction(k2, params.D, params.omega);
}

/// Ball-Chiu coefficients: the average of A and the difference quotients of A and B.
struct FiniteQuotients {
    double sigma_a;  // (A(p^2) + A(q^2)) / 2
    double delta_a;  // (A(q^2) - A(p^2)) / (q^2 - p^2), GeV^-2
    double delta_b;  // (B(q^2) - B(p^2)) / (q^2 - p^2), GeV^-1
};

[[nodiscard]] inline FiniteQuotients finite_quotients(double ap, double aq, double bp, double bq,
                                                      double p2, double q2) {
    if (p2 == q2) throw DegeneratePairError("finite_quotients: p^2 == q^2");
    const double inv = 1.0 / (q2 - p2);
    return {0.5 * (ap + aq), (aq - ap) * inv, (bq - bp) * inv};
}

struct IntegrandTerms {
    double ia1, ia2, ia3;
    double ib1, ib2, ib3;

    [[nodiscard]] double a_sum() const noexcept { return ia1 + ia2 + ia3; }
    [[nodiscard]] double b_sum() const noexcept { return ib1 + ib2 + ib3; }
};

/// Dirac projections of gamma_mu S(q) Gamma^BC_nu(q, p) contracted with the
/// Landau-gauge transverse projector, times the propagator denominator
/// q^2 A^2(q^2) + B^2(q^2). The A-terms are already normalized by 1/p^2.
///
/// No argument validation; the solver's inner loop calls this directly.
[[nodiscard]] inline IntegrandTerms integrand_terms_unchecked(const Kinematics& kin, double aq,
                                                              double bq,
                                                              const FiniteQuotients& fq) noexcept {
    const double inv_k2 = 1.0 / kin.k2;
    const double inv_p2 = 1.0 / kin.p2;
    IntegrandTerms t{};
    t.ia1 = -bq * inv_p2 * (kin.k2 * kin.pt - kin.kp * kin.kt) * inv_k2 * fq.delta_b;
    t.ia2 = -0.5 * aq * inv_p2 *
            (kin.p2 * kin.qt * kin.k2 + kin.q2 * kin.pt * kin.k2 - kin.q2 * kin.kp * kin.kt -
             kin.p2 * kin.kq * kin.kt) *
            inv_k2 * fq.delta_a;
    t.ia3 = aq * inv_p2 * (kin.k2 * kin.pq + 2.0 * kin.kq * kin.kp) * inv_k2 * fq.sigma_a;
    t.ib1 = -aq * (kin.qt * kin.k2 - kin.kq * kin.kt) * inv_k2 * fq.delta_b;
    t.ib2 = 3.0 * bq * fq.sigma_a;
    t.ib3 = bq * (kin.k2 * kin.t2 - kin.kt * kin.kt) * 0.5 * inv_k2 * fq.delta_a;
    return t;
}

/// Checked form: throws KinematicError for k^2 <= 0 and DegeneratePairError for p^2 == q^2.
[[nodiscard]] IntegrandTerms integrand_terms(const Kinematics& kin, double ap, double aq, double bp,
                                             double bq);

/// SU(3) color factor of the one-gluon exchange, (lambda^a/2)(lambda^a/2) = 4/3.
inline constexpr double kColorFactor = 4.0 / 3.0;

/// Radial-angular Jacobian of d^4q/(2 pi)^4 in s = ln q^2 with the sqrt(1 - z^2)
/// weight carried by the angular rule: (1 / (4 pi^3)) * (1/2) * (q^2)^2.
[[nodiscard]] inline double measure_factor(double q2) noexcept {
    return q2 * q2 / (8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi);
}

}  // namespace dse
