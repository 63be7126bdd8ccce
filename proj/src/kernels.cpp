#include "dse/kernels.hpp"

#include <cmath>
#include <string>

namespace dse {

namespace {

void require(bool ok, const char* field, const std::string& why) {
    if (!ok) throw ParameterError(std::string(field) + ": " + why);
}

}  // namespace

void ModelParams::validate() const {
    require(std::isfinite(D) && D >= 0.0, "D", "must be finite and >= 0");
    require(std::isfinite(omega) && omega > 0.0, "omega", "must be > 0");
    require(std::isfinite(m0) && m0 >= 0.0, "m0", "must be >= 0");
    require(std::isfinite(z1), "z1", "must be finite");
    require(std::isfinite(xi) && xi > 0.0, "xi", "must be > 0");
    require(n_ext >= 2, "N", "must be >= 2");
    require(m_rad >= 2, "M-rad", "must be >= 2");
    require(m_ang >= 1, "M-ang", "must be >= 1");
    require(std::isfinite(p2_min) && p2_min > 0.0, "p2-min", "must be > 0");
    require(std::isfinite(p2_max) && p2_max > p2_min, "p2-max", "must be > p2-min");
    require(max_iterations >= 1, "max-iter", "must be >= 1");
    require(relaxation > 0.0 && relaxation <= 1.0, "relax", "must be in (0, 1]");
}

IntegrandTerms integrand_terms(const Kinematics& kin, double ap, double aq, double bp, double bq) {
    if (!(kin.k2 > 0.0)) throw KinematicError("integrand_terms: k^2 <= 0");
    const FiniteQuotients fq = finite_quotients(ap, aq, bp, bq, kin.p2, kin.q2);
    return integrand_terms_unchecked(kin, aq, bq, fq);
}

}  // namespace dse
