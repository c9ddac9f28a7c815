#include "gqd/states.hpp"

#include <cmath>
#include <sstream>

namespace gqd {

double StsParams::n_r() const {
    const double s = std::sinh(r);
    return s * s;
}

void validate(const StsParams& p) {
    // Negated comparisons so that NaN fails validation too.
    if (!(p.r >= 0.0) || !std::isfinite(p.r)) {
        std::ostringstream msg;
        msg << "StsParams: squeezing r = " << p.r << " must be finite and >= 0";
        throw std::invalid_argument(msg.str());
    }
    if (!(p.n1 >= 0.0) || !std::isfinite(p.n1) || !(p.n2 >= 0.0) ||
        !std::isfinite(p.n2)) {
        std::ostringstream msg;
        msg << "StsParams: occupations n1 = " << p.n1 << ", n2 = " << p.n2
            << " must be finite and >= 0";
        throw std::invalid_argument(msg.str());
    }
}

TwoModeCovariance sts_covariance(const StsParams& p) {
    validate(p);
    const double nr = p.n_r();
    // sqrt(n_r (1 + n_r)) = sinh(r) cosh(r) exactly for r >= 0.
    const double sc = std::sinh(p.r) * std::cosh(p.r);
    TwoModeCovariance cov{};
    cov.a = (1.0 + nr) * p.n1 + nr * p.n2 + nr + 0.5;
    cov.b = nr * p.n1 + (1.0 + nr) * p.n2 + nr + 0.5;
    cov.c1 = -(1.0 + p.n1 + p.n2) * sc;
    cov.c2 = -cov.c1;
    return cov;
}

std::complex<double> characteristic_function(const StsParams& p,
                                             const CharFnQuery& q) {
    validate(p);
    const double ch = std::cosh(p.r);
    const double sh = std::sinh(p.r);
    const std::complex<double> t1 = ch * q.lambda1 - sh * std::conj(q.lambda2);
    const std::complex<double> t2 = ch * q.lambda2 - sh * std::conj(q.lambda1);
    const double expo =
        -(p.n1 + 0.5) * std::norm(t1) - (p.n2 + 0.5) * std::norm(t2);
    return {std::exp(expo), 0.0};
}

std::complex<double> chi_from_covariance(const TwoModeCovariance& cov,
                                         const CharFnQuery& q) {
    // lambda_j = (alpha_j + i beta_j) / sqrt(2); the sqrt(2) keeps the
    // exponent quadratic form consistent with the vacuum variance 1/2.
    const double rt2 = std::sqrt(2.0);
    const double a1 = rt2 * q.lambda1.real();
    const double b1 = rt2 * q.lambda1.imag();
    const double a2 = rt2 * q.lambda2.real();
    const double b2 = rt2 * q.lambda2.imag();
    const double quad = cov.a * (a1 * a1 + b1 * b1) +
                        cov.b * (a2 * a2 + b2 * b2) +
                        2.0 * cov.c1 * a1 * a2 + 2.0 * cov.c2 * b1 * b2;
    return {std::exp(-0.5 * quad), 0.0};
}

SeparabilityReport separability(const StsParams& p) {
    validate(p);
    SeparabilityReport rep{};
    rep.lhs = p.n1 * p.n2 / (1.0 + p.n1 + p.n2);
    rep.rhs = p.n_r();
    const double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
    rep.boundary = std::abs(rep.lhs - rep.rhs) <= 1e-12 * scale;
    rep.separable = !rep.boundary && rep.lhs > rep.rhs;
    return rep;
}

bool is_separable(const StsParams& p) { return separability(p).separable; }

}  // namespace gqd
