#include "gqd/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gqd {

double entropy_h(double x) {
    if (x < 0.5 - phys_tol) {
        std::ostringstream msg;
        msg << "entropy_h: argument " << x << " below the vacuum floor 1/2";
        throw std::domain_error(msg.str());
    }
    x = std::max(x, 0.5);
    const double xp = x + 0.5;
    const double xm = x - 0.5;
    double h = xp * std::log(xp);
    // For xm < 1e-12 the term xm*ln(xm) is below 3e-11 and is dropped, which
    // is its exact limit at the boundary.
    if (xm >= 1e-12) {
        h -= xm * std::log(xm);
    }
    return h;
}

SymplecticData symplectic_data(const TwoModeCovariance& cov) {
    SymplecticData sd{};
    sd.i1 = cov.a * cov.a;
    sd.i2 = cov.b * cov.b;
    sd.i3 = cov.c1 * cov.c2;
    sd.i4 = (cov.a * cov.b - cov.c1 * cov.c1) * (cov.a * cov.b - cov.c2 * cov.c2);
    sd.delta = sd.i1 + sd.i2 + 2.0 * sd.i3;

    double disc = sd.delta * sd.delta - 4.0 * sd.i4;
    // Roundoff in disc scales with delta^2, so the negativity test must be
    // relative; symmetric states sit exactly on disc = 0.
    const double scale = std::max(1.0, sd.delta * sd.delta);
    if (disc < -phys_tol * scale) {
        std::ostringstream msg;
        msg << "symplectic_data: delta^2 - 4 det(sigma) = " << disc
            << " is negative beyond tolerance; covariance is not a valid "
               "standard form";
        throw unphysical_error(msg.str());
    }
    disc = std::max(disc, 0.0);
    const double root = std::sqrt(disc);

    // d_minus from the product of the eigenvalues: 2 i4 / (delta + root) does
    // not cancel when the state is nearly pure (d_minus near 1/2 with large
    // delta) nor when the spectrum is nearly degenerate.
    const double denom = sd.delta + root;
    double dm2 = denom > 0.0 ? 2.0 * sd.i4 / denom : 0.0;
    dm2 = std::max(dm2, 0.0);
    sd.d_minus = std::sqrt(dm2);
    sd.d_plus = std::sqrt(denom / 2.0);
    return sd;
}

PhysicalityReport physicality_check(const TwoModeCovariance& cov) {
    PhysicalityReport rep{true, 0.0, {}};
    std::ostringstream msg;

    if (!(cov.a >= 0.5 - phys_tol)) {
        rep.physical = false;
        msg << "a = " << cov.a << " < 1/2; ";
    }
    if (!(cov.b >= 0.5 - phys_tol)) {
        rep.physical = false;
        msg << "b = " << cov.b << " < 1/2; ";
    }
    try {
        const SymplecticData sd = symplectic_data(cov);
        rep.d_minus = sd.d_minus;
        if (!(sd.d_minus >= 0.5 - phys_tol)) {
            rep.physical = false;
            msg << "d_minus = " << sd.d_minus
                << " < 1/2 (uncertainty principle violated); ";
        }
    } catch (const unphysical_error& e) {
        rep.physical = false;
        msg << e.what() << "; ";
    }

    if (!rep.physical) {
        rep.diagnostic = msg.str();
    }
    return rep;
}

namespace {

// Clamp an entropy difference that must be >= 0: values within phys_tol of 0
// are rounded to exactly 0; anything more negative signals a broken input.
double clamp_nonnegative(double value, const char* what) {
    if (std::abs(value) <= phys_tol) {
        return 0.0;
    }
    if (value < 0.0) {
        std::ostringstream msg;
        msg << what << ": value " << value
            << " negative beyond tolerance on supposedly physical input";
        throw unphysical_error(msg.str());
    }
    return value;
}

}  // namespace

double gaussian_discord(const TwoModeCovariance& cov, MeasuredMode measured) {
    const PhysicalityReport rep = physicality_check(cov);
    if (!rep.physical) {
        throw unphysical_error("gaussian_discord: " + rep.diagnostic);
    }
    const SymplecticData sd = symplectic_data(cov);

    // Heterodyning the measured mode is optimal on this family; the argument
    // below is sqrt(det) of the conditional covariance of the kept mode.
    const double kept = (measured == MeasuredMode::mode2) ? cov.a : cov.b;
    const double meas = (measured == MeasuredMode::mode2) ? cov.b : cov.a;
    const double cond = (kept + 2.0 * kept * meas + 2.0 * sd.i3) / (1.0 + 2.0 * meas);

    const double d = entropy_h(meas) - entropy_h(sd.d_minus) -
                     entropy_h(sd.d_plus) + entropy_h(cond);
    return clamp_nonnegative(d, "gaussian_discord");
}

double mutual_information(const TwoModeCovariance& cov) {
    const PhysicalityReport rep = physicality_check(cov);
    if (!rep.physical) {
        throw unphysical_error("mutual_information: " + rep.diagnostic);
    }
    const SymplecticData sd = symplectic_data(cov);
    const double mi = entropy_h(cov.a) + entropy_h(cov.b) -
                      entropy_h(sd.d_minus) - entropy_h(sd.d_plus);
    return clamp_nonnegative(mi, "mutual_information");
}

EntropyReport entropy_report(const TwoModeCovariance& cov) {
    const PhysicalityReport rep = physicality_check(cov);
    if (!rep.physical) {
        throw unphysical_error("entropy_report: " + rep.diagnostic);
    }
    const SymplecticData sd = symplectic_data(cov);
    EntropyReport er{};
    er.s1 = entropy_h(cov.a);
    er.s2 = entropy_h(cov.b);
    er.s12 = entropy_h(sd.d_minus) + entropy_h(sd.d_plus);
    er.mutual_information = clamp_nonnegative(er.s1 + er.s2 - er.s12,
                                              "entropy_report");
    er.discord_left = gaussian_discord(cov, MeasuredMode::mode2);
    er.discord_right = gaussian_discord(cov, MeasuredMode::mode1);
    return er;
}

}  // namespace gqd
