#pragma once

#include <stdexcept>
#include <string>

// Core quantities of two-mode Gaussian states given in standard form.
//
// Convention used throughout the library: hbar = 1 and the vacuum covariance
// matrix is (1/2) * identity. A two-mode standard form is
//
//     sigma = [ a 0  c1 0 ]
//             [ 0 a  0  c2]
//             [ c1 0 b  0 ]
//             [ 0 c2 0  b ]
//
// and all entropic quantities are returned in nats.

namespace gqd {

// Shared numerical tolerance for physicality checks and clamping.
inline constexpr double phys_tol = 1e-9;

struct TwoModeCovariance {
    double a;
    double b;
    double c1;
    double c2;
};

// Symplectic invariants and the symplectic spectrum {d_minus, d_plus}.
struct SymplecticData {
    double i1;       // a^2
    double i2;       // b^2
    double i3;       // c1*c2
    double i4;       // det(sigma)
    double delta;    // i1 + i2 + 2*i3
    double d_minus;  // smaller symplectic eigenvalue
    double d_plus;   // larger symplectic eigenvalue
};

// Which mode the (generalised) measurement acts on. The default throughout
// the library is mode2, i.e. quantum discord with measurements on mode 2.
enum class MeasuredMode { mode1 = 1, mode2 = 2 };

struct PhysicalityReport {
    bool physical;
    double d_minus;          // 0 when the symplectic spectrum is undefined
    std::string diagnostic;  // empty when physical
};

struct EntropyReport {
    double s1;                  // von Neumann entropy of mode 1
    double s2;                  // von Neumann entropy of mode 2
    double s12;                 // joint von Neumann entropy
    double mutual_information;  // s1 + s2 - s12
    double discord_left;        // measurements on mode 2
    double discord_right;       // measurements on mode 1
};

// Thrown when a covariance matrix violates the uncertainty principle (or is
// numerically inconsistent) beyond phys_tol.
struct unphysical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// h(x) = (x + 1/2) ln(x + 1/2) - (x - 1/2) ln(x - 1/2), the von Neumann
// entropy of a single mode with symplectic eigenvalue x. Strictly increasing,
// h(1/2) = 0. Throws std::domain_error for x < 1/2 - phys_tol; arguments
// within the tolerance window are clamped to the boundary.
double entropy_h(double x);

// Invariants and symplectic eigenvalues of a standard-form covariance.
// d_minus is evaluated through the product form 2*i4 / (delta + sqrt(...)) so
// that nearly pure states do not lose precision to cancellation. Throws
// unphysical_error when delta^2 - 4*i4 is negative beyond roundoff scale.
SymplecticData symplectic_data(const TwoModeCovariance& cov);

// Checks a >= 1/2, b >= 1/2 and d_minus >= 1/2 (all modulo phys_tol).
// Never throws; failures are described in the diagnostic string.
PhysicalityReport physicality_check(const TwoModeCovariance& cov);

// Gaussian quantum discord of the standard-form state, with the optimal
// Gaussian measurement applied to `measured`. Result is in nats, >= 0, and
// clamped to exactly 0 when within phys_tol of 0. Throws unphysical_error on
// unphysical input and propagates std::domain_error from entropy_h.
double gaussian_discord(const TwoModeCovariance& cov,
                        MeasuredMode measured = MeasuredMode::mode2);

// Mutual information I = h(sqrt(i1)) + h(sqrt(i2)) - h(d_minus) - h(d_plus).
double mutual_information(const TwoModeCovariance& cov);

// All entropic quantities of the state in one pass.
EntropyReport entropy_report(const TwoModeCovariance& cov);

}  // namespace gqd
