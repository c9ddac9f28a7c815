#pragma once

#include <complex>

#include "gqd/covariance.hpp"

// Two-mode squeezed thermal states (STS): two thermal modes with mean photon
// numbers n1, n2 coupled by a two-mode squeezer of strength r >= 0.

namespace gqd {

struct StsParams {
    double r;   // squeezing parameter, >= 0
    double n1;  // mean thermal photons of input mode 1, >= 0
    double n2;  // mean thermal photons of input mode 2, >= 0

    // n_r = sinh^2(r), the number of photons generated by the squeezer.
    double n_r() const;
};

// Throws std::invalid_argument when a parameter is negative or not finite.
void validate(const StsParams& p);

// A point (lambda1, lambda2) in the two-mode complex phase-space of the
// symmetric-ordering characteristic function.
struct CharFnQuery {
    std::complex<double> lambda1;
    std::complex<double> lambda2;
};

// Standard-form covariance of the STS:
//   a  = (1 + n_r) n1 + n_r n2 + n_r + 1/2
//   b  = n_r n1 + (1 + n_r) n2 + n_r + 1/2
//   c1 = -(1 + n1 + n2) sqrt(n_r (1 + n_r)) = -c2
TwoModeCovariance sts_covariance(const StsParams& p);

// Symmetric-ordering characteristic function of the STS, evaluated directly
// from the Bogoliubov transform of the squeezer:
//   chi = exp[-(n1+1/2)|cosh(r) l1 - sinh(r) l2*|^2]
//       * exp[-(n2+1/2)|cosh(r) l2 - sinh(r) l1*|^2]
// The value is real and positive; the return type keeps the general
// characteristic-function signature.
std::complex<double> characteristic_function(const StsParams& p,
                                             const CharFnQuery& q);

// Gaussian characteristic function chi = exp(-Lambda^T sigma Lambda / 2) of a
// zero-mean state with standard-form covariance sigma, where the real vector
// Lambda = (alpha1, beta1, alpha2, beta2) is related to the complex arguments
// by lambda_j = (alpha_j + i beta_j) / sqrt(2). Provided as the bridge between
// the covariance picture and characteristic_function; the two agree pointwise
// for every STS.
std::complex<double> chi_from_covariance(const TwoModeCovariance& cov,
                                         const CharFnQuery& q);

struct SeparabilityReport {
    bool separable;  // true only when strictly inside the separable region
    bool boundary;   // lhs == rhs within roundoff; reported, never "separable"
    double lhs;      // n1 n2 / (1 + n1 + n2)
    double rhs;      // n_r
};

// Sufficient separability criterion for the STS family: the state is
// separable when n1 n2 / (1 + n1 + n2) > n_r (strict). The test is
// one-directional: `separable == false` means "not shown separable by this
// criterion". Values within relative roundoff of the boundary set `boundary`
// and are not claimed separable.
SeparabilityReport separability(const StsParams& p);

// Convenience wrapper: separability(p).separable.
bool is_separable(const StsParams& p);

}  // namespace gqd
