#pragma once

#include <stdexcept>
#include <vector>

#include "gqd/covariance.hpp"
#include "gqd/linalg.hpp"
#include "gqd/states.hpp"

// Brute-force Fock-space oracle. States are built as truncated density
// matrices, evolved with explicit (dilated) unitaries and diagonalised
// exactly, providing an independent check of every covariance-level result.
//
// Every state handled here commutes with the photon-number difference
// n1 - n2: the two-mode squeezer creates photons in pairs, thermal inputs are
// diagonal, and the beam-splitter dilation of the lossy channel shifts n2 and
// the environment count together. The density matrix is therefore block
// diagonal over k = n1 - n2, and each block is real symmetric in the Fock
// basis. TruncatedState stores exactly these blocks.

namespace gqd {

// Thrown when a requested truncation cannot represent the state to the
// requested accuracy budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TruncatedState {
public:
    // Zero state on the space with n1, n2 < cutoff.
    explicit TruncatedState(int cutoff);

    int cutoff() const { return cutoff_; }

    // Block k = n1 - n2, k in (-cutoff, cutoff); square of size cutoff - |k|.
    Matrix& block(int k) { return blocks_[static_cast<size_t>(k + cutoff_ - 1)]; }
    const Matrix& block(int k) const { return blocks_[static_cast<size_t>(k + cutoff_ - 1)]; }

    static int block_size(int cutoff, int k);
    // Photon numbers of basis index i inside block k.
    static int n1_of(int k, int i) { return i + (k > 0 ? k : 0); }
    static int n2_of(int k, int i) { return i + (k < 0 ? -k : 0); }

    // <n1 n2| rho |n1p n2p>; exactly 0 across blocks (n1 - n2 != n1p - n2p).
    double element(int n1, int n2, int n1p, int n2p) const;

    double trace() const;
    double trace_deficit() const { return 1.0 - trace(); }
    // Largest asymmetry |rho_ij - rho_ji| within the stored blocks.
    double hermiticity_error() const;

    // Diagonal of the reduced state of `mode` (1 or 2), indexed by photon
    // number. Both marginals are exactly diagonal in the Fock basis because
    // of the block structure.
    std::vector<double> mode_populations(int mode) const;

    // Spectrum of the full density matrix (descending), via per-block Jacobi.
    std::vector<double> eigenvalues() const;
    double min_eigenvalue() const;

private:
    int cutoff_;
    std::vector<Matrix> blocks_;
};

// Truncation heuristic max(20, ceil(8 (max(n1,n2) + 1) e^{2r})), sized for
// small occupations (n1, n2 <= 2, r <= 1.2).
int recommended_cutoff(const StsParams& p);

// Probability N^n / (1 + N)^{n+1} of n photons in a thermal state of mean N.
double thermal_weight(double mean_n, int n);
// Tail mass sum_{n >= cutoff} = (N / (1 + N))^cutoff.
double thermal_tail(double mean_n, int cutoff);
// Closed-form entropy (1 + N) ln(1 + N) - N ln N in nats.
double thermal_entropy(double mean_n);

// exp(G) restricted to block k, where G is the two-mode squeezer generator
// r (a1^+ a2^+ - a1 a2); exactly orthogonal up to the expm tolerance.
Matrix two_mode_squeezer_block(double r, int k, int size);

// rho = U (thermal(n1) x thermal(n2)) U^+, truncated at `cutoff`. Before
// building, the thermal tails of the squeezed marginals are checked against
// `budget`; budget_error (with a suggested cutoff) is thrown when the
// truncation cannot hold the requested accuracy.
TruncatedState build_sts_fock(const StsParams& p, int cutoff,
                              double budget = 1e-6);

// Lossy channel on mode 2 via its beam-splitter dilation: mode 2 is mixed
// with a thermal environment of mean n_env (truncated at env_cutoff) through
// a beam splitter of transmissivity eta, then the environment is traced out.
// Output photon numbers above the state cutoff are dropped; together with the
// environment tail (checked against `budget`) this is the only source of
// trace deficit.
TruncatedState lossy_channel_fock(const TruncatedState& s, double eta,
                                  double n_env, int env_cutoff,
                                  double budget = 1e-6);

// Joint von Neumann entropy -sum lambda ln lambda (eigenvalues below 1e-14
// are dropped).
double entropy_fock(const TruncatedState& s);

// Entropy of the reduced state of `mode` (1 or 2).
double mode_entropy_fock(const TruncatedState& s, int mode);

struct FockMoments {
    double mean_n1;
    double mean_n2;
    // <x1 x2> = Re<a1 a2> + Re<a1 a2^+>; the second term vanishes exactly for
    // block-diagonal states, so xx_cross = Re<a1 a2> and pp_cross = -xx_cross.
    double xx_cross;
    double pp_cross;

    // Standard-form covariance. A local phase flip of mode 2 maps the raw
    // moments (c_x, c_p) = (t, -t) to the (c1, c2) = (-|t|, |t|) layout.
    TwoModeCovariance to_standard_covariance() const;
};

// Second moments of the truncated state.
FockMoments extract_moments(const TruncatedState& s);

}  // namespace gqd
