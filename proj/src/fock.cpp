#include "gqd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gqd {

int TruncatedState::block_size(int cutoff, int k) {
    return cutoff - (k < 0 ? -k : k);
}

TruncatedState::TruncatedState(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("TruncatedState: cutoff must be >= 1");
    }
    blocks_.reserve(static_cast<size_t>(2 * cutoff - 1));
    for (int k = -(cutoff - 1); k <= cutoff - 1; ++k) {
        const int s = block_size(cutoff, k);
        blocks_.emplace_back(s, s);
    }
}

double TruncatedState::element(int n1, int n2, int n1p, int n2p) const {
    const auto in_range = [this](int n) { return n >= 0 && n < cutoff_; };
    if (!in_range(n1) || !in_range(n2) || !in_range(n1p) || !in_range(n2p)) {
        throw std::out_of_range("TruncatedState::element: photon number outside cutoff");
    }
    if (n1 - n2 != n1p - n2p) {
        return 0.0;  // exactly zero across number-difference blocks
    }
    const int k = n1 - n2;
    return block(k)(std::min(n1, n2), std::min(n1p, n2p));
}

double TruncatedState::trace() const {
    double t = 0.0;
    for (const Matrix& b : blocks_) {
        for (int i = 0; i < b.rows; ++i) t += b(i, i);
    }
    return t;
}

double TruncatedState::hermiticity_error() const {
    double worst = 0.0;
    for (const Matrix& b : blocks_) {
        for (int i = 0; i < b.rows; ++i) {
            for (int j = i + 1; j < b.cols; ++j) {
                worst = std::max(worst, std::abs(b(i, j) - b(j, i)));
            }
        }
    }
    return worst;
}

std::vector<double> TruncatedState::mode_populations(int mode) const {
    if (mode != 1 && mode != 2) {
        throw std::invalid_argument("mode_populations: mode must be 1 or 2");
    }
    std::vector<double> pops(static_cast<size_t>(cutoff_), 0.0);
    for (int k = -(cutoff_ - 1); k <= cutoff_ - 1; ++k) {
        const Matrix& b = block(k);
        for (int i = 0; i < b.rows; ++i) {
            const int n = mode == 1 ? n1_of(k, i) : n2_of(k, i);
            pops[static_cast<size_t>(n)] += b(i, i);
        }
    }
    return pops;
}

std::vector<double> TruncatedState::eigenvalues() const {
    std::vector<double> all;
    all.reserve(static_cast<size_t>(cutoff_) * cutoff_);
    for (const Matrix& b : blocks_) {
        const std::vector<double> eig = jacobi_eigenvalues(b);
        all.insert(all.end(), eig.begin(), eig.end());
    }
    std::sort(all.begin(), all.end(), std::greater<double>());
    return all;
}

double TruncatedState::min_eigenvalue() const {
    double mn = 0.0;
    bool first = true;
    for (const Matrix& b : blocks_) {
        const std::vector<double> eig = jacobi_eigenvalues(b);
        if (!eig.empty() && (first || eig.front() < mn)) {
            mn = eig.front();
            first = false;
        }
    }
    return mn;
}

int recommended_cutoff(const StsParams& p) {
    validate(p);
    const double big = std::max(p.n1, p.n2);
    const double d = 8.0 * (big + 1.0) * std::exp(2.0 * p.r);
    return std::max(20, static_cast<int>(std::ceil(d)));
}

double thermal_weight(double mean_n, int n) {
    if (n < 0) {
        throw std::invalid_argument("thermal_weight: negative photon number");
    }
    if (mean_n <= 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    const double q = mean_n / (1.0 + mean_n);
    return std::pow(q, n) / (1.0 + mean_n);
}

double thermal_tail(double mean_n, int cutoff) {
    if (mean_n <= 0.0) return 0.0;
    const double q = mean_n / (1.0 + mean_n);
    return std::pow(q, cutoff);
}

double thermal_entropy(double mean_n) {
    if (mean_n <= 0.0) return 0.0;
    return (1.0 + mean_n) * std::log(1.0 + mean_n) - mean_n * std::log(mean_n);
}

Matrix two_mode_squeezer_block(double r, int k, int size) {
    if (size < 1) {
        throw std::invalid_argument("two_mode_squeezer_block: size must be >= 1");
    }
    // Generator r (a1+ a2+ - a1 a2) restricted to the block: it raises both
    // photon numbers together, so within the block it is tridiagonal and
    // antisymmetric, and its exponential is exactly orthogonal.
    Matrix g(size, size);
    for (int i = 0; i + 1 < size; ++i) {
        const double n1 = TruncatedState::n1_of(k, i);
        const double n2 = TruncatedState::n2_of(k, i);
        const double amp = r * std::sqrt((n1 + 1.0) * (n2 + 1.0));
        g(i + 1, i) = amp;
        g(i, i + 1) = -amp;
    }
    return expm(g);
}

TruncatedState build_sts_fock(const StsParams& p, int cutoff, double budget) {
    validate(p);
    if (cutoff < 1) {
        throw std::invalid_argument("build_sts_fock: cutoff must be >= 1");
    }
    if (!(budget > 0.0)) {
        throw std::invalid_argument("build_sts_fock: budget must be positive");
    }

    // Mean photon numbers of the squeezed marginals; their thermal tails
    // bound the probability mass lost to the truncation.
    const double spread = p.n_r() * (p.n1 + p.n2 + 1.0);
    const double m1 = p.n1 + spread;
    const double m2 = p.n2 + spread;
    const double tail = std::max(thermal_tail(m1, cutoff), thermal_tail(m2, cutoff));
    if (tail >= budget) {
        const double m = std::max(m1, m2);
        const double q = m / (1.0 + m);
        const int suggested =
            static_cast<int>(std::ceil(std::log(budget) / std::log(q))) + 10;
        std::ostringstream msg;
        msg << "build_sts_fock: truncation at cutoff " << cutoff
            << " leaves tail mass " << tail << " >= budget " << budget
            << "; a cutoff around " << suggested << " is needed";
        throw budget_error(msg.str());
    }

    TruncatedState state(cutoff);
    for (int k = -(cutoff - 1); k <= cutoff - 1; ++k) {
        const int s = TruncatedState::block_size(cutoff, k);
        const Matrix u = two_mode_squeezer_block(p.r, k, s);
        std::vector<double> w(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) {
            w[static_cast<size_t>(i)] =
                thermal_weight(p.n1, TruncatedState::n1_of(k, i)) *
                thermal_weight(p.n2, TruncatedState::n2_of(k, i));
        }
        // block = U diag(w) U^T
        Matrix scaled = u;
        for (int i = 0; i < s; ++i) {
            for (int j = 0; j < s; ++j) {
                scaled(i, j) *= w[static_cast<size_t>(j)];
            }
        }
        state.block(k) = matmul_abt(scaled, u);
    }
    return state;
}

TruncatedState lossy_channel_fock(const TruncatedState& s, double eta,
                                  double n_env, int env_cutoff, double budget) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("lossy_channel_fock: eta must lie in [0, 1]");
    }
    if (!(n_env >= 0.0) || !std::isfinite(n_env)) {
        throw std::invalid_argument("lossy_channel_fock: environment occupation must be >= 0");
    }
    if (env_cutoff < 1) {
        throw std::invalid_argument("lossy_channel_fock: env_cutoff must be >= 1");
    }
    const double env_tail = thermal_tail(n_env, env_cutoff);
    if (env_tail >= budget) {
        std::ostringstream msg;
        msg << "lossy_channel_fock: environment truncation at " << env_cutoff
            << " leaves tail mass " << env_tail << " >= budget " << budget;
        throw budget_error(msg.str());
    }

    const int d = s.cutoff();
    const double theta = std::acos(std::min(1.0, std::sqrt(eta)));

    // Beam-splitter unitary exp[theta (a2+ ae - a2 ae-)] conserves n2 + e;
    // B[M] is its matrix on the (M+1)-dimensional subspace n2 + e = M with
    // basis index j = n2.
    const int m_max = (d - 1) + (env_cutoff - 1);
    std::vector<Matrix> bs;
    bs.reserve(static_cast<size_t>(m_max + 1));
    for (int m = 0; m <= m_max; ++m) {
        Matrix g(m + 1, m + 1);
        for (int j = 0; j + 1 <= m; ++j) {
            const double amp = theta * std::sqrt((j + 1.0) * (m - j));
            g(j + 1, j) = amp;
            g(j, j + 1) = -amp;
        }
        bs.push_back(expm(g));
    }

    TruncatedState out(d);
    std::vector<double> kappa(static_cast<size_t>(d));

    for (int ei = 0; ei < env_cutoff; ++ei) {
        const double w = thermal_weight(n_env, ei);
        if (w < 1e-300) continue;
        for (int eo = 0; eo <= (d - 1) + ei; ++eo) {
            // The Kraus slice <.., eo | B | .., ei> shifts n2 by a constant:
            // n2_out = n2_in + shift.
            const int shift = ei - eo;
            const int n2_lo = std::max(0, -shift);
            const int n2_hi = std::min(d - 1, d - 1 - shift);
            if (n2_lo > n2_hi) continue;
            for (int n2 = n2_lo; n2 <= n2_hi; ++n2) {
                kappa[static_cast<size_t>(n2)] = bs[static_cast<size_t>(n2 + ei)](n2 + shift, n2);
            }

            for (int k = -(d - 1); k <= d - 1; ++k) {
                const Matrix& in = s.block(k);
                const int km = k < 0 ? -k : 0;  // n2 offset inside block k
                const int i_lo = std::max(0, n2_lo - km);
                const int i_hi = std::min(in.rows - 1, n2_hi - km);
                if (i_lo > i_hi) continue;
                const int kp = k - shift;
                if (kp <= -d || kp >= d) continue;
                Matrix& dst = out.block(kp);
                // Same mode-1 photon number, re-indexed in the target block.
                const int offset = (k > 0 ? k : 0) - (kp > 0 ? kp : 0);
                for (int i = i_lo; i <= i_hi; ++i) {
                    const double wi = w * kappa[static_cast<size_t>(i + km)];
                    if (wi == 0.0) continue;
                    const double* src_row = &in.a[static_cast<size_t>(i) * in.cols];
                    double* dst_row =
                        &dst.a[static_cast<size_t>(i + offset) * dst.cols + offset];
                    for (int j = i_lo; j <= i_hi; ++j) {
                        dst_row[j] += wi * kappa[static_cast<size_t>(j + km)] * src_row[j];
                    }
                }
            }
        }
    }
    return out;
}

namespace {

double entropy_of_spectrum(const std::vector<double>& lam) {
    double s = 0.0;
    for (const double l : lam) {
        if (l > 1e-14) s -= l * std::log(l);
    }
    return s;
}

}  // namespace

double entropy_fock(const TruncatedState& s) {
    double total = 0.0;
    for (int k = -(s.cutoff() - 1); k <= s.cutoff() - 1; ++k) {
        total += entropy_of_spectrum(jacobi_eigenvalues(s.block(k)));
    }
    return total;
}

double mode_entropy_fock(const TruncatedState& s, int mode) {
    return entropy_of_spectrum(s.mode_populations(mode));
}

TwoModeCovariance FockMoments::to_standard_covariance() const {
    const double t = std::abs(xx_cross);
    return {mean_n1 + 0.5, mean_n2 + 0.5, -t, t};
}

FockMoments extract_moments(const TruncatedState& s) {
    FockMoments mo{};
    for (int k = -(s.cutoff() - 1); k <= s.cutoff() - 1; ++k) {
        const Matrix& b = s.block(k);
        for (int i = 0; i < b.rows; ++i) {
            const double d = b(i, i);
            mo.mean_n1 += d * TruncatedState::n1_of(k, i);
            mo.mean_n2 += d * TruncatedState::n2_of(k, i);
        }
        // Re<a1 a2>: couples (n1-1, n2-1) to (n1, n2), adjacent inside the
        // same block.
        for (int i = 1; i < b.rows; ++i) {
            const double n1 = TruncatedState::n1_of(k, i);
            const double n2 = TruncatedState::n2_of(k, i);
            mo.xx_cross += std::sqrt(n1 * n2) * b(i - 1, i);
        }
    }
    mo.pp_cross = -mo.xx_cross;
    return mo;
}

}  // namespace gqd
