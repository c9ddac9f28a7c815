#include "gqd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gqd/numerics.hpp"

namespace gqd {

namespace {

void validate_grid(const SweepConfig& cfg) {
    if (cfg.grid.empty()) {
        throw std::invalid_argument("sweep: empty parameter grid");
    }
    double lo = cfg.grid.front(), hi = cfg.grid.front();
    if (cfg.grid.size() > 1) {
        const bool ascending = cfg.grid[1] > cfg.grid[0];
        for (size_t i = 1; i < cfg.grid.size(); ++i) {
            const double step = cfg.grid[i] - cfg.grid[i - 1];
            if (!(ascending ? step > 0.0 : step < 0.0)) {
                throw std::invalid_argument("sweep: grid must be strictly monotone");
            }
        }
        lo = std::min(cfg.grid.front(), cfg.grid.back());
        hi = std::max(cfg.grid.front(), cfg.grid.back());
    }
    switch (cfg.family) {
        case ChannelFamily::thermal_noise:
            if (lo < 0.0 || hi > 1.0) {
                throw std::invalid_argument("sweep: eta grid must lie in [0, 1]");
            }
            break;
        case ChannelFamily::amplifier:
            if (lo < 1.0) {
                throw std::invalid_argument("sweep: gain grid must lie in [1, inf)");
            }
            break;
        case ChannelFamily::classical_noise:
            if (lo < 0.0) {
                throw std::invalid_argument("sweep: noise grid must lie in [0, inf)");
            }
            break;
    }
}

}  // namespace

SweepResult sweep_discord(const SweepConfig& cfg) {
    validate(cfg.state);
    validate_grid(cfg);
    const TwoModeCovariance base = sts_covariance(cfg.state);

    SweepResult result;
    result.config = cfg;
    result.records.reserve(cfg.grid.size());
    for (const double v : cfg.grid) {
        try {
            const ChannelSpec spec = make_channel(cfg.family, v, cfg.n_res);
            const TwoModeCovariance cov = apply_channel(base, spec);
            const SymplecticData sd = symplectic_data(cov);
            SweepRecord rec{};
            rec.param = v;
            rec.b_prime = cov.b;
            rec.c_prime = std::abs(cov.c1);
            rec.discord = gaussian_discord(cov, cfg.direction);
            rec.mutual_information = mutual_information(cov);
            rec.d_minus = sd.d_minus;
            rec.d_plus = sd.d_plus;
            result.records.push_back(rec);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "sweep_discord: at grid value " << v << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
    }
    return result;
}

double initial_slope(const StsParams& state, double n_res,
                     MeasuredMode direction, double eta) {
    validate(state);
    if (!(n_res >= 0.0) || !std::isfinite(n_res)) {
        throw std::invalid_argument("initial_slope: reservoir occupation must be >= 0");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("initial_slope: eta must lie in [0, 1]");
    }
    const TwoModeCovariance base = sts_covariance(state);
    const auto f = [&](double e) {
        return gaussian_discord(apply_channel(base, ThermalNoise{e, n_res}),
                                direction);
    };
    // Second-order stencils, one-sided at the interval ends.
    const auto estimate = [&](double delta) {
        if (eta + 2.0 * delta > 1.0) {
            return (3.0 * f(eta) - 4.0 * f(eta - delta) + f(eta - 2.0 * delta)) /
                   (2.0 * delta);
        }
        if (eta - 2.0 * delta < 0.0) {
            return (-3.0 * f(eta) + 4.0 * f(eta + delta) - f(eta + 2.0 * delta)) /
                   (2.0 * delta);
        }
        return (f(eta + delta) - f(eta - delta)) / (2.0 * delta);
    };
    const double p_full = estimate(1e-5);
    const double p_half = estimate(5e-6);
    if (std::abs(p_full - p_half) > 1e-6) {
        std::ostringstream msg;
        msg << "initial_slope: finite-difference estimates disagree ("
            << p_full << " vs " << p_half << "); derivative unreliable here";
        throw std::runtime_error(msg.str());
    }
    return p_half;
}

ThresholdResult threshold_n(const StsParams& state, MeasuredMode direction) {
    const double p0 = initial_slope(state, 0.0, direction);
    if (p0 >= 0.0) {
        std::ostringstream msg;
        msg << "threshold_n: slope at zero reservoir occupation is " << p0
            << " >= 0; no decay-to-rise transition to bracket";
        throw no_root_error(msg.str());
    }
    double hi = 1.0;
    while (initial_slope(state, hi, direction) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e9) {
            throw no_root_error(
                "threshold_n: slope stays negative up to reservoir occupation 1e9");
        }
    }
    const auto g = [&](double n) { return initial_slope(state, n, direction); };
    const BisectResult root = bisect_root(g, 0.0, hi, 1e-6);
    return {root.root, root.lo, root.hi};
}

DiscordMax find_discord_max(const SweepConfig& cfg) {
    const SweepResult swept = sweep_discord(cfg);
    size_t best = 0;
    for (size_t i = 1; i < swept.records.size(); ++i) {
        if (swept.records[i].discord > swept.records[best].discord) best = i;
    }
    DiscordMax out{swept.records[best].param, swept.records[best].discord, false};
    if (best == 0 || best + 1 == swept.records.size()) {
        out.at_boundary = true;
        return out;
    }

    const TwoModeCovariance base = sts_covariance(cfg.state);
    const auto f = [&](double v) {
        return gaussian_discord(
            apply_channel(base, make_channel(cfg.family, v, cfg.n_res)),
            cfg.direction);
    };
    const double lo = std::min(cfg.grid[best - 1], cfg.grid[best + 1]);
    const double hi = std::max(cfg.grid[best - 1], cfg.grid[best + 1]);
    const GoldenResult refined = golden_max(f, lo, hi, 1e-6);
    if (refined.f >= out.discord) {
        out.param = refined.x;
        out.discord = refined.f;
    }
    return out;
}

namespace {

// det of the conditional covariance of the kept mode after a general-dyne
// measurement with covariance (1/2) R(theta) diag(s, 1/s) R(theta)^T on the
// measured mode. `kept`/`meas` are the diagonal entries of the corresponding
// blocks; the coupling block is diag(c1, c2).
double conditional_det(double kept, double meas, double c1, double c2,
                       double log_s, double theta) {
    const double s = std::exp(log_s);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double m00 = 0.5 * (ct * ct * s + st * st / s);
    const double m11 = 0.5 * (st * st * s + ct * ct / s);
    const double m01 = 0.5 * ct * st * (s - 1.0 / s);

    const double b00 = meas + m00;
    const double b11 = meas + m11;
    const double det_b = b00 * b11 - m01 * m01;

    const double a00 = kept - c1 * c1 * b11 / det_b;
    const double a11 = kept - c2 * c2 * b00 / det_b;
    const double a01 = c1 * c2 * m01 / det_b;
    return a00 * a11 - a01 * a01;
}

}  // namespace

GeneraldyneResult generaldyne_discord(const TwoModeCovariance& cov,
                                      MeasuredMode measured) {
    const PhysicalityReport rep = physicality_check(cov);
    if (!rep.physical) {
        throw unphysical_error("generaldyne_discord: " + rep.diagnostic);
    }
    const SymplecticData sd = symplectic_data(cov);
    const double kept = (measured == MeasuredMode::mode2) ? cov.a : cov.b;
    const double meas = (measured == MeasuredMode::mode2) ? cov.b : cov.a;

    const auto det_at = [&](double log_s, double theta) {
        return conditional_det(kept, meas, cov.c1, cov.c2, log_s, theta);
    };

    const double half_pi = std::asin(1.0);
    const GoldenResult g0 = golden_min(
        [&](double t) { return det_at(t, 0.0); }, -10.0, 10.0, 1e-8, 400);
    const GoldenResult g90 = golden_min(
        [&](double t) { return det_at(t, half_pi); }, -10.0, 10.0, 1e-8, 400);

    double best_det = g0.f;
    double log_s = g0.x;
    double theta = 0.0;
    bool converged = g0.converged && g90.converged;
    if (g90.f < best_det) {
        best_det = g90.f;
        log_s = g90.x;
        theta = half_pi;
    }

    // When the two axes disagree the optimum may sit at an intermediate
    // angle: refine by coordinate descent over (theta, ln s).
    if (std::abs(g0.f - g90.f) > 1e-8) {
        for (int round = 0; round < 50; ++round) {
            const GoldenResult gt = golden_min(
                [&](double th) { return det_at(log_s, th); }, 0.0,
                2.0 * half_pi, 1e-9, 400);
            const GoldenResult gs = golden_min(
                [&](double t) { return det_at(t, gt.x); }, -10.0, 10.0, 1e-9,
                400);
            theta = gt.x;
            const double improved = gs.f;
            log_s = gs.x;
            if (best_det - improved < 1e-14 * std::max(1.0, best_det)) {
                best_det = std::min(best_det, improved);
                break;
            }
            best_det = improved;
        }
    }

    const double cond = std::sqrt(std::max(best_det, 0.0));
    double d = entropy_h(meas) - entropy_h(sd.d_minus) - entropy_h(sd.d_plus) +
               entropy_h(cond);
    if (std::abs(d) <= phys_tol) d = 0.0;

    GeneraldyneResult out{};
    out.value = d;
    out.s_opt = std::exp(log_s);
    out.theta_opt = theta;
    out.converged = converged;
    return out;
}

SlopeSurface slope_surface(double r, const std::vector<double>& occupations,
                           const std::vector<double>& reservoirs,
                           MeasuredMode direction) {
    SlopeSurface surf;
    surf.r = r;
    surf.occupations = occupations;
    surf.reservoirs = reservoirs;
    surf.p.reserve(occupations.size() * reservoirs.size());
    for (const double occ : occupations) {
        const StsParams state{r, occ, occ};
        for (const double res : reservoirs) {
            surf.p.push_back(initial_slope(state, res, direction));
        }
    }
    return surf;
}

}  // namespace gqd
