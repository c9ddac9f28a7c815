#pragma once

#include <vector>

#include "gqd/channels.hpp"
#include "gqd/covariance.hpp"
#include "gqd/states.hpp"

// Parameter sweeps and derived quantities: discord along a channel family,
// the initial slope in the lossy channel, the reservoir threshold where decay
// turns into rise, discord maxima, and the general-dyne cross-check of the
// closed-form discord.

namespace gqd {

struct SweepConfig {
    StsParams state;
    ChannelFamily family;
    double n_res = 0.0;
    std::vector<double> grid;  // channel parameter values, strictly monotone
    MeasuredMode direction = MeasuredMode::mode2;
};

struct SweepRecord {
    double param;
    double b_prime;
    double c_prime;
    double discord;
    double mutual_information;
    double d_minus;
    double d_plus;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRecord> records;  // one per grid value, in grid order
};

// Evaluates the evolved state on every grid value. Grid values must lie in
// the channel family's parameter range; errors raised while processing a grid
// value are rethrown with that value identified.
SweepResult sweep_discord(const SweepConfig& cfg);

// p = dD/d(eta) of the lossy-channel discord at transmissivity `eta`
// (default: at the identity, eta = 1). Uses second-order finite differences
// with step 1e-5, cross-checked against a half-step estimate; the two must
// agree to 1e-6 or a std::runtime_error is thrown. p > 0 means discord
// initially decays as eta decreases from 1; p < 0 means it rises.
double initial_slope(const StsParams& state, double n_res,
                     MeasuredMode direction = MeasuredMode::mode2,
                     double eta = 1.0);

// Thrown when a root finder cannot bracket a sign change.
struct no_root_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThresholdResult {
    double n_star;  // reservoir occupation where the initial slope vanishes
    double lo;      // final bisection bracket: slope(lo) < 0 < slope(hi)
    double hi;
};

// Smallest reservoir occupation N* where the initial slope changes sign from
// negative (discord rises under loss) to positive (discord decays). Requires
// slope < 0 at n_res = 0; brackets by doubling and bisects to 1e-6. Throws
// no_root_error when there is no sign change.
ThresholdResult threshold_n(const StsParams& state,
                            MeasuredMode direction = MeasuredMode::mode2);

struct DiscordMax {
    double param;      // channel parameter of the maximum
    double discord;
    bool at_boundary;  // true when the grid argmax sits on the first/last node
};

// Maximum discord along the sweep: grid argmax refined by golden-section
// search on the bracketing grid interval (parameter tolerance 1e-6). When the
// argmax falls on a grid boundary the grid point itself is returned and
// flagged instead of refined.
DiscordMax find_discord_max(const SweepConfig& cfg);

struct GeneraldyneResult {
    double value;       // discord with the measurement optimised numerically
    double s_opt;       // optimal squeezing of the measurement covariance
    double theta_opt;   // optimal rotation of the measurement covariance
    bool converged;
};

// Discord of the standard-form state with the Gaussian measurement on
// `measured` optimised numerically over general-dyne covariances
// (1/2) R(theta) diag(s, 1/s) R(theta)^T: golden-section search over
// ln s in [-10, 10] along the axes theta = 0 and theta = pi/2, with a
// coordinate-descent refinement when the axes disagree. Agrees with
// gaussian_discord to better than 1e-6 on this state family.
GeneraldyneResult generaldyne_discord(const TwoModeCovariance& cov,
                                      MeasuredMode measured = MeasuredMode::mode2);

struct SlopeSurface {
    double r;
    std::vector<double> occupations;  // symmetric input occupation n1 = n2
    std::vector<double> reservoirs;   // lossy-channel reservoir occupation
    // p[i * reservoirs.size() + j] = initial slope at (occupations[i], reservoirs[j])
    std::vector<double> p;
};

// Initial slope evaluated on an (occupation, reservoir) grid at fixed r.
SlopeSurface slope_surface(double r, const std::vector<double>& occupations,
                           const std::vector<double>& reservoirs,
                           MeasuredMode direction = MeasuredMode::mode2);

}  // namespace gqd
