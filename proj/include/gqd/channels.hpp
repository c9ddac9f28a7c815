#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "gqd/covariance.hpp"
#include "gqd/states.hpp"

// Local single-mode Gaussian channels acting on mode 2 of a standard-form
// two-mode state. Mode 1 is untouched: a' = a always, and the standard form
// (c2' = -c1' for inputs with c2 = -c1) is preserved.

namespace gqd {

// Lossy bosonic channel with transmissivity eta coupled to a thermal
// reservoir holding n_res mean photons:
//   b' = eta b + (1 - eta)(n_res + 1/2),  c' = sqrt(eta) c.
struct ThermalNoise {
    double eta;    // in [0, 1]
    double n_res;  // >= 0
};

// Phase-insensitive amplifier with gain >= 1 and reservoir occupation n_res:
//   b' = gain b + (gain - 1)(n_res + 1/2),  c' = sqrt(gain) c.
struct Amplifier {
    double gain;   // >= 1
    double n_res;  // >= 0
};

// Classical (additive Gaussian) noise channel:
//   b' = b + n,  c' = c.
struct ClassicalNoise {
    double n;  // >= 0
};

using ChannelSpec = std::variant<ThermalNoise, Amplifier, ClassicalNoise>;

enum class ChannelFamily { thermal_noise, amplifier, classical_noise };

// Throws std::invalid_argument when a channel parameter is out of range or
// not finite.
void validate(const ChannelSpec& spec);

// Builds the ChannelSpec of `family` whose running parameter (eta, gain or n)
// equals `param`; n_res is ignored by classical_noise.
ChannelSpec make_channel(ChannelFamily family, double param, double n_res);

// The running parameter of the channel (eta, gain or n).
double channel_param(const ChannelSpec& spec);

// Covariance map of the channel applied to mode 2.
TwoModeCovariance apply_channel(const TwoModeCovariance& cov,
                                const ChannelSpec& spec);

using CharFn = std::function<std::complex<double>(const CharFnQuery&)>;

// Action of the channel at the characteristic-function level:
//   thermal:   chi(l1, sqrt(eta) l2)  * exp[-(1-eta)(n_res+1/2)|l2|^2]
//   amplifier: chi(l1, sqrt(gain) l2) * exp[-(gain-1)(n_res+1/2)|l2|^2]
//   classical: chi(l1, l2)            * exp[-n |l2|^2]
// Agrees pointwise with apply_channel through chi_from_covariance.
std::complex<double> transform_charfn(const CharFn& chi,
                                      const ChannelSpec& spec,
                                      const CharFnQuery& q);

// One sample of a channel-family trajectory in the (b', c') plane.
struct TrajectoryPoint {
    double channel_param;  // eta, gain or n reproducing this point
    double b_prime;
    double c_prime;
    double discord;  // measurements on mode 2
};

struct TrajectoryOptions {
    int samples = 101;         // >= 2
    double c_max_factor = 3.0; // amplifier: c' sampled up to c_max_factor * c
    double b_span = 10.0;      // amplifier/classical: b' capped at b + b_span
};

// The curve traced in the (b', c') plane by the one-parameter channel family
// acting on `cov` (standard form with c2 = -c1 required), sampled uniformly
// and oriented along increasing channel parameter distance from the identity:
//   thermal_noise:   c' from c down to 0, b' = [(b - w)/c^2] c'^2 + w
//   amplifier:       c' from c up to the option bounds, b' = [(b + w)/c^2] c'^2 - w
//   classical_noise: c' = c, b' from b to b + b_span
// with w = n_res + 1/2 (n_res is ignored by classical_noise). Throws
// std::domain_error when c = 0 (the trajectory degenerates) and
// std::invalid_argument on malformed input.
std::vector<TrajectoryPoint> trajectory(const TwoModeCovariance& cov,
                                        ChannelFamily family, double n_res,
                                        const TrajectoryOptions& opt = {});

}  // namespace gqd
