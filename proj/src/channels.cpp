#include "gqd/channels.hpp"

#include <cmath>
#include <sstream>

namespace gqd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad_param(const char* what, double value) {
    std::ostringstream msg;
    msg << "channel: " << what << " = " << value << " out of range";
    throw std::invalid_argument(msg.str());
}

}  // namespace

void validate(const ChannelSpec& spec) {
    std::visit(overloaded{
                   [](const ThermalNoise& ch) {
                       if (!(ch.eta >= 0.0 && ch.eta <= 1.0)) bad_param("transmissivity eta", ch.eta);
                       if (!(ch.n_res >= 0.0) || !std::isfinite(ch.n_res)) bad_param("reservoir occupation", ch.n_res);
                   },
                   [](const Amplifier& ch) {
                       if (!(ch.gain >= 1.0) || !std::isfinite(ch.gain)) bad_param("gain", ch.gain);
                       if (!(ch.n_res >= 0.0) || !std::isfinite(ch.n_res)) bad_param("reservoir occupation", ch.n_res);
                   },
                   [](const ClassicalNoise& ch) {
                       if (!(ch.n >= 0.0) || !std::isfinite(ch.n)) bad_param("added noise", ch.n);
                   },
               },
               spec);
}

ChannelSpec make_channel(ChannelFamily family, double param, double n_res) {
    switch (family) {
        case ChannelFamily::thermal_noise:
            return ThermalNoise{param, n_res};
        case ChannelFamily::amplifier:
            return Amplifier{param, n_res};
        case ChannelFamily::classical_noise:
            return ClassicalNoise{param};
    }
    throw std::invalid_argument("make_channel: unknown channel family");
}

double channel_param(const ChannelSpec& spec) {
    return std::visit(overloaded{
                          [](const ThermalNoise& ch) { return ch.eta; },
                          [](const Amplifier& ch) { return ch.gain; },
                          [](const ClassicalNoise& ch) { return ch.n; },
                      },
                      spec);
}

TwoModeCovariance apply_channel(const TwoModeCovariance& cov,
                                const ChannelSpec& spec) {
    validate(spec);
    TwoModeCovariance out = cov;
    std::visit(overloaded{
                   [&](const ThermalNoise& ch) {
                       const double se = std::sqrt(ch.eta);
                       out.b = ch.eta * cov.b + (1.0 - ch.eta) * (ch.n_res + 0.5);
                       out.c1 = se * cov.c1;
                       out.c2 = se * cov.c2;
                   },
                   [&](const Amplifier& ch) {
                       const double sk = std::sqrt(ch.gain);
                       out.b = ch.gain * cov.b + (ch.gain - 1.0) * (ch.n_res + 0.5);
                       out.c1 = sk * cov.c1;
                       out.c2 = sk * cov.c2;
                   },
                   [&](const ClassicalNoise& ch) {
                       out.b = cov.b + ch.n;
                   },
               },
               spec);
    return out;
}

std::complex<double> transform_charfn(const CharFn& chi,
                                      const ChannelSpec& spec,
                                      const CharFnQuery& q) {
    validate(spec);
    return std::visit(
        overloaded{
            [&](const ThermalNoise& ch) {
                const CharFnQuery in{q.lambda1, std::sqrt(ch.eta) * q.lambda2};
                const double damp =
                    (1.0 - ch.eta) * (ch.n_res + 0.5) * std::norm(q.lambda2);
                return chi(in) * std::exp(-damp);
            },
            [&](const Amplifier& ch) {
                const CharFnQuery in{q.lambda1, std::sqrt(ch.gain) * q.lambda2};
                const double damp =
                    (ch.gain - 1.0) * (ch.n_res + 0.5) * std::norm(q.lambda2);
                return chi(in) * std::exp(-damp);
            },
            [&](const ClassicalNoise& ch) {
                return chi(q) * std::exp(-ch.n * std::norm(q.lambda2));
            },
        },
        spec);
}

std::vector<TrajectoryPoint> trajectory(const TwoModeCovariance& cov,
                                        ChannelFamily family, double n_res,
                                        const TrajectoryOptions& opt) {
    if (opt.samples < 2) {
        throw std::invalid_argument("trajectory: need at least 2 samples");
    }
    const double scale = std::max({1.0, std::abs(cov.c1), std::abs(cov.c2)});
    if (std::abs(cov.c1 + cov.c2) > 1e-12 * scale) {
        throw std::invalid_argument(
            "trajectory: covariance must be in standard form with c2 = -c1");
    }
    if (family != ChannelFamily::classical_noise &&
        (!(n_res >= 0.0) || !std::isfinite(n_res))) {
        throw std::invalid_argument("trajectory: reservoir occupation must be >= 0");
    }

    const double c = std::abs(cov.c1);
    if (c <= 0.0) {
        throw std::domain_error(
            "trajectory: correlations vanish (c = 0); the (b', c') curve "
            "degenerates to a point in c'");
    }
    const double csign = cov.c1 < 0.0 ? -1.0 : 1.0;
    const double w = n_res + 0.5;

    std::vector<TrajectoryPoint> points;
    points.reserve(static_cast<size_t>(opt.samples));

    for (int i = 0; i < opt.samples; ++i) {
        const double t = static_cast<double>(i) / (opt.samples - 1);
        TrajectoryPoint pt{};
        switch (family) {
            case ChannelFamily::thermal_noise: {
                // c' runs from c down to 0 (eta from 1 to 0).
                pt.c_prime = c * (1.0 - t);
                pt.b_prime = (cov.b - w) / (c * c) * pt.c_prime * pt.c_prime + w;
                pt.channel_param = (pt.c_prime / c) * (pt.c_prime / c);
                break;
            }
            case ChannelFamily::amplifier: {
                // c' runs up from c; bounded both by c_max_factor and by the
                // ceiling b' <= b + b_span.
                const double c_hi_b =
                    c * std::sqrt((cov.b + opt.b_span + w) / (cov.b + w));
                const double c_hi = std::min(opt.c_max_factor * c, c_hi_b);
                pt.c_prime = c + (c_hi - c) * t;
                pt.b_prime = (cov.b + w) / (c * c) * pt.c_prime * pt.c_prime - w;
                pt.channel_param = (pt.c_prime / c) * (pt.c_prime / c);
                break;
            }
            case ChannelFamily::classical_noise: {
                pt.c_prime = c;
                pt.b_prime = cov.b + opt.b_span * t;
                pt.channel_param = pt.b_prime - cov.b;
                break;
            }
        }
        const TwoModeCovariance evolved{cov.a, pt.b_prime, csign * pt.c_prime,
                                        -csign * pt.c_prime};
        pt.discord = gaussian_discord(evolved, MeasuredMode::mode2);
        points.push_back(pt);
    }
    return points;
}

}  // namespace gqd
