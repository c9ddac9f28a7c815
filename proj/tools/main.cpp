// Command-line front end: discord of two-mode squeezed thermal states, local
// Gaussian channel sweeps, slopes/thresholds, (b', c') trajectories and the
// Fock-space oracle. Exit codes: 0 success, 1 internal failure or failed
// oracle comparison, 2 invalid parameters, 3 unphysical covariance, 4 I/O
// failure, 5 threshold root not bracketable, 6 truncation budget exceeded.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gqd/analysis.hpp"
#include "gqd/channels.hpp"
#include "gqd/covariance.hpp"
#include "gqd/fock.hpp"
#include "gqd/numerics.hpp"
#include "gqd/report.hpp"
#include "gqd/states.hpp"
#include "gqd/version.hpp"

namespace {

using nlohmann::ordered_json;

int g_exit_code = 0;

struct Units {
    bool bits = false;
    double scale() const { return bits ? 1.0 / std::log(2.0) : 1.0; }
    const char* name() const { return bits ? "bits" : "nats"; }
};

gqd::ChannelFamily parse_family(const std::string& name) {
    if (name == "thermal") return gqd::ChannelFamily::thermal_noise;
    if (name == "amplifier") return gqd::ChannelFamily::amplifier;
    if (name == "classical") return gqd::ChannelFamily::classical_noise;
    throw std::invalid_argument(
        "unknown channel '" + name + "' (expected thermal, amplifier or classical)");
}

gqd::MeasuredMode parse_measure(int mode) {
    if (mode == 1) return gqd::MeasuredMode::mode1;
    if (mode == 2) return gqd::MeasuredMode::mode2;
    throw std::invalid_argument("--measure must be 1 or 2");
}

gqd::TwoModeCovariance parse_cov(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        vals.push_back(std::stod(item, &used));
        if (used != item.size()) {
            throw std::invalid_argument("--cov: cannot parse '" + item + "'");
        }
    }
    if (vals.size() != 4) {
        throw std::invalid_argument("--cov expects 4 comma-separated values a,b,c1,c2");
    }
    return {vals[0], vals[1], vals[2], vals[3]};
}

void emit_with_manifest(const std::string& path, const std::string& body,
                        const std::string& command, ordered_json params) {
    gqd::write_file(path, body);
    gqd::RunManifest m;
    m.command = command;
    m.parameters = std::move(params);
    m.library_version = gqd::library_version;
    m.timestamp = gqd::iso8601_utc_now();
    m.output_checksum = gqd::checksum_hex(body);
    gqd::write_file(path + ".manifest.json", gqd::manifest_json(m));
}

// ---------------------------------------------------------------- discord --

struct DiscordArgs {
    double r = 0.0, n1 = 0.0, n2 = 0.0;
    std::string cov_text;
    std::string channel;
    double eta = 1.0, gain = 1.0, noise = 0.0, n_res = 0.0;
    bool has_eta = false, has_gain = false, has_noise = false;
    int measure = 2;
    bool bits = false;
    bool json = false;
    bool has_state = false;
};

void run_discord(const DiscordArgs& a) {
    const Units units{a.bits};
    const gqd::MeasuredMode dir = parse_measure(a.measure);

    gqd::TwoModeCovariance cov{};
    bool from_sts = false;
    gqd::StsParams state{a.r, a.n1, a.n2};
    if (!a.cov_text.empty()) {
        if (a.has_state) {
            throw std::invalid_argument("--cov excludes --r/--n1/--n2");
        }
        cov = parse_cov(a.cov_text);
    } else {
        cov = gqd::sts_covariance(state);
        from_sts = true;
    }

    if (!a.channel.empty()) {
        const gqd::ChannelFamily family = parse_family(a.channel);
        double param = 0.0;
        switch (family) {
            case gqd::ChannelFamily::thermal_noise:
                if (!a.has_eta) throw std::invalid_argument("--channel thermal requires --eta");
                param = a.eta;
                break;
            case gqd::ChannelFamily::amplifier:
                if (!a.has_gain) throw std::invalid_argument("--channel amplifier requires --gain");
                param = a.gain;
                break;
            case gqd::ChannelFamily::classical_noise:
                if (!a.has_noise) throw std::invalid_argument("--channel classical requires --noise");
                param = a.noise;
                break;
        }
        cov = gqd::apply_channel(cov, gqd::make_channel(family, param, a.n_res));
    } else if (a.has_eta || a.has_gain || a.has_noise) {
        throw std::invalid_argument("--eta/--gain/--noise require --channel");
    }

    const gqd::EntropyReport er = gqd::entropy_report(cov);
    const gqd::SymplecticData sd = gqd::symplectic_data(cov);
    const double selected = dir == gqd::MeasuredMode::mode2 ? er.discord_left
                                                            : er.discord_right;
    const double u = units.scale();

    if (a.json) {
        ordered_json j;
        j["covariance"] = {{"a", cov.a}, {"b", cov.b}, {"c1", cov.c1}, {"c2", cov.c2}};
        j["invariants"] = {{"i1", sd.i1}, {"i2", sd.i2}, {"i3", sd.i3}, {"i4", sd.i4}};
        j["d_minus"] = sd.d_minus;
        j["d_plus"] = sd.d_plus;
        j["s1"] = er.s1 * u;
        j["s2"] = er.s2 * u;
        j["s12"] = er.s12 * u;
        j["mutual_information"] = er.mutual_information * u;
        j["discord_left"] = er.discord_left * u;
        j["discord_right"] = er.discord_right * u;
        j["discord"] = selected * u;
        j["measured_mode"] = a.measure;
        j["units"] = units.name();
        if (from_sts) {
            const gqd::SeparabilityReport sep = gqd::separability(state);
            j["separable"] = sep.separable;
            j["separability_boundary"] = sep.boundary;
        }
        std::cout << j.dump(2) << "\n";
        return;
    }

    using gqd::format_double;
    std::cout << "covariance: a = " << format_double(cov.a)
              << ", b = " << format_double(cov.b)
              << ", c1 = " << format_double(cov.c1)
              << ", c2 = " << format_double(cov.c2) << "\n";
    std::cout << "symplectic: d_minus = " << format_double(sd.d_minus)
              << ", d_plus = " << format_double(sd.d_plus) << "\n";
    std::cout << "entropies (" << units.name() << "): s1 = " << format_double(er.s1 * u)
              << ", s2 = " << format_double(er.s2 * u)
              << ", s12 = " << format_double(er.s12 * u) << "\n";
    std::cout << "mutual_information = " << format_double(er.mutual_information * u) << "\n";
    std::cout << "discord_left = " << format_double(er.discord_left * u)
              << " (measuring mode 2)\n";
    std::cout << "discord_right = " << format_double(er.discord_right * u)
              << " (measuring mode 1)\n";
    std::cout << "discord = " << format_double(selected * u) << " (measuring mode "
              << a.measure << ")\n";
    if (from_sts) {
        const gqd::SeparabilityReport sep = gqd::separability(state);
        std::cout << "separable = "
                  << (sep.boundary ? "boundary" : (sep.separable ? "yes" : "no"))
                  << " (criterion: n1 n2 / (1 + n1 + n2) > sinh^2 r)\n";
    }
}

// ------------------------------------------------------------------ sweep --

struct SweepArgs {
    std::string channel;
    double r = 0.0, n1 = 0.0, n2 = 0.0, n_res = 0.0;
    double from = 0.0, to = 0.0;
    bool has_from = false, has_to = false;
    int points = 201;
    int measure = 2;
    bool bits = false;
    std::string out;
};

void run_sweep(const SweepArgs& a) {
    const Units units{a.bits};
    const gqd::ChannelFamily family = parse_family(a.channel);

    double from = a.from, to = a.to;
    if (!a.has_from || !a.has_to) {
        switch (family) {
            case gqd::ChannelFamily::thermal_noise: from = 1.0; to = 0.0; break;
            case gqd::ChannelFamily::amplifier: from = 1.0; to = 5.0; break;
            case gqd::ChannelFamily::classical_noise: from = 0.0; to = 5.0; break;
        }
        if (a.has_from) from = a.from;
        if (a.has_to) to = a.to;
    }

    gqd::SweepConfig cfg;
    cfg.state = {a.r, a.n1, a.n2};
    cfg.family = family;
    cfg.n_res = a.n_res;
    cfg.grid = gqd::uniform_grid(from, to, a.points);
    cfg.direction = parse_measure(a.measure);

    gqd::SweepResult result = gqd::sweep_discord(cfg);
    if (units.bits) {
        for (gqd::SweepRecord& rec : result.records) {
            rec.discord *= units.scale();
            rec.mutual_information *= units.scale();
        }
    }
    const std::string body = gqd::sweep_csv(result);

    ordered_json params;
    params["channel"] = a.channel;
    params["r"] = a.r;
    params["n1"] = a.n1;
    params["n2"] = a.n2;
    params["N"] = a.n_res;
    params["from"] = from;
    params["to"] = to;
    params["points"] = a.points;
    params["measure"] = a.measure;
    params["units"] = units.name();
    params["out"] = a.out;
    emit_with_manifest(a.out, body, "sweep", std::move(params));

    std::cout << "wrote " << result.records.size() << " rows to " << a.out << "\n";
}

// ------------------------------------------------------------------ slope --

struct SlopeArgs {
    double r = 0.0, n1 = 0.0, n2 = 0.0, n_res = 0.0, eta = 1.0;
    int measure = 2;
    bool bits = false;
    bool surface = false;
    double occ_from = 0.0, occ_to = 20.0;
    int occ_points = 21;
    double res_from = 0.0, res_to = 20.0;
    int res_points = 21;
    std::string out;
};

void run_slope(const SlopeArgs& a) {
    const Units units{a.bits};
    const gqd::MeasuredMode dir = parse_measure(a.measure);

    if (a.surface) {
        if (a.out.empty()) {
            throw std::invalid_argument("slope --surface requires --out");
        }
        gqd::SlopeSurface surf = gqd::slope_surface(
            a.r, gqd::uniform_grid(a.occ_from, a.occ_to, a.occ_points),
            gqd::uniform_grid(a.res_from, a.res_to, a.res_points), dir);
        for (double& p : surf.p) p *= units.scale();
        const std::string body = gqd::surface_csv(surf);

        ordered_json params;
        params["r"] = a.r;
        params["occ_from"] = a.occ_from;
        params["occ_to"] = a.occ_to;
        params["occ_points"] = a.occ_points;
        params["res_from"] = a.res_from;
        params["res_to"] = a.res_to;
        params["res_points"] = a.res_points;
        params["measure"] = a.measure;
        params["units"] = units.name();
        params["out"] = a.out;
        emit_with_manifest(a.out, body, "slope-surface", std::move(params));
        std::cout << "wrote " << surf.p.size() << " grid points to " << a.out << "\n";
        return;
    }

    const double p =
        gqd::initial_slope({a.r, a.n1, a.n2}, a.n_res, dir, a.eta) * units.scale();
    std::cout << "p = " << gqd::format_double(p) << " " << units.name()
              << " per unit eta at eta = " << gqd::format_double(a.eta) << "\n";
    if (a.eta == 1.0) {
        std::cout << (p > 0.0 ? "discord initially decays as loss increases\n"
                              : "discord initially rises as loss increases\n");
    }
}

// -------------------------------------------------------------- threshold --

struct ThresholdArgs {
    double r = 0.0, n1 = 0.0, n2 = 0.0;
    int measure = 2;
};

void run_threshold(const ThresholdArgs& a) {
    const gqd::MeasuredMode dir = parse_measure(a.measure);
    const gqd::StsParams state{a.r, a.n1, a.n2};
    const gqd::ThresholdResult res = gqd::threshold_n(state, dir);
    std::cout << "n_star = " << gqd::format_double(res.n_star) << "\n";
    std::cout << "bracket = [" << gqd::format_double(res.lo) << ", "
              << gqd::format_double(res.hi) << "]\n";
    std::cout << "slope(" << gqd::format_double(res.lo)
              << ") = " << gqd::format_double(gqd::initial_slope(state, res.lo, dir))
              << ", slope(" << gqd::format_double(res.hi)
              << ") = " << gqd::format_double(gqd::initial_slope(state, res.hi, dir))
              << "\n";
}

// ------------------------------------------------------------- trajectory --

struct TrajectoryArgs {
    std::string channel;
    double r = 0.0, n1 = 0.0, n2 = 0.0, n_res = 0.0;
    int samples = 101;
    double c_max_factor = 3.0;
    double b_span = 10.0;
    std::string out;
};

void run_trajectory(const TrajectoryArgs& a) {
    const gqd::ChannelFamily family = parse_family(a.channel);
    const gqd::TwoModeCovariance cov = gqd::sts_covariance({a.r, a.n1, a.n2});
    gqd::TrajectoryOptions opt;
    opt.samples = a.samples;
    opt.c_max_factor = a.c_max_factor;
    opt.b_span = a.b_span;
    const std::vector<gqd::TrajectoryPoint> pts =
        gqd::trajectory(cov, family, a.n_res, opt);
    const std::string body = gqd::trajectory_csv(pts);

    ordered_json params;
    params["channel"] = a.channel;
    params["r"] = a.r;
    params["n1"] = a.n1;
    params["n2"] = a.n2;
    params["N"] = a.n_res;
    params["samples"] = a.samples;
    params["c_max_factor"] = a.c_max_factor;
    params["b_span"] = a.b_span;
    params["out"] = a.out;
    emit_with_manifest(a.out, body, "trajectory", std::move(params));
    std::cout << "wrote " << pts.size() << " trajectory points to " << a.out << "\n";
}

// ----------------------------------------------------------------- oracle --

struct OracleArgs {
    double r = 0.0, n1 = 0.0, n2 = 0.0;
    double eta = 1.0;
    bool has_eta = false;
    double n_env = 0.0;
    int cutoff = 0;       // 0: use recommended_cutoff
    int env_cutoff = 0;   // 0: derive from n_env and budget
    double budget = 1e-6;
    double tol = 1e-5;
};

void run_oracle(const OracleArgs& a) {
    const gqd::StsParams state{a.r, a.n1, a.n2};
    gqd::validate(state);
    const int cutoff = a.cutoff > 0 ? a.cutoff : gqd::recommended_cutoff(state);

    int env_cutoff = a.env_cutoff;
    if (env_cutoff <= 0) {
        if (a.n_env <= 0.0) {
            env_cutoff = 1;
        } else {
            const double q = a.n_env / (1.0 + a.n_env);
            env_cutoff = std::max(
                1, static_cast<int>(std::ceil(std::log(a.budget * 1e-2) / std::log(q))));
        }
    }

    gqd::TruncatedState rho = gqd::build_sts_fock(state, cutoff, a.budget);
    gqd::TwoModeCovariance cov = gqd::sts_covariance(state);
    if (a.has_eta) {
        rho = gqd::lossy_channel_fock(rho, a.eta, a.n_env, env_cutoff, a.budget);
        cov = gqd::apply_channel(cov, gqd::ThermalNoise{a.eta, a.n_env});
    }

    const gqd::EntropyReport er = gqd::entropy_report(cov);
    const double s12_f = gqd::entropy_fock(rho);
    const double s1_f = gqd::mode_entropy_fock(rho, 1);
    const double s2_f = gqd::mode_entropy_fock(rho, 2);
    const double mi_f = s1_f + s2_f - s12_f;
    const gqd::TwoModeCovariance cov_f =
        gqd::extract_moments(rho).to_standard_covariance();

    struct Row {
        const char* name;
        double fock, closed;
    };
    const Row rows[] = {
        {"s1", s1_f, er.s1},
        {"s2", s2_f, er.s2},
        {"s12", s12_f, er.s12},
        {"mutual_information", mi_f, er.mutual_information},
        {"a", cov_f.a, cov.a},
        {"b", cov_f.b, cov.b},
        {"c1", cov_f.c1, cov.c1},
        {"c2", cov_f.c2, cov.c2},
    };

    std::cout << "cutoff = " << cutoff << ", env_cutoff = " << env_cutoff
              << ", trace_deficit = " << gqd::format_double(rho.trace_deficit())
              << "\n";
    std::cout << "quantity fock covariance |deviation|\n";
    double max_dev = 0.0;
    for (const Row& row : rows) {
        const double dev = std::abs(row.fock - row.closed);
        max_dev = std::max(max_dev, dev);
        std::cout << row.name << " " << gqd::format_double(row.fock) << " "
                  << gqd::format_double(row.closed) << " "
                  << gqd::format_double(dev) << "\n";
    }
    std::cout << "max_deviation = " << gqd::format_double(max_dev)
              << " (tolerance " << gqd::format_double(a.tol) << ")\n";
    if (max_dev <= a.tol) {
        std::cout << "ORACLE PASS\n";
    } else {
        std::cout << "ORACLE FAIL\n";
        g_exit_code = 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian quantum discord of two-mode squeezed thermal states "
                 "under local Gaussian channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", gqd::library_version);

    DiscordArgs da;
    CLI::App* discord = app.add_subcommand(
        "discord", "Discord and entropies of a state (optionally channel-evolved)");
    CLI::Option* opt_r = discord->add_option("--r", da.r, "squeezing parameter");
    discord->add_option("--n1", da.n1, "thermal occupation of mode 1");
    discord->add_option("--n2", da.n2, "thermal occupation of mode 2");
    discord->add_option("--cov", da.cov_text,
                        "raw standard-form covariance a,b,c1,c2 (excludes --r/--n1/--n2)");
    discord->add_option("--channel", da.channel, "thermal | amplifier | classical");
    discord->add_option("--eta", da.eta, "thermal channel transmissivity")
        ->check(CLI::Range(0.0, 1.0));
    discord->add_option("--gain", da.gain, "amplifier gain");
    discord->add_option("--noise", da.noise, "classical added noise");
    discord->add_option("--N", da.n_res, "reservoir occupation (thermal/amplifier)");
    discord->add_option("--measure", da.measure, "measured mode (1 or 2)");
    discord->add_flag("--bits", da.bits, "report entropic quantities in bits");
    discord->add_flag("--json", da.json, "machine-readable output");
    discord->callback([&] {
        da.has_state = opt_r->count() > 0 ||
                       discord->count("--n1") > 0 || discord->count("--n2") > 0;
        da.has_eta = discord->count("--eta") > 0;
        da.has_gain = discord->count("--gain") > 0;
        da.has_noise = discord->count("--noise") > 0;
        run_discord(da);
    });

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Discord along a channel-parameter grid, written as CSV");
    sweep->add_option("--channel", sa.channel, "thermal | amplifier | classical")
        ->required();
    sweep->add_option("--r", sa.r, "squeezing parameter");
    sweep->add_option("--n1", sa.n1, "thermal occupation of mode 1");
    sweep->add_option("--n2", sa.n2, "thermal occupation of mode 2");
    sweep->add_option("--N", sa.n_res, "reservoir occupation");
    sweep->add_option("--from", sa.from, "first grid value");
    sweep->add_option("--to", sa.to, "last grid value");
    sweep->add_option("--points", sa.points, "grid size (default 201)");
    sweep->add_option("--measure", sa.measure, "measured mode (1 or 2)");
    sweep->add_flag("--bits", sa.bits, "emit discord/mutual information in bits");
    sweep->add_option("--out", sa.out, "output CSV path")->required();
    sweep->callback([&] {
        sa.has_from = sweep->count("--from") > 0;
        sa.has_to = sweep->count("--to") > 0;
        run_sweep(sa);
    });

    SlopeArgs la;
    CLI::App* slope = app.add_subcommand(
        "slope", "Initial slope of discord in the lossy channel");
    slope->add_option("--r", la.r, "squeezing parameter");
    slope->add_option("--n1", la.n1, "thermal occupation of mode 1");
    slope->add_option("--n2", la.n2, "thermal occupation of mode 2");
    slope->add_option("--N", la.n_res, "reservoir occupation");
    slope->add_option("--eta", la.eta, "evaluate the slope at this eta");
    slope->add_option("--measure", la.measure, "measured mode (1 or 2)");
    slope->add_flag("--bits", la.bits, "report the slope in bits per unit eta");
    slope->add_flag("--surface", la.surface,
                    "evaluate on an (occupation, reservoir) grid and write CSV");
    slope->add_option("--occ-from", la.occ_from, "surface: first occupation");
    slope->add_option("--occ-to", la.occ_to, "surface: last occupation");
    slope->add_option("--occ-points", la.occ_points, "surface: occupation grid size");
    slope->add_option("--res-from", la.res_from, "surface: first reservoir value");
    slope->add_option("--res-to", la.res_to, "surface: last reservoir value");
    slope->add_option("--res-points", la.res_points, "surface: reservoir grid size");
    slope->add_option("--out", la.out, "surface: output CSV path");
    slope->callback([&] { run_slope(la); });

    ThresholdArgs ta;
    CLI::App* threshold = app.add_subcommand(
        "threshold", "Reservoir occupation where decay under loss turns into rise");
    threshold->add_option("--r", ta.r, "squeezing parameter");
    threshold->add_option("--n1", ta.n1, "thermal occupation of mode 1");
    threshold->add_option("--n2", ta.n2, "thermal occupation of mode 2");
    threshold->add_option("--measure", ta.measure, "measured mode (1 or 2)");
    threshold->callback([&] { run_threshold(ta); });

    TrajectoryArgs ja;
    CLI::App* trajectory = app.add_subcommand(
        "trajectory", "Channel-family curve in the (b', c') plane, written as CSV");
    trajectory->add_option("--channel", ja.channel, "thermal | amplifier | classical")
        ->required();
    trajectory->add_option("--r", ja.r, "squeezing parameter");
    trajectory->add_option("--n1", ja.n1, "thermal occupation of mode 1");
    trajectory->add_option("--n2", ja.n2, "thermal occupation of mode 2");
    trajectory->add_option("--N", ja.n_res, "reservoir occupation");
    trajectory->add_option("--samples", ja.samples, "number of samples (default 101)");
    trajectory->add_option("--c-max-factor", ja.c_max_factor,
                           "amplifier: sample c' up to this multiple of c");
    trajectory->add_option("--b-span", ja.b_span,
                           "amplifier/classical: cap b' at b + this span");
    trajectory->add_option("--out", ja.out, "output CSV path")->required();
    trajectory->callback([&] { run_trajectory(ja); });

    OracleArgs oa;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Compare covariance-level results against the Fock-space oracle");
    oracle->add_option("--r", oa.r, "squeezing parameter");
    oracle->add_option("--n1", oa.n1, "thermal occupation of mode 1");
    oracle->add_option("--n2", oa.n2, "thermal occupation of mode 2");
    CLI::Option* opt_eta = oracle->add_option(
        "--eta", oa.eta, "also apply a lossy channel of this transmissivity");
    oracle->add_option("--N-env", oa.n_env, "environment occupation of the channel");
    oracle->add_option("--cutoff", oa.cutoff, "Fock cutoff (default: heuristic)");
    oracle->add_option("--env-cutoff", oa.env_cutoff,
                       "environment cutoff (default: from budget)");
    oracle->add_option("--budget", oa.budget, "truncation tail budget (default 1e-6)");
    oracle->add_option("--tol", oa.tol, "comparison tolerance (default 1e-5)");
    oracle->callback([&] {
        oa.has_eta = opt_eta->count() > 0;
        run_oracle(oa);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const gqd::unphysical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gqd::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const gqd::no_root_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const gqd::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit_code;
}
