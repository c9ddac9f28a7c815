#include "gqd/report.hpp"

#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace gqd {

std::string format_double(double x) {
    char buf[40];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string checksum_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return std::string("fnv1a64:") + buf;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out =
        "param,b_prime,c_prime,discord,mutual_information,d_minus,d_plus\n";
    for (const SweepRecord& r : result.records) {
        out += format_double(r.param);
        out += ',';
        out += format_double(r.b_prime);
        out += ',';
        out += format_double(r.c_prime);
        out += ',';
        out += format_double(r.discord);
        out += ',';
        out += format_double(r.mutual_information);
        out += ',';
        out += format_double(r.d_minus);
        out += ',';
        out += format_double(r.d_plus);
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& points) {
    std::string out = "param,b_prime,c_prime,discord\n";
    for (const TrajectoryPoint& p : points) {
        out += format_double(p.channel_param);
        out += ',';
        out += format_double(p.b_prime);
        out += ',';
        out += format_double(p.c_prime);
        out += ',';
        out += format_double(p.discord);
        out += '\n';
    }
    return out;
}

std::string surface_csv(const SlopeSurface& surface) {
    std::string out = "n_occupation,n_reservoir,p\n";
    for (size_t i = 0; i < surface.occupations.size(); ++i) {
        for (size_t j = 0; j < surface.reservoirs.size(); ++j) {
            out += format_double(surface.occupations[i]);
            out += ',';
            out += format_double(surface.reservoirs[j]);
            out += ',';
            out += format_double(surface.p[i * surface.reservoirs.size() + j]);
            out += '\n';
        }
    }
    return out;
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["library_version"] = library_version;
    j["timestamp"] = timestamp;
    j["output_checksum"] = output_checksum;
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::ordered_json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.library_version = j.at("library_version").get<std::string>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.output_checksum = j.at("output_checksum").get<std::string>();
    return m;
}

std::string manifest_json(const RunManifest& m) {
    return m.to_json().dump(2) + "\n";
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open for writing: " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw io_error("write failed: " + path);
    }
}

}  // namespace gqd
