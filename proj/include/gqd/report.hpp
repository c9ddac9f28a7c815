#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gqd/analysis.hpp"
#include "gqd/channels.hpp"

// Deterministic emission of results: CSV bodies with shortest round-trip
// number formatting, FNV-1a checksums, and JSON run manifests. Identical
// inputs produce byte-identical CSV bodies.

namespace gqd {

// Thrown on filesystem failures while writing outputs.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal form that parses back to exactly the same double
// (std::to_chars); locale-independent, '.' decimal separator.
std::string format_double(double x);

// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view data);
// "fnv1a64:" followed by 16 lowercase hex digits.
std::string checksum_hex(std::string_view data);

// CSV bodies (header + rows, '\n' line endings).
std::string sweep_csv(const SweepResult& result);
std::string trajectory_csv(const std::vector<TrajectoryPoint>& points);
std::string surface_csv(const SlopeSurface& surface);

struct RunManifest {
    std::string command;
    nlohmann::ordered_json parameters;  // flag -> value, insertion-ordered
    std::string library_version;
    std::string timestamp;        // ISO 8601 UTC
    std::string output_checksum;  // checksum_hex of the emitted bytes

    nlohmann::ordered_json to_json() const;
    static RunManifest from_json(const nlohmann::ordered_json& j);
};

// Serialised manifest (2-space indent, trailing newline). Parsing and
// re-serialising is byte-stable.
std::string manifest_json(const RunManifest& m);

std::string iso8601_utc_now();

// Writes content to path, throwing io_error on failure.
void write_file(const std::string& path, std::string_view content);

}  // namespace gqd
