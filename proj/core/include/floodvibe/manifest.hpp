#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "floodvibe/raster.hpp"

namespace floodvibe {

struct FrameRef {
    std::string id;
    std::filesystem::path path;
    std::int64_t timestamp = 0;  // seconds since Unix epoch, UTC
};

/// Ordered frame list plus detector configuration for one sequence.
struct SequenceManifest {
    std::vector<FrameRef> frames;
    DetectorParams params;
    std::uint64_t seed = 0;
};

/// Parses the JSON manifest schema:
///   {"frames": [{"id", "path", "timestamp"}, ...], "params": {...}, "seed": N}
/// Omitted params fall back to DetectorParams defaults. Timestamps are
/// ISO-8601 UTC strings ("2019-05-16T05:32:11Z") or integer epoch seconds.
/// Relative frame paths resolve against the manifest's directory.
SequenceManifest parse_manifest(const std::filesystem::path& path);

/// Structural validation: manifest invariants plus a load of every frame
/// checking consistent dimensions and channel labels. Violations are
/// returned as data (I/O failures included); empty report means valid.
std::vector<std::string> validate_sequence(const SequenceManifest& manifest);

/// ISO-8601 "YYYY-MM-DDTHH:MM:SS[Z]" to epoch seconds; throws SchemaError.
std::int64_t parse_timestamp(const std::string& text, const std::string& pointer);

}  // namespace floodvibe
