#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floodvibe/errors.hpp"

namespace floodvibe {

// Pixel classes of a segmentation map. WATER is 0 so that counting
// (1 - value) over a sample stack counts water observations.
inline constexpr std::uint8_t kWater = 0;
inline constexpr std::uint8_t kGround = 1;

/// Single-channel row-major float grid (top-left origin).
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<float> values;  // width*height, row-major

    Plane() = default;
    Plane(int w, int h, float fill = 0.0f)
        : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

    float at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
    float& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
    std::size_t size() const { return values.size(); }
};

/// One SAR acquisition: up to two polarization planes plus a timestamp.
/// Backscatter is linear power, non-negative.
struct SarFrame {
    int width = 0;
    int height = 0;
    std::vector<Plane> channels;
    std::vector<std::string> channel_labels;  // drawn from {"VV","VH"}
    std::int64_t timestamp = 0;               // seconds since Unix epoch, UTC
    std::string frame_id;
};

/// Per-pixel WATER/GROUND map (the binary segmentation result).
struct BinaryMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values;  // each kWater or kGround

    BinaryMap() = default;
    BinaryMap(int w, int h, std::uint8_t fill = kGround)
        : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
    std::size_t size() const { return values.size(); }

    bool operator==(const BinaryMap&) const = default;
};

/// Per-pixel flood flags for one frame of the sequence.
struct FloodMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values;  // 0 = not flooded, 1 = flooded
    int frame_index = -1;              // position in the input sequence

    FloodMask() = default;
    FloodMask(int w, int h, int index)
        : width(w), height(h), values(static_cast<std::size_t>(w) * h, 0), frame_index(index) {}

    std::uint8_t at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }

    bool operator==(const FloodMask&) const = default;
};

/// Detector configuration. Defaults follow the reference parameterization
/// for VV-band Sentinel-1 linear-power backscatter.
struct DetectorParams {
    int kernel_size = 8;        // boxcar window side, pixels
    float threshold = 0.03f;    // linear backscatter units
    int num_components = 20;    // minimum surviving water component size
    int model_samples = 5;      // K, samples per pixel in the background model
    int k_min = 1;              // water-sample count below which water is anomalous
    int n_init = 30;            // warm-up frames used for median initialization
    std::string channel = "VV";

    /// Returns human-readable violations, empty when valid.
    std::vector<std::string> validate() const;
};

/// Selects the plane for `label`; throws MissingChannel if absent.
const Plane& extract_channel(const SarFrame& frame, const std::string& label);

/// Structural checks on a frame (plane sizes, channel count, finite
/// non-negative values). Returns violations, empty when well-formed.
std::vector<std::string> validate_frame(const SarFrame& frame);

}  // namespace floodvibe
