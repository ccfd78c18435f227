#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floodvibe/raster.hpp"

namespace floodvibe {

/// Axis-aligned rectangle or disc, in pixel coordinates.
struct Region {
    enum class Shape { Rect, Disc };
    Shape shape = Shape::Rect;
    // Rect: [row0, row1) x [col0, col1). Disc: center (row0, col0), radius.
    int row0 = 0, col0 = 0, row1 = 0, col1 = 0;
    double radius = 0.0;

    bool contains(int row, int col) const;
};

struct FloodEvent {
    Region region;
    int start_frame = 1;  // 1-based, inclusive
    int end_frame = 1;    // inclusive
};

/// Declarative description of a synthetic SAR time series with known
/// water geometry and multiplicative gamma speckle.
struct SceneSpec {
    int width = 0;
    int height = 0;
    int n_frames = 0;
    double ground_level = 0.20;   // linear backscatter
    double water_level = 0.005;
    std::vector<Region> permanent_regions;
    std::vector<FloodEvent> flood_events;
    int speckle_looks = 4;        // L; variance scales as 1/L
    bool speckle_enabled = true;
    std::uint64_t seed = 0;
    double frame_interval_s = 6 * 86400;  // synthetic acquisition cadence

    std::vector<std::string> validate() const;
};

/// Reference masks derived from the spec geometry (no noise):
/// water = permanent or active flood; flood = water and not permanent.
struct SceneTruth {
    std::vector<BinaryMap> water;   // WATER/GROUND encoding
    std::vector<FloodMask> flood;   // 1 = flooded
};

/// value * g with g ~ Gamma(shape=looks, scale=1/looks); unit mean, so
/// the expectation of the output equals the input.
double apply_speckle(double value, int looks, std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t counter);

/// Deterministic in spec.seed; VV channel only.
std::pair<std::vector<SarFrame>, SceneTruth> generate_sequence(const SceneSpec& spec);

}  // namespace floodvibe
