#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "floodvibe/raster.hpp"

namespace floodvibe {

/// 4-connectivity component labeling of one target class. Non-target
/// pixels carry label 0; target labels are dense from 1, numbered in
/// raster-scan order of first encounter.
struct ComponentLabeling {
    int width = 0;
    int height = 0;
    std::vector<std::uint32_t> labels;
    std::unordered_map<std::uint32_t, std::size_t> sizes;
};

/// Sliding-window mean with the window clipped to the image; each output
/// is normalized by the number of valid pixels, so borders are unbiased.
/// For even kernels the window spans rows [r - (k-1)/2, r + k/2].
/// Implemented with an integral image; O(H*W) independent of kernel size.
Plane boxcar_filter(const Plane& plane, int kernel_size);

/// Eq-style split: strictly above threshold -> GROUND, else WATER.
BinaryMap threshold_segment(const Plane& plane, float threshold);

ComponentLabeling label_components(const BinaryMap& map, std::uint8_t target_class);

/// Reclassifies WATER components smaller than num_components to GROUND.
BinaryMap remove_small_water_components(const BinaryMap& map, int num_components);

/// Full chain: channel select -> boxcar -> threshold -> component pruning.
BinaryMap segment_water(const SarFrame& frame, const DetectorParams& params);

}  // namespace floodvibe
