#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "floodvibe/raster.hpp"

namespace floodvibe {

/// Per-pixel stack of the K most relevant past WATER/GROUND observations.
/// Storage is pixel-major: samples[pixel*K + j].
struct BackgroundModel {
    int width = 0;
    int height = 0;
    int stack_size = 0;  // K
    std::vector<std::uint8_t> samples;

    BackgroundModel() = default;
    BackgroundModel(int w, int h, int k)
        : width(w), height(h), stack_size(k),
          samples(static_cast<std::size_t>(w) * h * k, kGround) {}

    std::uint8_t sample(std::size_t pixel, int j) const { return samples[pixel * stack_size + j]; }

    /// Number of WATER entries in pixel's stack.
    int water_count(std::size_t pixel) const {
        int n = 0;
        for (int j = 0; j < stack_size; ++j) n += (sample(pixel, j) == kWater) ? 1 : 0;
        return n;
    }

    bool operator==(const BackgroundModel&) const = default;
};

/// Per-pixel temporal median over the warm-up maps, replicated into all K
/// slots. Exactly half WATER resolves to GROUND.
BackgroundModel init_background(const std::vector<BinaryMap>& warmup, int stack_size);

/// Flood iff the segmentation says WATER and the model holds fewer than
/// k_min WATER samples. Read-only on the model.
FloodMask classify_frame(const BackgroundModel& model, const BinaryMap& seg, int k_min,
                         int frame_index);

/// Writes seg(x) into one stack slot per non-flooded pixel; the slot is a
/// counter-based function of (seed, frame_index, pixel), so the update is
/// reproducible under any parallel schedule. Flooded pixels are skipped.
void update_model(BackgroundModel& model, const BinaryMap& seg, const FloodMask& flood,
                  int frame_index, std::uint64_t seed);

/// Streaming detector: warm-up accumulation, then classify-before-update
/// per frame. Frames are pushed in sequence order.
class Detector {
public:
    Detector(DetectorParams params, std::uint64_t seed);

    /// Consumes the next segmentation map. Returns a mask once the model
    /// is initialized (frame index >= n_init); warm-up frames return nothing.
    std::optional<FloodMask> push(const BinaryMap& seg);

    /// Convenience for raw frames: segments, then pushes.
    std::optional<FloodMask> push(const SarFrame& frame);

    bool initialized() const { return initialized_; }
    int frame_cursor() const { return frame_cursor_; }
    const BackgroundModel& model() const { return model_; }
    const DetectorParams& params() const { return params_; }

private:
    DetectorParams params_;
    std::uint64_t seed_;
    int frame_cursor_ = 0;
    bool initialized_ = false;
    std::vector<BinaryMap> warmup_;
    BackgroundModel model_;
};

/// Batch run over pre-segmented maps. Emits one mask per frame index
/// >= n_init, in input order. Equals streaming push() bit for bit.
std::vector<FloodMask> run_detector(const std::vector<BinaryMap>& maps,
                                    const DetectorParams& params, std::uint64_t seed);

}  // namespace floodvibe
