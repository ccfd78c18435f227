#include "floodvibe/anomaly.hpp"

#include "floodvibe/parallel.hpp"
#include "floodvibe/rng.hpp"
#include "floodvibe/segmentation.hpp"

namespace floodvibe {

namespace {

void require_same_dims(int w1, int h1, int w2, int h2, const char* what) {
    if (w1 != w2 || h1 != h2) throw DimensionMismatch(what);
}

}  // namespace

BackgroundModel init_background(const std::vector<BinaryMap>& warmup, int stack_size) {
    if (warmup.empty()) throw EmptyWarmup("warm-up list is empty");
    const int w = warmup.front().width, h = warmup.front().height;
    for (const auto& m : warmup) {
        require_same_dims(w, h, m.width, m.height, "warm-up maps differ in size");
    }
    const std::size_t n_pixels = static_cast<std::size_t>(w) * h;
    BackgroundModel model(w, h, stack_size);
    const int n = static_cast<int>(warmup.size());
    parallel_rows(h, [&](int r0, int r1) {
        for (std::size_t i = static_cast<std::size_t>(r0) * w; i < static_cast<std::size_t>(r1) * w; ++i) {
            int water = 0;
            for (const auto& m : warmup) water += (m.values[i] == kWater) ? 1 : 0;
            // Strict majority; the n/2 tie lands on GROUND.
            const std::uint8_t median = (2 * water > n) ? kWater : kGround;
            for (int j = 0; j < stack_size; ++j) model.samples[i * stack_size + j] = median;
        }
    });
    (void)n_pixels;
    return model;
}

FloodMask classify_frame(const BackgroundModel& model, const BinaryMap& seg, int k_min,
                         int frame_index) {
    require_same_dims(model.width, model.height, seg.width, seg.height,
                      "segmentation map does not match model size");
    FloodMask mask(seg.width, seg.height, frame_index);
    parallel_rows(seg.height, [&](int r0, int r1) {
        const auto w = static_cast<std::size_t>(seg.width);
        for (std::size_t i = r0 * w; i < r1 * w; ++i) {
            mask.values[i] =
                (seg.values[i] == kWater && model.water_count(i) < k_min) ? 1 : 0;
        }
    });
    return mask;
}

void update_model(BackgroundModel& model, const BinaryMap& seg, const FloodMask& flood,
                  int frame_index, std::uint64_t seed) {
    require_same_dims(model.width, model.height, seg.width, seg.height,
                      "segmentation map does not match model size");
    require_same_dims(model.width, model.height, flood.width, flood.height,
                      "flood mask does not match model size");
    const auto k = static_cast<std::uint32_t>(model.stack_size);
    parallel_rows(model.height, [&](int r0, int r1) {
        const auto w = static_cast<std::size_t>(model.width);
        for (std::size_t i = r0 * w; i < r1 * w; ++i) {
            if (flood.values[i]) continue;
            const std::uint32_t slot =
                counter_uniform(seed, static_cast<std::uint64_t>(frame_index), i, k);
            model.samples[i * k + slot] = seg.values[i];
        }
    });
}

Detector::Detector(DetectorParams params, std::uint64_t seed)
    : params_(std::move(params)), seed_(seed) {
    const auto violations = params_.validate();
    if (!violations.empty()) throw InvalidSpec("invalid detector params: " + violations.front());
    warmup_.reserve(params_.n_init);
}

std::optional<FloodMask> Detector::push(const BinaryMap& seg) {
    const int index = frame_cursor_++;
    if (!initialized_) {
        warmup_.push_back(seg);
        if (static_cast<int>(warmup_.size()) == params_.n_init) {
            model_ = init_background(warmup_, params_.model_samples);
            warmup_.clear();
            warmup_.shrink_to_fit();
            initialized_ = true;
        }
        return std::nullopt;
    }
    FloodMask mask = classify_frame(model_, seg, params_.k_min, index);
    update_model(model_, seg, mask, index, seed_);
    return mask;
}

std::optional<FloodMask> Detector::push(const SarFrame& frame) {
    return push(segment_water(frame, params_));
}

std::vector<FloodMask> run_detector(const std::vector<BinaryMap>& maps,
                                    const DetectorParams& params, std::uint64_t seed) {
    Detector detector(params, seed);
    std::vector<FloodMask> out;
    for (const auto& m : maps) {
        if (auto mask = detector.push(m)) out.push_back(std::move(*mask));
    }
    return out;
}

}  // namespace floodvibe
