#include "floodvibe/synthetic.hpp"

#include <cmath>
#include <cstdio>

#include "floodvibe/parallel.hpp"
#include "floodvibe/rng.hpp"

namespace floodvibe {

bool Region::contains(int row, int col) const {
    if (shape == Shape::Rect) {
        return row >= row0 && row < row1 && col >= col0 && col < col1;
    }
    const double dr = row - row0, dc = col - col0;
    return dr * dr + dc * dc <= radius * radius;
}

std::vector<std::string> SceneSpec::validate() const {
    std::vector<std::string> v;
    if (width < 1 || height < 1) v.push_back("non-positive dimensions");
    if (n_frames < 1) v.push_back("n_frames must be >= 1");
    if (!(water_level >= 0.0) || !(ground_level > water_level))
        v.push_back("require 0 <= water_level < ground_level");
    if (speckle_looks < 1) v.push_back("speckle_looks must be >= 1");
    for (const auto& e : flood_events) {
        if (e.start_frame < 1 || e.end_frame > n_frames || e.start_frame > e.end_frame)
            v.push_back("flood event frames must lie within [1, n_frames]");
    }
    return v;
}

double apply_speckle(double value, int looks, std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t counter) {
    // Gamma(L, 1/L) as the mean of L unit exponentials; sub-draws are
    // spread along the counter axis.
    double sum = 0.0;
    for (int i = 0; i < looks; ++i) {
        const double u = counter_unit_double(seed, stream, counter * looks + i);
        sum += -std::log(u);
    }
    return value * (sum / looks);
}

std::pair<std::vector<SarFrame>, SceneTruth> generate_sequence(const SceneSpec& spec) {
    {
        const auto violations = spec.validate();
        if (!violations.empty()) throw InvalidSpec("invalid scene spec: " + violations.front());
    }
    const int w = spec.width, h = spec.height;
    const std::size_t n_pixels = static_cast<std::size_t>(w) * h;

    BinaryMap permanent(w, h, kGround);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            for (const auto& reg : spec.permanent_regions)
                if (reg.contains(r, c)) permanent.at(r, c) = kWater;

    std::vector<SarFrame> frames(spec.n_frames);
    SceneTruth truth;
    truth.water.resize(spec.n_frames);
    truth.flood.resize(spec.n_frames);

    for (int t = 0; t < spec.n_frames; ++t) {
        BinaryMap water = permanent;
        for (const auto& e : spec.flood_events) {
            if (t + 1 < e.start_frame || t + 1 > e.end_frame) continue;
            for (int r = 0; r < h; ++r)
                for (int c = 0; c < w; ++c)
                    if (e.region.contains(r, c)) water.at(r, c) = kWater;
        }
        FloodMask flood(w, h, t);
        for (std::size_t i = 0; i < n_pixels; ++i) {
            flood.values[i] = (water.values[i] == kWater && permanent.values[i] == kGround) ? 1 : 0;
        }

        SarFrame& frame = frames[t];
        frame.width = w;
        frame.height = h;
        char id[16];
        std::snprintf(id, sizeof(id), "frame_%04d", t);
        frame.frame_id = id;
        frame.timestamp = static_cast<std::int64_t>(t * spec.frame_interval_s);
        frame.channel_labels = {"VV"};
        frame.channels.emplace_back(w, h);
        Plane& plane = frame.channels.back();
        parallel_rows(h, [&](int r0, int r1) {
            for (std::size_t i = static_cast<std::size_t>(r0) * w;
                 i < static_cast<std::size_t>(r1) * w; ++i) {
                const double base =
                    (water.values[i] == kWater) ? spec.water_level : spec.ground_level;
                plane.values[i] = static_cast<float>(
                    spec.speckle_enabled
                        ? apply_speckle(base, spec.speckle_looks, spec.seed,
                                        static_cast<std::uint64_t>(t), i)
                        : base);
            }
        });

        truth.water[t] = std::move(water);
        truth.flood[t] = std::move(flood);
    }
    return {std::move(frames), std::move(truth)};
}

}  // namespace floodvibe
