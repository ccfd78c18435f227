#include "floodvibe/raster.hpp"

#include <cmath>
#include <set>

namespace floodvibe {

std::vector<std::string> DetectorParams::validate() const {
    std::vector<std::string> v;
    if (kernel_size < 1) v.push_back("kernel_size must be >= 1");
    if (!(threshold > 0.0f)) v.push_back("threshold must be > 0");
    if (num_components < 1) v.push_back("num_components must be >= 1");
    if (model_samples < 1) v.push_back("K must be >= 1");
    if (k_min < 1 || k_min > model_samples) v.push_back("k_min must satisfy 1 <= k_min <= K");
    if (n_init < 1) v.push_back("n_init must be >= 1");
    if (channel != "VV" && channel != "VH") v.push_back("channel must be VV or VH");
    return v;
}

const Plane& extract_channel(const SarFrame& frame, const std::string& label) {
    for (std::size_t i = 0; i < frame.channel_labels.size(); ++i) {
        if (frame.channel_labels[i] == label) return frame.channels[i];
    }
    throw MissingChannel("channel '" + label + "' not present in frame '" + frame.frame_id + "'");
}

std::vector<std::string> validate_frame(const SarFrame& frame) {
    std::vector<std::string> v;
    if (frame.width < 1 || frame.height < 1) v.push_back("non-positive dimensions");
    if (frame.channels.empty() || frame.channels.size() > 2)
        v.push_back("channel count must be 1 or 2");
    if (frame.channels.size() != frame.channel_labels.size())
        v.push_back("channel/label count mismatch");
    std::set<std::string> seen;
    for (const auto& l : frame.channel_labels) {
        if (l != "VV" && l != "VH") v.push_back("unknown channel label '" + l + "'");
        if (!seen.insert(l).second) v.push_back("duplicate channel label '" + l + "'");
    }
    const std::size_t expect = static_cast<std::size_t>(frame.width) * frame.height;
    for (std::size_t i = 0; i < frame.channels.size(); ++i) {
        const Plane& p = frame.channels[i];
        if (p.values.size() != expect || p.width != frame.width || p.height != frame.height) {
            v.push_back("channel " + std::to_string(i) + " plane size mismatch");
            continue;
        }
        for (float x : p.values) {
            if (!std::isfinite(x) || x < 0.0f) {
                v.push_back("channel " + std::to_string(i) + " has non-finite or negative value");
                break;
            }
        }
    }
    return v;
}

}  // namespace floodvibe
