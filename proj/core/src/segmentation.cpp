#include "floodvibe/segmentation.hpp"

#include <algorithm>
#include <numeric>

#include "floodvibe/parallel.hpp"

namespace floodvibe {

Plane boxcar_filter(const Plane& plane, int kernel_size) {
    if (kernel_size < 1) throw InvalidKernel("kernel_size must be >= 1");
    const int w = plane.width, h = plane.height;
    if (kernel_size == 1) return plane;

    // sat(r, c) = sum of plane over [0, r) x [0, c); (h+1) x (w+1).
    std::vector<double> sat(static_cast<std::size_t>(w + 1) * (h + 1), 0.0);
    const auto S = [&](int r, int c) -> double& {
        return sat[static_cast<std::size_t>(r) * (w + 1) + c];
    };
    for (int r = 0; r < h; ++r) {
        double row_sum = 0.0;
        for (int c = 0; c < w; ++c) {
            row_sum += plane.at(r, c);
            S(r + 1, c + 1) = S(r, c + 1) + row_sum;
        }
    }

    const int back = (kernel_size - 1) / 2;   // rows/cols before the anchor
    const int fwd = kernel_size / 2;          // rows/cols after the anchor
    Plane out(w, h);
    parallel_rows(h, [&](int r0, int r1) {
        for (int r = r0; r < r1; ++r) {
            const int rt = std::max(0, r - back);
            const int rb = std::min(h - 1, r + fwd);
            for (int c = 0; c < w; ++c) {
                const int cl = std::max(0, c - back);
                const int cr = std::min(w - 1, c + fwd);
                const double sum = S(rb + 1, cr + 1) - S(rt, cr + 1) - S(rb + 1, cl) + S(rt, cl);
                const int count = (rb - rt + 1) * (cr - cl + 1);
                out.at(r, c) = static_cast<float>(sum / count);
            }
        }
    });
    return out;
}

BinaryMap threshold_segment(const Plane& plane, float threshold) {
    BinaryMap out(plane.width, plane.height);
    parallel_rows(plane.height, [&](int r0, int r1) {
        const std::size_t begin = static_cast<std::size_t>(r0) * plane.width;
        const std::size_t end = static_cast<std::size_t>(r1) * plane.width;
        for (std::size_t i = begin; i < end; ++i) {
            out.values[i] = plane.values[i] > threshold ? kGround : kWater;
        }
    });
    return out;
}

namespace {

// Path-halving union-find over provisional labels.
std::uint32_t uf_find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

ComponentLabeling label_components(const BinaryMap& map, std::uint8_t target_class) {
    const int w = map.width, h = map.height;
    ComponentLabeling out;
    out.width = w;
    out.height = h;
    out.labels.assign(map.size(), 0);

    std::vector<std::uint32_t> parent(1, 0);  // index 0 reserved for background
    // First pass: provisional labels, unions with left and top neighbors.
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * w + c;
            if (map.values[i] != target_class) continue;
            const std::uint32_t left = (c > 0) ? out.labels[i - 1] : 0;
            const std::uint32_t top = (r > 0) ? out.labels[i - w] : 0;
            if (left == 0 && top == 0) {
                const auto fresh = static_cast<std::uint32_t>(parent.size());
                parent.push_back(fresh);
                out.labels[i] = fresh;
            } else if (left != 0 && top != 0) {
                const std::uint32_t a = uf_find(parent, left);
                const std::uint32_t b = uf_find(parent, top);
                parent[std::max(a, b)] = std::min(a, b);
                out.labels[i] = std::min(a, b);
            } else {
                out.labels[i] = std::max(left, top);
            }
        }
    }

    // Second pass: roots renumbered densely in raster order of first
    // encounter; sizes accumulated on the way.
    std::vector<std::uint32_t> dense(parent.size(), 0);
    std::uint32_t next = 1;
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
        if (out.labels[i] == 0) continue;
        const std::uint32_t root = uf_find(parent, out.labels[i]);
        if (dense[root] == 0) dense[root] = next++;
        out.labels[i] = dense[root];
        ++out.sizes[out.labels[i]];
    }
    return out;
}

BinaryMap remove_small_water_components(const BinaryMap& map, int num_components) {
    const ComponentLabeling cl = label_components(map, kWater);
    BinaryMap out = map;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const std::uint32_t id = cl.labels[i];
        if (id != 0 && cl.sizes.at(id) < static_cast<std::size_t>(num_components)) {
            out.values[i] = kGround;
        }
    }
    return out;
}

BinaryMap segment_water(const SarFrame& frame, const DetectorParams& params) {
    const Plane& plane = extract_channel(frame, params.channel);
    const Plane denoised = boxcar_filter(plane, params.kernel_size);
    const BinaryMap thresholded = threshold_segment(denoised, params.threshold);
    return remove_small_water_components(thresholded, params.num_components);
}

}  // namespace floodvibe
