#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "floodvibe/raster.hpp"

namespace floodvibe {

struct ConfusionCounts {
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;

    ConfusionCounts& operator+=(const ConfusionCounts& o) {
        tp += o.tp; fp += o.fp; fn += o.fn; tn += o.tn;
        return *this;
    }
};

/// Ratios over the confusion counts; a 0/0 ratio is reported as
/// nullopt rather than NaN.
struct SummaryMetrics {
    std::optional<double> precision, recall, f1, iou;
};

/// Aggregates per-pixel counts over paired (prediction, reference) frames.
ConfusionCounts confusion_counts(const std::vector<FloodMask>& pred,
                                 const std::vector<FloodMask>& truth);

SummaryMetrics summary_metrics(const ConfusionCounts& c);

}  // namespace floodvibe
