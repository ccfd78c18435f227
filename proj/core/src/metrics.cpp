#include "floodvibe/metrics.hpp"

namespace floodvibe {

ConfusionCounts confusion_counts(const std::vector<FloodMask>& pred,
                                 const std::vector<FloodMask>& truth) {
    if (pred.size() != truth.size())
        throw LengthMismatch("prediction and reference lists differ in length");
    ConfusionCounts c;
    for (std::size_t f = 0; f < pred.size(); ++f) {
        const auto& p = pred[f];
        const auto& t = truth[f];
        if (p.width != t.width || p.height != t.height)
            throw DimensionMismatch("mask dimensions differ at frame " + std::to_string(f));
        for (std::size_t i = 0; i < p.values.size(); ++i) {
            const bool pp = p.values[i] != 0, tt = t.values[i] != 0;
            if (pp && tt) ++c.tp;
            else if (pp) ++c.fp;
            else if (tt) ++c.fn;
            else ++c.tn;
        }
    }
    return c;
}

SummaryMetrics summary_metrics(const ConfusionCounts& c) {
    SummaryMetrics m;
    const auto ratio = [](std::uint64_t num, std::uint64_t den) -> std::optional<double> {
        if (den == 0) return std::nullopt;
        return static_cast<double>(num) / static_cast<double>(den);
    };
    m.precision = ratio(c.tp, c.tp + c.fp);
    m.recall = ratio(c.tp, c.tp + c.fn);
    m.iou = ratio(c.tp, c.tp + c.fp + c.fn);
    m.f1 = ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn);
    return m;
}

}  // namespace floodvibe
