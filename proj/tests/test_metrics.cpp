#include <doctest.h>

#include <algorithm>
#include <random>

#include "floodvibe/metrics.hpp"

using namespace floodvibe;

namespace {

FloodMask mask_of(int w, int h, std::initializer_list<int> ones) {
    FloodMask m(w, h, 0);
    for (int i : ones) m.values[i] = 1;
    return m;
}

FloodMask random_mask(int w, int h, std::mt19937& gen) {
    FloodMask m(w, h, 0);
    for (auto& v : m.values) v = gen() & 1;
    return m;
}

}  // namespace

TEST_CASE("confusion_counts: perfect prediction has no errors") {
    const auto m = mask_of(4, 4, {0, 5, 9});
    const auto c = confusion_counts({m}, {m});
    CHECK(c.tp == 3);
    CHECK(c.fp == 0);
    CHECK(c.fn == 0);
    CHECK(c.tn == 13);
}

TEST_CASE("confusion_counts: all-zero prediction misses everything") {
    const auto truth = mask_of(4, 4, {1, 2, 3});
    const auto c = confusion_counts({FloodMask(4, 4, 0)}, {truth});
    CHECK(c.tp == 0);
    CHECK(c.fn == 3);
    CHECK(c.fp == 0);
}

TEST_CASE("confusion_counts matches a brute-force recount on random pairs") {
    std::mt19937 gen(64);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FloodMask> pred, truth;
        for (int f = 0; f < 3; ++f) {
            pred.push_back(random_mask(8, 8, gen));
            truth.push_back(random_mask(8, 8, gen));
        }
        const auto c = confusion_counts(pred, truth);
        std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
        for (int f = 0; f < 3; ++f) {
            for (std::size_t i = 0; i < 64; ++i) {
                const int p = pred[f].values[i], t = truth[f].values[i];
                tp += p && t;
                fp += p && !t;
                fn += !p && t;
                tn += !p && !t;
            }
        }
        CHECK(c.tp == tp);
        CHECK(c.fp == fp);
        CHECK(c.fn == fn);
        CHECK(c.tn == tn);
        CHECK(c.tp + c.fp + c.fn + c.tn == 3 * 64);
    }
}

TEST_CASE("confusion_counts error paths") {
    CHECK_THROWS_AS(confusion_counts({FloodMask(2, 2, 0)}, {}), LengthMismatch);
    CHECK_THROWS_AS(confusion_counts({FloodMask(2, 2, 0)}, {FloodMask(3, 2, 0)}),
                    DimensionMismatch);
}

TEST_CASE("summary_metrics: hand-computed example") {
    const auto m = summary_metrics({.tp = 8, .fp = 2, .fn = 2, .tn = 0});
    CHECK(*m.precision == doctest::Approx(0.8));
    CHECK(*m.recall == doctest::Approx(0.8));
    CHECK(*m.iou == doctest::Approx(8.0 / 12.0));
    CHECK(*m.f1 == doctest::Approx(0.8));
}

TEST_CASE("summary_metrics: empty masks on both sides are undefined, not NaN") {
    const auto m = summary_metrics({.tp = 0, .fp = 0, .fn = 0, .tn = 100});
    CHECK(!m.precision);
    CHECK(!m.recall);
    CHECK(!m.f1);
    CHECK(!m.iou);
}

TEST_CASE("summary_metrics: perfect nonempty prediction scores 1 everywhere") {
    const auto m = summary_metrics({.tp = 5, .fp = 0, .fn = 0, .tn = 9});
    CHECK(*m.precision == 1.0);
    CHECK(*m.recall == 1.0);
    CHECK(*m.f1 == 1.0);
    CHECK(*m.iou == 1.0);
}

TEST_CASE("iou <= f1 and all metrics in [0,1] on random counts") {
    std::mt19937 gen(2);
    for (int trial = 0; trial < 200; ++trial) {
        const ConfusionCounts c{.tp = gen() % 50, .fp = gen() % 50, .fn = gen() % 50,
                                .tn = gen() % 50};
        const auto m = summary_metrics(c);
        for (auto v : {m.precision, m.recall, m.f1, m.iou}) {
            if (v) {
                CHECK(*v >= 0.0);
                CHECK(*v <= 1.0);
            }
        }
        if (m.iou && m.f1) CHECK(*m.iou <= *m.f1 + 1e-12);
    }
}

TEST_CASE("metrics are invariant under frame reordering") {
    std::mt19937 gen(15);
    std::vector<FloodMask> pred, truth;
    for (int f = 0; f < 5; ++f) {
        pred.push_back(random_mask(6, 6, gen));
        truth.push_back(random_mask(6, 6, gen));
    }
    const auto c1 = confusion_counts(pred, truth);
    std::vector<std::size_t> order = {4, 2, 0, 3, 1};
    std::vector<FloodMask> pred2, truth2;
    for (auto i : order) {
        pred2.push_back(pred[i]);
        truth2.push_back(truth[i]);
    }
    const auto c2 = confusion_counts(pred2, truth2);
    CHECK(c1.tp == c2.tp);
    CHECK(c1.fp == c2.fp);
    CHECK(c1.fn == c2.fn);
    CHECK(c1.tn == c2.tn);
}
