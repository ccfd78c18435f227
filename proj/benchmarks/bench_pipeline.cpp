#include <benchmark/benchmark.h>

#include <random>

#include "floodvibe/anomaly.hpp"
#include "floodvibe/segmentation.hpp"
#include "floodvibe/synthetic.hpp"

using namespace floodvibe;

namespace {

Plane random_plane(int w, int h) {
    std::mt19937 gen(1);
    std::uniform_real_distribution<float> dist(0.0f, 0.4f);
    Plane p(w, h);
    for (auto& v : p.values) v = dist(gen);
    return p;
}

BinaryMap random_map(int w, int h) {
    std::mt19937 gen(2);
    BinaryMap m(w, h);
    for (auto& v : m.values) v = (gen() % 5 == 0) ? kWater : kGround;
    return m;
}

}  // namespace

static void BM_BoxcarFilter(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const Plane p = random_plane(side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(boxcar_filter(p, 8));
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_BoxcarFilter)->Arg(256)->Arg(512)->Arg(1024);

static void BM_LabelComponents(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const BinaryMap m = random_map(side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(label_components(m, kWater));
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_LabelComponents)->Arg(256)->Arg(512)->Arg(1024);

static void BM_SegmentWater(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    SarFrame f;
    f.width = side;
    f.height = side;
    f.channel_labels = {"VV"};
    f.channels = {random_plane(side, side)};
    const DetectorParams params;
    for (auto _ : state) {
        benchmark::DoNotOptimize(segment_water(f, params));
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_SegmentWater)->Arg(256)->Arg(512);

static void BM_ClassifyAndUpdate(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    DetectorParams params;
    params.n_init = 2;
    Detector detector(params, 7);
    const BinaryMap m = random_map(side, side);
    detector.push(m);
    detector.push(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detector.push(m));
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_ClassifyAndUpdate)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
