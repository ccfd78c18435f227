#include <doctest.h>

#include "floodvibe/raster.hpp"

using namespace floodvibe;

namespace {

SarFrame two_channel_frame(int w, int h, float vv, float vh) {
    SarFrame f;
    f.width = w;
    f.height = h;
    f.channels = {Plane(w, h, vv), Plane(w, h, vh)};
    f.channel_labels = {"VV", "VH"};
    f.frame_id = "f0";
    return f;
}

}  // namespace

TEST_CASE("extract_channel selects the labeled plane") {
    const SarFrame f = two_channel_frame(4, 3, 0.5f, 0.1f);
    for (float v : extract_channel(f, "VV").values) CHECK(v == 0.5f);
    for (float v : extract_channel(f, "VH").values) CHECK(v == 0.1f);
}

TEST_CASE("extract_channel returns the plane by reference, value for value") {
    SarFrame f = two_channel_frame(5, 4, 0.0f, 0.0f);
    for (std::size_t i = 0; i < f.channels[0].values.size(); ++i) {
        f.channels[0].values[i] = static_cast<float>(i) * 0.01f;
        f.channels[1].values[i] = static_cast<float>(i) * 0.02f;
    }
    const Plane& vv = extract_channel(f, "VV");
    for (std::size_t i = 0; i < vv.values.size(); ++i) {
        CHECK(vv.values[i] == f.channels[0].values[i]);
    }
}

TEST_CASE("extract_channel throws on absent channel") {
    SarFrame f = two_channel_frame(2, 2, 0.5f, 0.1f);
    f.channels.pop_back();
    f.channel_labels.pop_back();
    CHECK_THROWS_AS(extract_channel(f, "VH"), MissingChannel);
}

TEST_CASE("validate_frame flags structural problems") {
    SarFrame ok = two_channel_frame(4, 4, 0.2f, 0.1f);
    CHECK(validate_frame(ok).empty());

    SarFrame bad_size = ok;
    bad_size.channels[0].values.pop_back();
    CHECK(!validate_frame(bad_size).empty());

    SarFrame negative = ok;
    negative.channels[1].values[3] = -0.5f;
    CHECK(!validate_frame(negative).empty());

    SarFrame dup = ok;
    dup.channel_labels[1] = "VV";
    CHECK(!validate_frame(dup).empty());
}

TEST_CASE("DetectorParams defaults match the reference parameterization") {
    const DetectorParams p;
    CHECK(p.kernel_size == 8);
    CHECK(p.threshold == doctest::Approx(0.03f));
    CHECK(p.num_components == 20);
    CHECK(p.model_samples == 5);
    CHECK(p.k_min == 1);
    CHECK(p.n_init == 30);
    CHECK(p.channel == "VV");
    CHECK(p.validate().empty());
}

TEST_CASE("DetectorParams validation catches out-of-range fields") {
    DetectorParams p;
    p.k_min = 7;  // > K
    CHECK(!p.validate().empty());
    p = DetectorParams{};
    p.kernel_size = 0;
    CHECK(!p.validate().empty());
    p = DetectorParams{};
    p.threshold = 0.0f;
    CHECK(!p.validate().empty());
}
