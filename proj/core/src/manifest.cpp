#include "floodvibe/manifest.hpp"

#include <ctime>
#include <fstream>
#include <set>

#include <json.hpp>

#include "floodvibe/raster_io.hpp"

namespace floodvibe {

namespace fs = std::filesystem;
using nlohmann::json;

std::int64_t parse_timestamp(const std::string& text, const std::string& pointer) {
    std::tm tm{};
    int matched = std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d", &tm.tm_year, &tm.tm_mon,
                              &tm.tm_mday, &tm.tm_hour, &tm.tm_min, &tm.tm_sec);
    if (matched != 6 && matched != 3)
        throw SchemaError(pointer, "timestamp '" + text + "' is not ISO-8601");
    tm.tm_year -= 1900;
    tm.tm_mon -= 1;
    const std::time_t t = timegm(&tm);
    if (t == static_cast<std::time_t>(-1))
        throw SchemaError(pointer, "timestamp '" + text + "' out of range");
    return static_cast<std::int64_t>(t);
}

namespace {

template <typename T>
T get_field(const json& obj, const std::string& key, const std::string& pointer) {
    if (!obj.contains(key)) throw SchemaError(pointer + "/" + key, "missing required field");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(pointer + "/" + key, "wrong type");
    }
}

template <typename T>
void maybe_set(const json& obj, const std::string& key, T& dst, const std::string& pointer) {
    if (!obj.contains(key)) return;
    try {
        dst = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(pointer + "/" + key, "wrong type");
    }
}

}  // namespace

SequenceManifest parse_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("manifest is not valid JSON: ") + e.what());
    }

    SequenceManifest m;
    maybe_set(doc, "seed", m.seed, "");

    if (doc.contains("params")) {
        const json& p = doc.at("params");
        if (!p.is_object()) throw SchemaError("/params", "must be an object");
        maybe_set(p, "kernel_size", m.params.kernel_size, "/params");
        maybe_set(p, "threshold", m.params.threshold, "/params");
        maybe_set(p, "num_components", m.params.num_components, "/params");
        maybe_set(p, "K", m.params.model_samples, "/params");
        maybe_set(p, "k_min", m.params.k_min, "/params");
        maybe_set(p, "n_init", m.params.n_init, "/params");
        maybe_set(p, "channel", m.params.channel, "/params");
    }
    for (const std::string& v : m.params.validate()) {
        // Violation messages lead with the field name.
        throw SchemaError("/params/" + v.substr(0, v.find(' ')), v);
    }

    if (!doc.contains("frames") || !doc.at("frames").is_array())
        throw SchemaError("/frames", "missing or not an array");
    const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
    int idx = 0;
    for (const json& f : doc.at("frames")) {
        const std::string ptr = "/frames/" + std::to_string(idx++);
        if (!f.is_object()) throw SchemaError(ptr, "frame entry must be an object");
        FrameRef ref;
        ref.id = get_field<std::string>(f, "id", ptr);
        fs::path p = get_field<std::string>(f, "path", ptr);
        ref.path = p.is_absolute() ? p : base / p;
        const json& ts = f.contains("timestamp")
                             ? f.at("timestamp")
                             : throw SchemaError(ptr + "/timestamp", "missing required field");
        if (ts.is_number_integer()) {
            ref.timestamp = ts.get<std::int64_t>();
        } else if (ts.is_string()) {
            ref.timestamp = parse_timestamp(ts.get<std::string>(), ptr + "/timestamp");
        } else {
            throw SchemaError(ptr + "/timestamp", "must be epoch seconds or ISO-8601 string");
        }
        m.frames.push_back(std::move(ref));
    }

    // Ordering and uniqueness are schema-level: report the offending ids.
    std::set<std::string> ids;
    for (std::size_t i = 0; i < m.frames.size(); ++i) {
        if (!ids.insert(m.frames[i].id).second)
            throw SchemaError("/frames", "duplicate frame id '" + m.frames[i].id + "'");
        if (i > 0 && m.frames[i].timestamp <= m.frames[i - 1].timestamp)
            throw SchemaError("/frames", "timestamps not strictly ascending between '" +
                                             m.frames[i - 1].id + "' and '" + m.frames[i].id + "'");
    }
    return m;
}

std::vector<std::string> validate_sequence(const SequenceManifest& manifest) {
    std::vector<std::string> report;
    for (const std::string& v : manifest.params.validate()) report.push_back("params: " + v);

    const auto n = static_cast<int>(manifest.frames.size());
    if (n < manifest.params.n_init + 1)
        report.push_back("frame count " + std::to_string(n) + " < n_init+1 (" +
                         std::to_string(manifest.params.n_init + 1) + ")");

    std::set<std::string> ids;
    for (std::size_t i = 0; i < manifest.frames.size(); ++i) {
        const auto& f = manifest.frames[i];
        if (!ids.insert(f.id).second) report.push_back("duplicate frame id '" + f.id + "'");
        if (i > 0 && f.timestamp <= manifest.frames[i - 1].timestamp)
            report.push_back("non-monotonic timestamps at frame '" + f.id + "'");
    }

    int ref_w = -1, ref_h = -1;
    std::vector<std::string> ref_labels;
    for (const auto& f : manifest.frames) {
        SarFrame frame;
        try {
            frame = read_raster(f.path);
        } catch (const std::exception& e) {
            report.push_back("frame '" + f.id + "' (" + f.path.string() + "): " + e.what());
            continue;
        }
        for (const std::string& v : validate_frame(frame))
            report.push_back("frame '" + f.id + "': " + v);
        if (ref_w < 0) {
            ref_w = frame.width;
            ref_h = frame.height;
            ref_labels = frame.channel_labels;
        } else if (frame.width != ref_w || frame.height != ref_h) {
            report.push_back("frame '" + f.id + "' dimensions differ from first frame");
        } else if (frame.channel_labels != ref_labels) {
            report.push_back("frame '" + f.id + "' channel labels differ from first frame");
        }
        bool has_channel = false;
        for (const auto& l : frame.channel_labels) has_channel |= (l == manifest.params.channel);
        if (!has_channel)
            report.push_back("frame '" + f.id + "' lacks configured channel " +
                             manifest.params.channel);
    }
    return report;
}

}  // namespace floodvibe
