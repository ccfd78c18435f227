#include "floodvibe/raster_io.hpp"

#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

namespace floodvibe {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'F', 'R', '3', '2'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>(v >> 8));
}
void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_f32(std::string& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
}

struct Cursor {
    const std::string& data;
    std::size_t pos = 0;

    void need(std::size_t n, const char* what) const {
        if (pos + n > data.size()) throw TruncatedPayload(std::string("unexpected end of file reading ") + what, pos);
    }
    std::uint16_t u16(const char* what) {
        need(2, what);
        const auto* p = reinterpret_cast<const unsigned char*>(data.data() + pos);
        pos += 2;
        return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
    }
    std::uint32_t u32(const char* what) {
        need(4, what);
        const auto* p = reinterpret_cast<const unsigned char*>(data.data() + pos);
        pos += 4;
        return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
    }
    std::uint64_t u64(const char* what) {
        std::uint64_t lo = u32(what), hi = u32(what);
        return lo | (hi << 32);
    }
    float f32(const char* what) {
        const std::uint32_t bits = u32(what);
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }
    std::string str(const char* what) {
        const std::uint16_t len = u16(what);
        need(len, what);
        std::string s = data.substr(pos, len);
        pos += len;
        return s;
    }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// Atomic write: temp file in the target directory, then rename.
void spill(const fs::path& path, const std::string& bytes) {
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw IoError("short write to '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

}  // namespace

void write_raster(const SarFrame& frame, const fs::path& path) {
    std::string bytes;
    bytes.append(kMagic, 4);
    put_u16(bytes, kVersion);
    put_u16(bytes, static_cast<std::uint16_t>(frame.channels.size()));
    put_u32(bytes, static_cast<std::uint32_t>(frame.width));
    put_u32(bytes, static_cast<std::uint32_t>(frame.height));
    for (const Plane& p : frame.channels) {
        for (float v : p.values) put_f32(bytes, v);
    }
    for (const std::string& label : frame.channel_labels) {
        put_u16(bytes, static_cast<std::uint16_t>(label.size()));
        bytes += label;
    }
    put_u16(bytes, static_cast<std::uint16_t>(frame.frame_id.size()));
    bytes += frame.frame_id;
    put_u64(bytes, static_cast<std::uint64_t>(frame.timestamp));
    spill(path, bytes);
}

SarFrame read_raster(const fs::path& path) {
    const std::string data = slurp(path);
    Cursor cur{data};
    cur.need(4, "magic");
    if (std::memcmp(data.data(), kMagic, 4) != 0) throw BadMagic("bad magic, expected FR32", 0);
    cur.pos = 4;
    const std::uint16_t version = cur.u16("version");
    if (version != kVersion)
        throw UnsupportedVersion("unsupported version " + std::to_string(version), 4);
    const std::uint16_t channels = cur.u16("channel count");
    SarFrame frame;
    frame.width = static_cast<int>(cur.u32("width"));
    frame.height = static_cast<int>(cur.u32("height"));
    const std::size_t n = static_cast<std::size_t>(frame.width) * frame.height;
    for (std::uint16_t c = 0; c < channels; ++c) {
        Plane p(frame.width, frame.height);
        cur.need(4 * n, "plane payload");
        for (std::size_t i = 0; i < n; ++i) p.values[i] = cur.f32("plane payload");
        frame.channels.push_back(std::move(p));
    }
    for (std::uint16_t c = 0; c < channels; ++c) {
        frame.channel_labels.push_back(cur.str("channel label"));
    }
    frame.frame_id = cur.str("frame id");
    frame.timestamp = static_cast<std::int64_t>(cur.u64("timestamp"));
    return frame;
}

void write_mask(const FloodMask& mask, const fs::path& path) {
    std::string bytes = "P5\n" + std::to_string(mask.width) + " " + std::to_string(mask.height) +
                        "\n255\n";
    bytes.reserve(bytes.size() + mask.values.size());
    for (std::uint8_t v : mask.values) bytes.push_back(v ? static_cast<char>(255) : 0);
    spill(path, bytes);
}

FloodMask read_mask(const fs::path& path) {
    const std::string data = slurp(path);
    if (data.size() < 2 || data[0] != 'P' || data[1] != '5')
        throw BadMagic("bad magic, expected P5", 0);
    std::size_t pos = 2;
    const auto next_int = [&](const char* what) {
        // Skip whitespace and '#' comment lines between header tokens.
        while (pos < data.size()) {
            if (std::isspace(static_cast<unsigned char>(data[pos]))) {
                ++pos;
            } else if (data[pos] == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        if (pos >= data.size() || !std::isdigit(static_cast<unsigned char>(data[pos])))
            throw TruncatedPayload(std::string("missing ") + what, pos);
        int v = 0;
        while (pos < data.size() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
            v = v * 10 + (data[pos++] - '0');
        }
        return v;
    };
    FloodMask mask;
    mask.width = next_int("width");
    mask.height = next_int("height");
    const int maxval = next_int("maxval");
    if (maxval != 255) throw NonBinaryValue("maxval must be 255", pos);
    ++pos;  // single whitespace after maxval
    const std::size_t n = static_cast<std::size_t>(mask.width) * mask.height;
    if (pos + n > data.size()) throw TruncatedPayload("pixel payload short", pos);
    mask.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto b = static_cast<unsigned char>(data[pos + i]);
        if (b != 0 && b != 255)
            throw NonBinaryValue("pixel byte " + std::to_string(b) + " is not 0 or 255", pos + i);
        mask.values[i] = b ? 1 : 0;
    }
    return mask;
}

}  // namespace floodvibe
