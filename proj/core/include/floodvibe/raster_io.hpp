#pragma once

#include <filesystem>

#include "floodvibe/raster.hpp"

namespace floodvibe {

// FR32 raster container, little-endian throughout:
//   header : magic "FR32", version u16 (=1), channel_count u16,
//            width u32, height u32
//   payload: channel_count planes of width*height f32, row-major
//   footer : per channel, label length u16 + ASCII bytes
//
// Mask files are binary PGM (P5, maxval 255); 1 maps to byte 255.

SarFrame read_raster(const std::filesystem::path& path);
void write_raster(const SarFrame& frame, const std::filesystem::path& path);

FloodMask read_mask(const std::filesystem::path& path);
void write_mask(const FloodMask& mask, const std::filesystem::path& path);

}  // namespace floodvibe
