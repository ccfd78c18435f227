#pragma once

#include <stdexcept>
#include <string>

namespace floodvibe {

struct MissingChannel : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidKernel : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyWarmup : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    // `pointer` locates the offending field, JSON-pointer style ("/params/k_min").
    SchemaError(std::string ptr, const std::string& what)
        : std::runtime_error(ptr + ": " + what), pointer(std::move(ptr)) {}
    std::string pointer;
};

// Raster / mask file errors carry the byte offset where decoding failed.
struct FileFormatError : std::runtime_error {
    FileFormatError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte offset " + std::to_string(off) + ")"),
          offset(off) {}
    std::size_t offset;
};
struct BadMagic : FileFormatError {
    using FileFormatError::FileFormatError;
};
struct TruncatedPayload : FileFormatError {
    using FileFormatError::FileFormatError;
};
struct UnsupportedVersion : FileFormatError {
    using FileFormatError::FileFormatError;
};
struct NonBinaryValue : FileFormatError {
    using FileFormatError::FileFormatError;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace floodvibe
