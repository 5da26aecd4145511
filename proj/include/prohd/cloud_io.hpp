#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "prohd/point_cloud.hpp"

namespace prohd {

enum class CloudFormat { csv, binary };
enum class Dtype { f32, f64 };

enum class DataErrorCode {
    io,                ///< open/read/write failure
    bad_magic,         ///< binary file does not start with "PCF1"
    bad_dtype,         ///< dtype byte is neither 0 nor 1
    truncated_payload, ///< fewer bytes than the header promises
    trailing_data,     ///< more bytes than the header promises
    non_finite,        ///< NaN or infinity in the data
    ragged_row,        ///< CSV row with a different column count
    parse,             ///< CSV field that is not a number
    empty,             ///< no points, or zero dimension
};

std::string_view to_string(DataErrorCode code);

class DataError : public std::runtime_error {
public:
    DataError(DataErrorCode code, const std::string& what);
    DataErrorCode code() const noexcept { return code_; }

private:
    DataErrorCode code_;
};

/// Describes a point file on disk.
///
/// Binary layout: "PCF1", one dtype byte (0 = f32, 1 = f64), n and D as
/// little-endian u64, then n*D little-endian values in row-major order.
/// CSV: one point per line, comma separated; lines starting with '#' are
/// headers and are skipped, as are blank lines.
struct CloudFile {
    CloudFormat format = CloudFormat::binary;
    std::filesystem::path path;
    Dtype dtype = Dtype::f64;
    std::size_t n = 0;
    std::size_t dim = 0;
};

/// From the extension (.bin/.pcf binary, .csv/.txt CSV); otherwise binary when
/// the file starts with the magic, CSV if not.
CloudFormat detect_format(const std::filesystem::path& path);

PointCloud read_cloud(const std::filesystem::path& path);
PointCloud read_cloud(const CloudFile& file);

/// CSV values are written with 17 significant digits; `dtype` only affects binary output.
CloudFile write_cloud(const PointCloud& cloud, const std::filesystem::path& path,
                      CloudFormat format = CloudFormat::binary, Dtype dtype = Dtype::f64);

CloudFormat parse_format(std::string_view text);
Dtype parse_dtype(std::string_view text);

} // namespace prohd
