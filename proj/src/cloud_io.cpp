#include "prohd/cloud_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace prohd {

namespace {

constexpr char kMagic[4] = {'P', 'C', 'F', '1'};
constexpr std::size_t kHeaderBytes = 4 + 1 + 8 + 8;

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError(DataErrorCode::io, "cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw DataError(DataErrorCode::io, "read failure on " + path.string());
    return bytes;
}

template <typename T>
T load_le(const char* p)
{
    using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
    U u = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i)
        u |= static_cast<U>(static_cast<unsigned char>(p[i])) << (8 * i);
    return std::bit_cast<T>(u);
}

template <typename T>
void store_le(std::string& out, T value)
{
    using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
    const U u = std::bit_cast<U>(value);
    for (std::size_t i = 0; i < sizeof(U); ++i)
        out.push_back(static_cast<char>((u >> (8 * i)) & 0xffu));
}

PointCloud parse_binary(const std::string& bytes, const std::string& name)
{
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw DataError(DataErrorCode::bad_magic, name + ": missing PCF1 magic");
    if (bytes.size() < kHeaderBytes)
        throw DataError(DataErrorCode::truncated_payload, name + ": header is truncated");

    const auto dtype = static_cast<unsigned char>(bytes[4]);
    if (dtype > 1)
        throw DataError(DataErrorCode::bad_dtype, name + ": unknown dtype byte " +
                                                      std::to_string(dtype));
    const std::size_t width = dtype == 0 ? 4 : 8;
    const auto n = load_le<std::uint64_t>(bytes.data() + 5);
    const auto dim = load_le<std::uint64_t>(bytes.data() + 13);
    if (n == 0 || dim == 0)
        throw DataError(DataErrorCode::empty, name + ": header declares an empty cloud");

    const std::size_t available = bytes.size() - kHeaderBytes;
    if (dim > available / width || n > available / width / dim)
        throw DataError(DataErrorCode::truncated_payload,
                        name + ": payload shorter than n*D values");
    const std::size_t count = n * dim;
    if (available != count * width)
        throw DataError(DataErrorCode::trailing_data, name + ": bytes after the payload");

    std::vector<double> coords(count);
    const char* p = bytes.data() + kHeaderBytes;
    for (std::size_t i = 0; i < count; ++i, p += width) {
        coords[i] = width == 4 ? static_cast<double>(load_le<float>(p)) : load_le<double>(p);
        if (!std::isfinite(coords[i]))
            throw DataError(DataErrorCode::non_finite,
                            name + ": non-finite value at position " + std::to_string(i));
    }
    return PointCloud(std::move(coords), dim);
}

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

PointCloud parse_csv(const std::string& text, const std::string& name)
{
    std::vector<double> coords;
    std::size_t dim = 0;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;

        std::size_t cols = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            const auto field = trim(body.substr(start, comma == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : comma - start));
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw DataError(DataErrorCode::parse, name + ":" + std::to_string(line_no) +
                                                          ": cannot parse '" +
                                                          std::string(field) + "'");
            if (!std::isfinite(v))
                throw DataError(DataErrorCode::non_finite,
                                name + ":" + std::to_string(line_no) + ": non-finite value");
            coords.push_back(v);
            ++cols;
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (dim == 0)
            dim = cols;
        else if (cols != dim)
            throw DataError(DataErrorCode::ragged_row,
                            name + ":" + std::to_string(line_no) + ": expected " +
                                std::to_string(dim) + " columns, found " + std::to_string(cols));
    }
    if (coords.empty())
        throw DataError(DataErrorCode::empty, name + ": no points");
    return PointCloud(std::move(coords), dim);
}

void spill(const std::filesystem::path& path, const std::string& bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DataError(DataErrorCode::io, "cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw DataError(DataErrorCode::io, "write failure on " + path.string());
}

} // namespace

std::string_view to_string(DataErrorCode code)
{
    switch (code) {
    case DataErrorCode::io: return "io";
    case DataErrorCode::bad_magic: return "bad magic";
    case DataErrorCode::bad_dtype: return "bad dtype";
    case DataErrorCode::truncated_payload: return "truncated payload";
    case DataErrorCode::trailing_data: return "trailing data";
    case DataErrorCode::non_finite: return "non-finite value";
    case DataErrorCode::ragged_row: return "ragged row";
    case DataErrorCode::parse: return "parse error";
    case DataErrorCode::empty: return "empty cloud";
    }
    return "unknown";
}

DataError::DataError(DataErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

CloudFormat detect_format(const std::filesystem::path& path)
{
    const auto ext = path.extension();
    if (ext == ".bin" || ext == ".pcf")
        return CloudFormat::binary;
    if (ext == ".csv" || ext == ".txt")
        return CloudFormat::csv;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError(DataErrorCode::io, "cannot open " + path.string());
    char head[4] = {};
    in.read(head, 4);
    return in.gcount() == 4 && std::memcmp(head, kMagic, 4) == 0 ? CloudFormat::binary
                                                                 : CloudFormat::csv;
}

PointCloud read_cloud(const CloudFile& file)
{
    const std::string bytes = slurp(file.path);
    PointCloud cloud = file.format == CloudFormat::binary ? parse_binary(bytes, file.path.string())
                                                          : parse_csv(bytes, file.path.string());
    if ((file.n != 0 && cloud.size() != file.n) || (file.dim != 0 && cloud.dim() != file.dim))
        throw DataError(DataErrorCode::ragged_row,
                        file.path.string() + ": shape differs from the expected n x D");
    return cloud;
}

PointCloud read_cloud(const std::filesystem::path& path)
{
    CloudFile file;
    file.path = path;
    file.format = detect_format(path);
    return read_cloud(file);
}

CloudFile write_cloud(const PointCloud& cloud, const std::filesystem::path& path,
                      CloudFormat format, Dtype dtype)
{
    std::string bytes;
    if (format == CloudFormat::binary) {
        const std::size_t width = dtype == Dtype::f32 ? 4 : 8;
        bytes.reserve(kHeaderBytes + cloud.coords().size() * width);
        bytes.append(kMagic, 4);
        bytes.push_back(dtype == Dtype::f32 ? 0 : 1);
        store_le<std::uint64_t>(bytes, cloud.size());
        store_le<std::uint64_t>(bytes, cloud.dim());
        for (double v : cloud.coords()) {
            if (dtype == Dtype::f32)
                store_le(bytes, static_cast<float>(v));
            else
                store_le(bytes, v);
        }
    } else {
        char buf[32];
        bytes.reserve(cloud.coords().size() * 24);
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const auto r = cloud.row(i);
            for (std::size_t k = 0; k < r.size(); ++k) {
                const int len = std::snprintf(buf, sizeof buf, "%.17g", r[k]);
                if (k)
                    bytes.push_back(',');
                bytes.append(buf, static_cast<std::size_t>(len));
            }
            bytes.push_back('\n');
        }
    }
    spill(path, bytes);
    return {format, path, dtype, cloud.size(), cloud.dim()};
}

CloudFormat parse_format(std::string_view text)
{
    if (text == "csv")
        return CloudFormat::csv;
    if (text == "bin" || text == "binary")
        return CloudFormat::binary;
    throw std::invalid_argument("unknown cloud format: " + std::string(text));
}

Dtype parse_dtype(std::string_view text)
{
    if (text == "f32")
        return Dtype::f32;
    if (text == "f64")
        return Dtype::f64;
    throw std::invalid_argument("unknown dtype: " + std::string(text));
}

} // namespace prohd
