#include "prohd/point_cloud.hpp"

#include <cmath>

namespace prohd {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                            ", got " + std::to_string(actual))
{
}

void require_same_dim(std::size_t expected, std::size_t actual)
{
    if (expected != actual)
        throw DimensionMismatch(expected, actual);
}

PointCloud::PointCloud(std::vector<double> coords, std::size_t dim)
    : coords_(std::move(coords)), dim_(dim)
{
    if (dim_ == 0)
        throw std::invalid_argument("point cloud dimension must be >= 1");
    if (coords_.empty())
        throw std::invalid_argument("point cloud must contain at least one point");
    if (coords_.size() % dim_ != 0)
        throw std::invalid_argument("coordinate count is not a multiple of the dimension");
    for (double c : coords_) {
        if (!std::isfinite(c))
            throw std::invalid_argument("point cloud contains a non-finite coordinate");
    }
    n_ = coords_.size() / dim_;
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows)
{
    if (rows.empty())
        throw std::invalid_argument("point cloud must contain at least one point");
    const std::size_t dim = rows.front().size();
    std::vector<double> coords;
    coords.reserve(rows.size() * dim);
    for (const auto& r : rows) {
        if (r.size() != dim)
            throw DimensionMismatch(dim, r.size());
        coords.insert(coords.end(), r.begin(), r.end());
    }
    return PointCloud(std::move(coords), dim);
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const
{
    std::vector<double> out;
    out.reserve(indices.size() * dim_);
    for (std::size_t i : indices) {
        if (i >= n_)
            throw std::out_of_range("subset index out of range");
        const auto r = row(i);
        out.insert(out.end(), r.begin(), r.end());
    }
    return PointCloud(std::move(out), dim_);
}

PointCloud PointCloud::concat(const PointCloud& other) const
{
    require_same_dim(dim_, other.dim_);
    std::vector<double> out;
    out.reserve(coords_.size() + other.coords_.size());
    out.insert(out.end(), coords_.begin(), coords_.end());
    out.insert(out.end(), other.coords_.begin(), other.coords_.end());
    return PointCloud(std::move(out), dim_);
}

Direction::Direction(std::vector<double> components) : u_(std::move(components))
{
    if (u_.empty())
        throw std::invalid_argument("direction must have dimension >= 1");
    double sq = 0.0;
    for (double c : u_) {
        if (!std::isfinite(c))
            throw std::invalid_argument("direction contains a non-finite component");
        sq += c * c;
    }
    const double norm = std::sqrt(sq);
    if (norm == 0.0)
        throw std::invalid_argument("direction must be non-zero");
    for (double& c : u_)
        c /= norm;
}

Direction Direction::axis(std::size_t dim, std::size_t axis)
{
    if (axis >= dim)
        throw std::out_of_range("axis out of range");
    std::vector<double> e(dim, 0.0);
    e[axis] = 1.0;
    return Direction(std::move(e));
}

} // namespace prohd
