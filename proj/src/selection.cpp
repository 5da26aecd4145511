#include "prohd/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "prohd/geometry.hpp"

namespace prohd {

void require_fraction(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("fraction alpha must lie in (0, 1)");
}

std::size_t extreme_count(double alpha, std::size_t n)
{
    const auto k = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n)));
    return std::max<std::size_t>(1, k);
}

std::vector<std::size_t> extreme_indices(std::span<const double> values, std::size_t k)
{
    const std::size_t n = values.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("extreme count k must satisfy 1 <= k <= n");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (2 * k >= n)
        return order;

    const auto less = [&](std::size_t x, std::size_t y) {
        return values[x] < values[y] || (values[x] == values[y] && x < y);
    };
    // after these two partitions: [0,k) are the k smallest, [n-k,n) the k largest
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                     less);
    std::nth_element(order.begin() + static_cast<std::ptrdiff_t>(k),
                     order.begin() + static_cast<std::ptrdiff_t>(n - k), order.end(), less);

    std::vector<std::size_t> out;
    out.reserve(2 * k);
    out.insert(out.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), order.end() - static_cast<std::ptrdiff_t>(k), order.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> merge_indices(std::span<const std::size_t> a,
                                       std::span<const std::size_t> b)
{
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

SelectionResult extremes_along(const PointCloud& x, const PointCloud& y, const Direction& u,
                               double alpha)
{
    const auto px = project(x, u);
    const auto py = project(y, u);
    return {extreme_indices(px, extreme_count(alpha, x.size())),
            extreme_indices(py, extreme_count(alpha, y.size()))};
}

} // namespace

CentroidSelection centroid_indices(const PointCloud& x, const PointCloud& y, double alpha)
{
    require_same_dim(x.dim(), y.dim());
    require_fraction(alpha);

    const auto cx = centroid(x);
    const auto cy = centroid(y);
    std::vector<double> diff(x.dim());
    double sq = 0.0;
    for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = cy[k] - cx[k];
        sq += diff[k] * diff[k];
    }
    Direction u = std::sqrt(sq) < 1e-9 ? Direction::axis(x.dim(), 0) : Direction(std::move(diff));

    auto selection = extremes_along(x, y, u, alpha);
    return {std::move(selection), std::move(u)};
}

DirectionSet pca_directions(const PointCloud& stacked, std::size_t m, std::uint64_t seed)
{
    DirectionSet dirs = pca_top_components(stacked, m, seed);
    if (dirs.empty()) {
        // zero variance: every direction ranks the points identically up to
        // rounding, so select along e_1 to keep both index sets non-empty
        dirs.entries.push_back({Direction::axis(stacked.dim(), 0), DirectionKind::fallback, 0, 0.0});
    }
    return dirs;
}

SelectionResult extremes_along_directions(const PointCloud& x, const PointCloud& y, double alpha,
                                          const DirectionSet& dirs)
{
    require_same_dim(x.dim(), y.dim());
    require_fraction(alpha);
    SelectionResult out;
    for (const auto& entry : dirs.entries) {
        const auto s = extremes_along(x, y, entry.u, alpha);
        out.idx_a = merge_indices(out.idx_a, s.idx_a);
        out.idx_b = merge_indices(out.idx_b, s.idx_b);
    }
    return out;
}

PcaSelection pca_proj_indices(const PointCloud& x, const PointCloud& y, double alpha,
                              std::size_t m, std::uint64_t seed)
{
    require_same_dim(x.dim(), y.dim());
    require_fraction(alpha);
    auto dirs = pca_directions(x.concat(y), m, seed);
    auto selection = extremes_along_directions(x, y, alpha, dirs);
    return {std::move(selection), std::move(dirs)};
}

} // namespace prohd
