#include "prohd/flat_index.hpp"

#include <algorithm>
#include <cmath>

#include "prohd/detail/distance.hpp"
#include "prohd/parallel.hpp"

namespace prohd {

namespace {

// Queries are processed in tiles of kLanes held coordinate-major in a vector
// type, so one pass over an indexed row advances every query of the tile.
// Each lane still accumulates its squared distance coordinate by coordinate in
// the same order as detail::squared_distance, so the scan agrees bit for bit
// with the brute-force oracle.
constexpr std::size_t kLanes = 8;
constexpr std::size_t kAbandonStride = 4;
using Lanes = double __attribute__((vector_size(kLanes * sizeof(double))));

void scan_tile(const PointCloud& data, const double* queries, std::size_t count,
               detail::Neighbor* best)
{
    const std::size_t dim = data.dim();
    const std::size_t n = data.size();

    // unused lanes replay the first query; their results are dropped
    std::vector<Lanes> tile(dim);
    Lanes bound;
    std::size_t arg[kLanes];
    for (std::size_t q = 0; q < kLanes; ++q) {
        const std::size_t src = q < count ? q : 0;
        for (std::size_t k = 0; k < dim; ++k)
            tile[k][q] = queries[src * dim + k];
        bound[q] = best[src].sq_dist;
        arg[q] = best[src].index;
    }

    for (std::size_t j = 0; j < n; ++j) {
        const double* x = data.data() + j * dim;
        Lanes s = {};
        std::size_t k = 0;
        bool abandoned = false;
        for (;;) {
            const std::size_t stop = std::min(dim, k + kAbandonStride);
            for (; k < stop; ++k) {
                const Lanes d = tile[k] - x[k];
                s += d * d;
            }
            if (k == dim)
                break;
            // partial sums only grow: once every lane is past its bound the row cannot win
            const auto worse = s > bound;
            bool all = true;
            for (std::size_t q = 0; q < kLanes; ++q)
                all &= worse[q] != 0;
            if (all) {
                abandoned = true;
                break;
            }
        }
        if (abandoned)
            continue;
        const auto better = s < bound;
        for (std::size_t q = 0; q < kLanes; ++q) {
            if (better[q]) {
                bound[q] = s[q];
                arg[q] = j;
            }
        }
    }
    for (std::size_t q = 0; q < count; ++q)
        best[q] = {arg[q], bound[q]};
}

std::vector<detail::Neighbor> nearest_all(const PointCloud& data, const PointCloud& queries)
{
    require_same_dim(data.dim(), queries.dim());
    std::vector<detail::Neighbor> out(queries.size());
    const std::size_t tiles = (queries.size() + kLanes - 1) / kLanes;
    parallel_for(tiles, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const std::size_t first = t * kLanes;
            const std::size_t count = std::min(kLanes, queries.size() - first);
            scan_tile(data, queries.data() + first * queries.dim(), count, out.data() + first);
        }
    }, 1);
    return out;
}

} // namespace

FlatIndex::FlatIndex(std::shared_ptr<const PointCloud> data) : data_(std::move(data))
{
    if (!data_)
        throw std::invalid_argument("FlatIndex needs a point cloud");
}

FlatIndex::FlatIndex(PointCloud data)
    : data_(std::make_shared<const PointCloud>(std::move(data)))
{
}

NearestResult FlatIndex::nearest(std::span<const double> query) const
{
    require_same_dim(dim(), query.size());
    detail::Neighbor best;
    scan_tile(*data_, query.data(), 1, &best);
    return {best.index, std::sqrt(best.sq_dist)};
}

std::vector<NearestResult> FlatIndex::nearest_squared_all(const PointCloud& queries) const
{
    const auto raw = nearest_all(*data_, queries);
    std::vector<NearestResult> out(raw.size());
    std::transform(raw.begin(), raw.end(), out.begin(), [](const detail::Neighbor& n) {
        return NearestResult{n.index, n.sq_dist};
    });
    return out;
}

FlatIndex build_flat_index(const PointCloud& cloud) { return FlatIndex(cloud); }

HausdorffResult hausdorff_via_index(const PointCloud& queries_a, const FlatIndex& index_b,
                                    const PointCloud& queries_b, const FlatIndex& index_a)
{
    require_same_dim(queries_a.dim(), queries_b.dim());
    require_same_dim(index_a.dim(), index_b.dim());
    require_same_dim(queries_a.dim(), index_b.dim());
    return detail::reduce_directed(nearest_all(index_b.data(), queries_a),
                                   nearest_all(index_a.data(), queries_b));
}

HausdorffResult hausdorff_via_index(const PointCloud& a, const PointCloud& b)
{
    require_same_dim(a.dim(), b.dim());
    // non-owning handles: both clouds outlive the indices built here
    const FlatIndex index_a(std::shared_ptr<const PointCloud>(std::shared_ptr<void>{}, &a));
    const FlatIndex index_b(std::shared_ptr<const PointCloud>(std::shared_ptr<void>{}, &b));
    return hausdorff_via_index(a, index_b, b, index_a);
}

} // namespace prohd
