#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "prohd/point_cloud.hpp"

namespace prohd {

struct NearestResult {
    std::size_t index = 0;
    double distance = 0.0;
};

/// Exact nearest-neighbour index backed by a full blocked scan.
///
/// Shares ownership of the indexed cloud, so the index stays valid after the
/// caller's copy goes away. Immutable once built; concurrent queries are safe.
class FlatIndex {
public:
    explicit FlatIndex(std::shared_ptr<const PointCloud> data);
    explicit FlatIndex(PointCloud data);

    std::size_t size() const noexcept { return data_->size(); }
    std::size_t dim() const noexcept { return data_->dim(); }
    const PointCloud& data() const noexcept { return *data_; }

    /// Exact 1-NN of `query`; ties go to the lowest index.
    NearestResult nearest(std::span<const double> query) const;

    /// 1-NN of every row of `queries` (parallel over queries). Distances are squared.
    std::vector<NearestResult> nearest_squared_all(const PointCloud& queries) const;

private:
    std::shared_ptr<const PointCloud> data_;
};

FlatIndex build_flat_index(const PointCloud& cloud);

/// Exact Hausdorff via one flat index per side. Bit-identical to hausdorff_bruteforce.
HausdorffResult hausdorff_via_index(const PointCloud& a, const PointCloud& b);

/// Same as hausdorff_via_index with indices supplied by the caller, which lets
/// query subsets be compared against prebuilt indices over full clouds.
HausdorffResult hausdorff_via_index(const PointCloud& queries_a, const FlatIndex& index_b,
                                    const PointCloud& queries_b, const FlatIndex& index_a);

} // namespace prohd
