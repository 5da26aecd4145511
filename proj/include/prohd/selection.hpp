#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prohd/point_cloud.hpp"

namespace prohd {

/// Sorted, duplicate-free row indices chosen from each of two clouds.
struct SelectionResult {
    std::vector<std::size_t> idx_a;
    std::vector<std::size_t> idx_b;

    friend bool operator==(const SelectionResult&, const SelectionResult&) = default;
};

enum class DirectionKind {
    centroid, ///< normalized centroid difference
    pca,      ///< principal component
    fallback, ///< e_1, used when the data offers no informative direction
};

struct DirectionEntry {
    Direction u;
    DirectionKind kind;
    std::size_t rank = 0;  ///< 1-based component rank for pca entries, 0 otherwise
    double variance = 0.0; ///< explained variance for pca entries
};

/// Ordered directions; entry 0 is the centroid direction when present.
struct DirectionSet {
    std::vector<DirectionEntry> entries;
    std::size_t requested_pca = 0; ///< number of components asked for

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
    std::size_t pca_count() const noexcept;
    /// True when fewer informative components than requested were found.
    bool rank_shortfall() const noexcept { return pca_count() < requested_pca; }
};

/// Union of the positions of the k smallest and k largest values.
///
/// Values are ordered by (value, position), i.e. a stable ascending argsort,
/// and the result is returned sorted. Runs in O(n) expected time.
std::vector<std::size_t> extreme_indices(std::span<const double> values, std::size_t k);

/// Per-direction extreme count max(1, floor(alpha * n)).
std::size_t extreme_count(double alpha, std::size_t n);

struct CentroidSelection {
    SelectionResult selection;
    Direction direction;
};

/// Extremes of both clouds along the unit vector from x's mean to y's mean.
/// Falls back to e_1 when the means are closer than 1e-9.
CentroidSelection centroid_indices(const PointCloud& x, const PointCloud& y, double alpha);

/// Top-m principal components of the mean-centred rows of z.
///
/// Seeded randomized subspace iteration (2 oversampling columns, 7 power
/// iterations). Components are unit norm, mutually orthogonal, ordered by
/// decreasing variance, and sign-normalized so the largest-magnitude
/// coordinate is positive. Directions carrying no variance are dropped, so
/// the result may hold fewer than m entries.
DirectionSet pca_top_components(const PointCloud& z, std::size_t m, std::uint64_t seed);

/// Components of [x; y] as pca_top_components, with an e_1 fallback entry
/// when the stacked data has no variance at all.
DirectionSet pca_directions(const PointCloud& stacked, std::size_t m, std::uint64_t seed);

/// Union over every direction in `dirs` of the per-direction extremes.
SelectionResult extremes_along_directions(const PointCloud& x, const PointCloud& y, double alpha,
                                          const DirectionSet& dirs);

struct PcaSelection {
    SelectionResult selection;
    DirectionSet directions;
};

/// Extremes of x and y along each of the top-m components of [x; y],
/// keeping max(1, floor(alpha * n)) from each end per direction.
PcaSelection pca_proj_indices(const PointCloud& x, const PointCloud& y, double alpha,
                              std::size_t m, std::uint64_t seed);

/// Sorted union of two sorted index sets.
std::vector<std::size_t> merge_indices(std::span<const std::size_t> a,
                                       std::span<const std::size_t> b);

void require_fraction(double alpha);

} // namespace prohd
