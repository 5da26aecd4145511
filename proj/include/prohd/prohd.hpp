#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "prohd/point_cloud.hpp"
#include "prohd/selection.hpp"

namespace prohd {

enum class EstimationMode {
    /// Exact Hausdorff between the two selected subsets.
    subset_subset,
    /// Selected points of each side against the full opposite cloud; never
    /// exceeds the true distance.
    subset_full,
};

std::string_view to_string(EstimationMode mode);
EstimationMode parse_mode(std::string_view text);

struct ProHdConfig {
    double alpha = 0.01;
    EstimationMode mode = EstimationMode::subset_subset;
    bool delta_centered = true;
    std::uint64_t seed = 0;
};

/// Wall-clock seconds per phase of one proj_hausdorff call.
struct PhaseTimings {
    double selection = 0.0; ///< centroid direction, projections, extreme picks, subset copy
    double pca = 0.0;       ///< principal component solve
    double index = 0.0;     ///< flat index construction
    double query = 0.0;     ///< nearest-neighbour sweeps
    double bound = 0.0;     ///< residual widths for the error bound

    double total() const noexcept { return selection + pca + index + query + bound; }
};

struct ProHdReport {
    double estimate = 0.0;
    /// Result of the final exact pass; witnesses are indices into the full clouds.
    HausdorffResult exact_on_subsets;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    double min_delta = 0.0;
    double bound_upper = 0.0;
    std::size_t m = 0;           ///< principal components requested
    double alpha_pca = 0.0;      ///< per-component fraction alpha / m
    DirectionSet directions_used; ///< centroid direction first, then components
    SelectionResult selection;
    PhaseTimings timings;
};

/// Number of principal directions for dimension D: max(1, floor(sqrt(D))).
std::size_t component_count(std::size_t dim);

/// Projection-guided Hausdorff approximation with its error bound.
///
/// Keeps the extremes along the centroid direction (fraction alpha) and the
/// top-m principal components (fraction alpha / m each), then runs an exact
/// nearest-neighbour Hausdorff pass on the kept points. The report carries
/// [estimate, estimate + 2 min delta(u)] over the directions used.
ProHdReport proj_hausdorff(const PointCloud& a, const PointCloud& b, const ProHdConfig& cfg = {});

/// Largest full-set 1D projected Hausdorff distance over `dirs`.
double multi_direction_hausdorff(const PointCloud& a, const PointCloud& b,
                                 const DirectionSet& dirs);

/// Smallest residual width delta(u) over `dirs`, measured on a union cloud.
double min_delta(const PointCloud& cloud_union, const DirectionSet& dirs, bool centered = true);

} // namespace prohd
