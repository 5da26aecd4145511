#pragma once

#include <span>
#include <vector>

#include "prohd/point_cloud.hpp"

namespace prohd {

/// Coordinate-wise mean.
std::vector<double> centroid(const PointCloud& cloud);

/// Scalar projections p^T u, one per row.
std::vector<double> project(const PointCloud& cloud, const Direction& u);

/// Largest distance from a point of `cloud_union` to the line spanned by u.
///
/// With `centered` the union mean is subtracted first, which measures the
/// residual against the parallel line through the mean; the uncentered form
/// uses the line through the origin.
double delta(const PointCloud& cloud_union, const Direction& u, bool centered = true);

/// Exact Hausdorff distance between two scalar multisets, O(n log n).
///
/// Witness indices refer to positions in `a` and `b`.
HausdorffResult hausdorff_1d(std::span<const double> a, std::span<const double> b);

/// O(|a||b|) reference for hausdorff_1d.
HausdorffResult hausdorff_1d_bruteforce(std::span<const double> a, std::span<const double> b);

/// Hausdorff distance of the clouds after projecting both onto u.
HausdorffResult projected_hausdorff_1d(const PointCloud& a, const PointCloud& b,
                                       const Direction& u);

/// Exact Hausdorff by nested scan. Meant as the verification oracle.
HausdorffResult hausdorff_bruteforce(const PointCloud& a, const PointCloud& b);

} // namespace prohd
