#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "prohd/point_cloud.hpp"

namespace prohd::detail {

// Squared Euclidean distance accumulated left to right over the coordinates.
// Every exact kernel uses this order so that results agree bit for bit.
inline double squared_distance(const double* x, const double* y, std::size_t dim) noexcept
{
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        const double d = x[k] - y[k];
        s += d * d;
    }
    return s;
}

// Same accumulation order as squared_distance, but gives up once the partial
// sum exceeds `bound`. A return value > bound means "not better"; a value
// <= bound is the exact squared distance.
inline double squared_distance_bounded(const double* x, const double* y, std::size_t dim,
                                       double bound) noexcept
{
    double s = 0.0;
    std::size_t k = 0;
    for (; k + 4 <= dim; k += 4) {
        const double d0 = x[k] - y[k];
        s += d0 * d0;
        const double d1 = x[k + 1] - y[k + 1];
        s += d1 * d1;
        const double d2 = x[k + 2] - y[k + 2];
        s += d2 * d2;
        const double d3 = x[k + 3] - y[k + 3];
        s += d3 * d3;
        if (s > bound)
            return s;
    }
    for (; k < dim; ++k) {
        const double d = x[k] - y[k];
        s += d * d;
    }
    return s;
}

// Nearest-neighbour outcome for one query, squared distance.
struct Neighbor {
    std::size_t index = 0;
    double sq_dist = std::numeric_limits<double>::infinity();
};

// Reduces per-query nearest neighbours of both directions into a HausdorffResult.
// Argmax ties go to the lowest query index.
HausdorffResult reduce_directed(const std::vector<Neighbor>& a_to_b,
                                const std::vector<Neighbor>& b_to_a);

} // namespace prohd::detail
