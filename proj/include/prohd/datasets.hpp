#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

#include "prohd/point_cloud.hpp"

namespace prohd {

/// Which cloud carries the offset.
enum class OffsetMode {
    b_only, ///< A in [0,1]^D, B in [offset, 1+offset]^D
    split,  ///< A shifted by -offset/2, B by +offset/2 (same relative shift)
};

OffsetMode parse_offset_mode(std::string_view text);
std::string_view to_string(OffsetMode mode);

/// Two uniform random clouds in the unit cube, B displaced by `offset` per
/// coordinate. A draws from RNG substream 0 and B from substream 1, so the
/// clouds are fully determined by (seed, n_a, n_b, dim, offset, mode).
std::pair<PointCloud, PointCloud> generate_random_clouds(std::size_t n_a, std::size_t n_b,
                                                         std::size_t dim, double offset,
                                                         std::uint64_t seed,
                                                         OffsetMode mode = OffsetMode::b_only);

} // namespace prohd
