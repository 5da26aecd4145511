#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prohd/point_cloud.hpp"

namespace prohd {

enum class SamplingScheme { uniform, systematic };

struct SampleSpec {
    double alpha = 0.01;
    std::uint64_t seed = 0;
    SamplingScheme scheme = SamplingScheme::uniform;
};

struct SampledEstimate {
    double estimate = 0.0;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    std::vector<std::size_t> idx_a; ///< sampled rows of a, ascending for uniform, permutation order for systematic
    std::vector<std::size_t> idx_b;
};

/// Per-set sample size for uniform sampling: max(1, ceil(alpha * n)).
std::size_t uniform_sample_size(double alpha, std::size_t n);

/// Stride floor(1 / alpha) used by systematic sampling; needs alpha <= 1/2.
std::size_t systematic_stride(double alpha);

/// Per-set sample size for systematic sampling: ceil(n / stride).
std::size_t systematic_sample_size(double alpha, std::size_t n);

/// Rows drawn by each scheme. Set A uses RNG substream 0, set B substream 1.
std::vector<std::size_t> uniform_sample(std::size_t n, double alpha, std::uint64_t seed,
                                        std::uint64_t stream);
std::vector<std::size_t> systematic_sample(std::size_t n, double alpha, std::uint64_t seed,
                                           std::uint64_t stream);

/// Exact Hausdorff between uniform samples without replacement of each set.
SampledEstimate random_sampling_hd(const PointCloud& a, const PointCloud& b,
                                   const SampleSpec& spec);

/// Exact Hausdorff between every stride-th point of seeded permutations of each set.
SampledEstimate systematic_sampling_hd(const PointCloud& a, const PointCloud& b,
                                       const SampleSpec& spec);

} // namespace prohd
