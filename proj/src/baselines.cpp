#include "prohd/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "prohd/flat_index.hpp"
#include "prohd/random.hpp"
#include "prohd/selection.hpp"

namespace prohd {

std::size_t uniform_sample_size(double alpha, std::size_t n)
{
    require_fraction(alpha);
    const auto k = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n)));
    return std::clamp<std::size_t>(k, 1, n);
}

std::size_t systematic_stride(double alpha)
{
    require_fraction(alpha);
    if (alpha > 0.5)
        throw std::invalid_argument("systematic sampling needs alpha <= 1/2 (stride >= 2)");
    return static_cast<std::size_t>(std::floor(1.0 / alpha));
}

std::size_t systematic_sample_size(double alpha, std::size_t n)
{
    const std::size_t stride = systematic_stride(alpha);
    return (n + stride - 1) / stride;
}

std::vector<std::size_t> uniform_sample(std::size_t n, double alpha, std::uint64_t seed,
                                        std::uint64_t stream)
{
    Rng rng(seed, stream);
    return rng.sample_without_replacement(n, uniform_sample_size(alpha, n));
}

std::vector<std::size_t> systematic_sample(std::size_t n, double alpha, std::uint64_t seed,
                                           std::uint64_t stream)
{
    const std::size_t stride = systematic_stride(alpha);
    Rng rng(seed, stream);
    const auto perm = rng.permutation(n);
    std::vector<std::size_t> out;
    out.reserve((n + stride - 1) / stride);
    for (std::size_t i = 0; i < n; i += stride)
        out.push_back(perm[i]);
    return out;
}

namespace {

SampledEstimate estimate_on(const PointCloud& a, const PointCloud& b,
                            std::vector<std::size_t> idx_a, std::vector<std::size_t> idx_b)
{
    SampledEstimate out;
    out.estimate = hausdorff_via_index(a.subset(idx_a), b.subset(idx_b)).value;
    out.size_a = idx_a.size();
    out.size_b = idx_b.size();
    out.idx_a = std::move(idx_a);
    out.idx_b = std::move(idx_b);
    return out;
}

} // namespace

SampledEstimate random_sampling_hd(const PointCloud& a, const PointCloud& b,
                                   const SampleSpec& spec)
{
    require_same_dim(a.dim(), b.dim());
    if (spec.scheme != SamplingScheme::uniform)
        throw std::invalid_argument("random_sampling_hd needs the uniform scheme");
    return estimate_on(a, b, uniform_sample(a.size(), spec.alpha, spec.seed, 0),
                       uniform_sample(b.size(), spec.alpha, spec.seed, 1));
}

SampledEstimate systematic_sampling_hd(const PointCloud& a, const PointCloud& b,
                                       const SampleSpec& spec)
{
    require_same_dim(a.dim(), b.dim());
    if (spec.scheme != SamplingScheme::systematic)
        throw std::invalid_argument("systematic_sampling_hd needs the systematic scheme");
    return estimate_on(a, b, systematic_sample(a.size(), spec.alpha, spec.seed, 0),
                       systematic_sample(b.size(), spec.alpha, spec.seed, 1));
}

} // namespace prohd
