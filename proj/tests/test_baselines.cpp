#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "prohd/baselines.hpp"
#include "prohd/geometry.hpp"

using prohd::PointCloud;

namespace {

prohd::SampleSpec spec(double alpha, std::uint64_t seed, prohd::SamplingScheme scheme)
{
    prohd::SampleSpec s;
    s.alpha = alpha;
    s.seed = seed;
    s.scheme = scheme;
    return s;
}

bool distinct_in_range(const std::vector<std::size_t>& idx, std::size_t n)
{
    const std::set<std::size_t> u(idx.begin(), idx.end());
    return u.size() == idx.size() && (idx.empty() || *u.rbegin() < n);
}

} // namespace

TEST_CASE("sample size formulas")
{
    CHECK(prohd::uniform_sample_size(0.01, 1000) == 10);
    CHECK(prohd::uniform_sample_size(0.01, 1001) == 11);
    CHECK(prohd::uniform_sample_size(0.001, 10) == 1);
    CHECK(prohd::uniform_sample_size(0.999, 10) == 10);

    CHECK(prohd::systematic_stride(0.34) == 2);
    CHECK(prohd::systematic_stride(0.5) == 2);
    CHECK(prohd::systematic_stride(0.1) == 10);
    CHECK(prohd::systematic_stride(0.01) == 100);
    CHECK(prohd::systematic_sample_size(0.34, 10) == 5);
    CHECK_THROWS_AS(prohd::systematic_stride(0.51), std::invalid_argument);

    prohd::Rng rng(4);
    for (int rep = 0; rep < 500; ++rep) {
        const std::size_t n = 1 + rng.below(5000);
        const double alpha = 0.001 + 0.49 * rng.uniform();
        const auto u = prohd::uniform_sample(n, alpha, rep, 0);
        const auto want = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n))));
        CHECK(u.size() == std::min(n, want));
        CHECK(distinct_in_range(u, n));

        const auto s = prohd::systematic_sample(n, alpha, rep, 0);
        const auto stride = static_cast<std::size_t>(std::floor(1.0 / alpha));
        CHECK(s.size() == (n + stride - 1) / stride);
        CHECK(distinct_in_range(s, n));
    }
}

TEST_CASE("random sampling")
{
    const auto a = oracle::random_cloud(1000, 4, 1);
    const auto b = oracle::random_cloud(1000, 4, 2, 0.1, 1.1);
    const auto uni = prohd::SamplingScheme::uniform;

    const auto r = prohd::random_sampling_hd(a, b, spec(0.01, 5, uni));
    CHECK(r.size_a == 10);
    CHECK(r.size_b == 10);
    CHECK(r.idx_a.size() == 10);
    CHECK(distinct_in_range(r.idx_a, a.size()));
    CHECK(distinct_in_range(r.idx_b, b.size()));
    // genuine subsets: the estimate is the exact distance of the claimed rows
    CHECK(r.estimate ==
          prohd::hausdorff_bruteforce(a.subset(r.idx_a), b.subset(r.idx_b)).value);

    CHECK(prohd::random_sampling_hd(a, b, spec(0.01, 5, uni)).estimate == r.estimate);
    CHECK(prohd::random_sampling_hd(a, b, spec(0.01, 6, uni)).idx_a != r.idx_a);

    const auto all = prohd::random_sampling_hd(a, b, spec(0.9995, 1, uni));
    CHECK(all.size_a == 1000);
    CHECK(all.estimate == prohd::hausdorff_bruteforce(a, b).value);

    CHECK_THROWS_AS(prohd::random_sampling_hd(a, oracle::random_cloud(10, 3, 1), spec(0.1, 0, uni)),
                    prohd::DimensionMismatch);
    CHECK_THROWS_AS(prohd::random_sampling_hd(a, b, spec(0.1, 0, prohd::SamplingScheme::systematic)),
                    std::invalid_argument);
    CHECK_THROWS_AS(prohd::random_sampling_hd(a, b, spec(0.0, 0, uni)), std::invalid_argument);
}

TEST_CASE("systematic sampling")
{
    const auto sys = prohd::SamplingScheme::systematic;
    const auto a10 = oracle::random_cloud(10, 2, 1);
    const auto b10 = oracle::random_cloud(10, 2, 2);
    const auto r = prohd::systematic_sampling_hd(a10, b10, spec(0.34, 3, sys));
    CHECK(r.size_a == 5);
    CHECK(r.size_b == 5);
    CHECK(prohd::systematic_sampling_hd(a10, b10, spec(0.5, 3, sys)).size_a == 5);
    CHECK_THROWS_AS(prohd::systematic_sampling_hd(a10, b10, spec(0.6, 3, sys)), std::invalid_argument);

    const auto a = oracle::random_cloud(1003, 5, 3);
    const auto b = oracle::random_cloud(998, 5, 4, 0.1, 1.1);
    const auto s = prohd::systematic_sampling_hd(a, b, spec(0.05, 9, sys));
    CHECK(s.size_a == 51);
    CHECK(s.size_b == 50);
    CHECK(distinct_in_range(s.idx_a, a.size()));
    CHECK(s.estimate == prohd::hausdorff_bruteforce(a.subset(s.idx_a), b.subset(s.idx_b)).value);
    CHECK(prohd::systematic_sampling_hd(a, b, spec(0.05, 9, sys)).estimate == s.estimate);

    // every stride-th entry of the seeded permutation, starting at the first
    const auto perm = prohd::Rng(9, 0).permutation(a.size());
    const auto idx = prohd::systematic_sample(a.size(), 0.05, 9, 0);
    for (std::size_t i = 0; i < idx.size(); ++i)
        CHECK(idx[i] == perm[20 * i]);

    CHECK_THROWS_AS(prohd::systematic_sampling_hd(a, b, spec(0.05, 9, prohd::SamplingScheme::uniform)),
                    std::invalid_argument);
}
