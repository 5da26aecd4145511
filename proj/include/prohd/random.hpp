#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace prohd {

/// Seedable generator whose output is identical on every platform.
///
/// The engine is std::mt19937_64 (its sequence is fixed by the standard).
/// The std distributions are implementation-defined, so all derived draws
/// (bounded integers, uniform reals, normals, shuffles) are implemented here.
/// Independent substreams come from mixing (seed, stream) through SplitMix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [0, bound), bound >= 1, without modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// Standard normal draw (Marsaglia polar method).
    double normal();

    /// Fisher-Yates permutation of 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n);

    /// k distinct indices from [0, n), returned sorted ascending.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace prohd
