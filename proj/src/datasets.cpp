#include "prohd/datasets.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "prohd/random.hpp"

namespace prohd {

OffsetMode parse_offset_mode(std::string_view text)
{
    if (text == "b" || text == "b-only")
        return OffsetMode::b_only;
    if (text == "split")
        return OffsetMode::split;
    throw std::invalid_argument("unknown offset mode: " + std::string(text));
}

std::string_view to_string(OffsetMode mode)
{
    return mode == OffsetMode::split ? "split" : "b-only";
}

namespace {

PointCloud uniform_cube(std::size_t n, std::size_t dim, double shift, std::uint64_t seed,
                        std::uint64_t stream)
{
    Rng rng(seed, stream);
    std::vector<double> coords(n * dim);
    for (double& c : coords)
        c = rng.uniform() + shift;
    return PointCloud(std::move(coords), dim);
}

} // namespace

std::pair<PointCloud, PointCloud> generate_random_clouds(std::size_t n_a, std::size_t n_b,
                                                         std::size_t dim, double offset,
                                                         std::uint64_t seed, OffsetMode mode)
{
    if (n_a == 0 || n_b == 0 || dim == 0)
        throw std::invalid_argument("generated clouds need n >= 1 and dim >= 1");
    const double shift_a = mode == OffsetMode::split ? -0.5 * offset : 0.0;
    const double shift_b = mode == OffsetMode::split ? 0.5 * offset : offset;
    return {uniform_cube(n_a, dim, shift_a, seed, 0), uniform_cube(n_b, dim, shift_b, seed, 1)};
}

} // namespace prohd
