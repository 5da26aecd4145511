#include "prohd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prohd/detail/distance.hpp"
#include "prohd/parallel.hpp"

namespace prohd {

namespace detail {

HausdorffResult reduce_directed(const std::vector<Neighbor>& a_to_b,
                                const std::vector<Neighbor>& b_to_a)
{
    auto argmax = [](const std::vector<Neighbor>& v) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i].sq_dist > v[best].sq_dist)
                best = i;
        }
        return best;
    };
    const std::size_t ia = argmax(a_to_b);
    const std::size_t ib = argmax(b_to_a);

    HausdorffResult r;
    r.directed_ab = std::sqrt(a_to_b[ia].sq_dist);
    r.directed_ba = std::sqrt(b_to_a[ib].sq_dist);
    if (a_to_b[ia].sq_dist >= b_to_a[ib].sq_dist) {
        r.value = r.directed_ab;
        r.witness_a = ia;
        r.witness_b = a_to_b[ia].index;
    } else {
        r.value = r.directed_ba;
        r.witness_a = b_to_a[ib].index;
        r.witness_b = ib;
    }
    return r;
}

} // namespace detail

std::vector<double> centroid(const PointCloud& cloud)
{
    const std::size_t dim = cloud.dim();
    std::vector<double> c(dim, 0.0);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto r = cloud.row(i);
        for (std::size_t k = 0; k < dim; ++k)
            c[k] += r[k];
    }
    const double n = static_cast<double>(cloud.size());
    for (double& v : c)
        v /= n;
    return c;
}

std::vector<double> project(const PointCloud& cloud, const Direction& u)
{
    require_same_dim(cloud.dim(), u.dim());
    const std::size_t dim = cloud.dim();
    const auto uc = u.components();
    std::vector<double> out(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const double* p = cloud.data() + i * dim;
        double s = 0.0;
        for (std::size_t k = 0; k < dim; ++k)
            s += p[k] * uc[k];
        out[i] = s;
    }
    return out;
}

double delta(const PointCloud& cloud_union, const Direction& u, bool centered)
{
    require_same_dim(cloud_union.dim(), u.dim());
    const std::size_t dim = cloud_union.dim();
    const auto uc = u.components();
    std::vector<double> origin(dim, 0.0);
    if (centered)
        origin = centroid(cloud_union);

    std::vector<double> p(dim);
    double worst = 0.0;
    for (std::size_t i = 0; i < cloud_union.size(); ++i) {
        const auto r = cloud_union.row(i);
        double t = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            p[k] = r[k] - origin[k];
            t += p[k] * uc[k];
        }
        double sq = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double e = p[k] - t * uc[k];
            sq += e * e;
        }
        worst = std::max(worst, sq);
    }
    return std::sqrt(worst);
}

namespace {

struct SortedScalars {
    std::vector<double> values;        // ascending
    std::vector<std::size_t> index;    // original position of values[i]
    std::vector<std::size_t> run_head; // lowest original index among equal values

    explicit SortedScalars(std::span<const double> v)
    {
        std::vector<std::size_t> order(v.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return v[x] < v[y] || (v[x] == v[y] && x < y);
        });
        values.resize(v.size());
        index = order;
        run_head.resize(v.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            values[i] = v[order[i]];
            run_head[i] = (i > 0 && values[i] == values[i - 1]) ? run_head[i - 1] : order[i];
        }
    }

    detail::Neighbor nearest(double q) const
    {
        const auto it = std::lower_bound(values.begin(), values.end(), q);
        const std::size_t pos = static_cast<std::size_t>(it - values.begin());
        detail::Neighbor best;
        if (pos < values.size()) {
            const double d = values[pos] - q;
            best = {index[pos], d * d};
        }
        if (pos > 0) {
            const double d = q - values[pos - 1];
            const detail::Neighbor left{run_head[pos - 1], d * d};
            if (left.sq_dist < best.sq_dist ||
                (left.sq_dist == best.sq_dist && left.index < best.index))
                best = left;
        }
        return best;
    }
};

std::vector<detail::Neighbor> nearest_1d(std::span<const double> queries,
                                         const SortedScalars& target)
{
    std::vector<detail::Neighbor> out(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i)
        out[i] = target.nearest(queries[i]);
    return out;
}

std::vector<detail::Neighbor> nearest_1d_bruteforce(std::span<const double> queries,
                                                    std::span<const double> target)
{
    std::vector<detail::Neighbor> out(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        detail::Neighbor best;
        for (std::size_t j = 0; j < target.size(); ++j) {
            const double d = queries[i] - target[j];
            if (d * d < best.sq_dist)
                best = {j, d * d};
        }
        out[i] = best;
    }
    return out;
}

void require_nonempty(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("Hausdorff distance needs two non-empty sets");
}

std::vector<detail::Neighbor> nearest_bruteforce(const PointCloud& queries,
                                                 const PointCloud& target)
{
    const std::size_t dim = queries.dim();
    std::vector<detail::Neighbor> out(queries.size());
    parallel_for(queries.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double* q = queries.data() + i * dim;
            detail::Neighbor best;
            for (std::size_t j = 0; j < target.size(); ++j) {
                const double s = detail::squared_distance(q, target.data() + j * dim, dim);
                if (s < best.sq_dist)
                    best = {j, s};
            }
            out[i] = best;
        }
    }, 16);
    return out;
}

} // namespace

HausdorffResult hausdorff_1d(std::span<const double> a, std::span<const double> b)
{
    require_nonempty(a, b);
    const SortedScalars sa(a), sb(b);
    return detail::reduce_directed(nearest_1d(a, sb), nearest_1d(b, sa));
}

HausdorffResult hausdorff_1d_bruteforce(std::span<const double> a, std::span<const double> b)
{
    require_nonempty(a, b);
    return detail::reduce_directed(nearest_1d_bruteforce(a, b), nearest_1d_bruteforce(b, a));
}

HausdorffResult projected_hausdorff_1d(const PointCloud& a, const PointCloud& b,
                                       const Direction& u)
{
    require_same_dim(a.dim(), b.dim());
    const auto pa = project(a, u);
    const auto pb = project(b, u);
    return hausdorff_1d(pa, pb);
}

HausdorffResult hausdorff_bruteforce(const PointCloud& a, const PointCloud& b)
{
    require_same_dim(a.dim(), b.dim());
    return detail::reduce_directed(nearest_bruteforce(a, b), nearest_bruteforce(b, a));
}

} // namespace prohd
