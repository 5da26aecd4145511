#include "prohd/prohd.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "prohd/flat_index.hpp"
#include "prohd/geometry.hpp"

namespace prohd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::shared_ptr<const PointCloud> borrow(const PointCloud& cloud)
{
    return {std::shared_ptr<void>{}, &cloud};
}

} // namespace

std::string_view to_string(EstimationMode mode)
{
    switch (mode) {
    case EstimationMode::subset_subset:
        return "subset-subset";
    case EstimationMode::subset_full:
        return "subset-full";
    }
    return "unknown";
}

EstimationMode parse_mode(std::string_view text)
{
    if (text == "subset-subset")
        return EstimationMode::subset_subset;
    if (text == "subset-full")
        return EstimationMode::subset_full;
    throw std::invalid_argument("unknown estimation mode: " + std::string(text));
}

std::size_t component_count(std::size_t dim)
{
    std::size_t m = 0;
    while ((m + 1) * (m + 1) <= dim)
        ++m;
    return std::max<std::size_t>(1, m);
}

double multi_direction_hausdorff(const PointCloud& a, const PointCloud& b,
                                 const DirectionSet& dirs)
{
    if (dirs.empty())
        throw std::invalid_argument("direction set is empty");
    double best = 0.0;
    for (const auto& e : dirs.entries)
        best = std::max(best, projected_hausdorff_1d(a, b, e.u).value);
    return best;
}

double min_delta(const PointCloud& cloud_union, const DirectionSet& dirs, bool centered)
{
    if (dirs.empty())
        throw std::invalid_argument("direction set is empty");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : dirs.entries)
        best = std::min(best, delta(cloud_union, e.u, centered));
    return best;
}

ProHdReport proj_hausdorff(const PointCloud& a, const PointCloud& b, const ProHdConfig& cfg)
{
    require_same_dim(a.dim(), b.dim());
    require_fraction(cfg.alpha);

    ProHdReport report;
    report.m = component_count(a.dim());
    report.alpha_pca = cfg.alpha / static_cast<double>(report.m);

    auto t = Clock::now();
    auto central = centroid_indices(a, b, cfg.alpha);
    report.timings.selection += seconds_since(t);

    t = Clock::now();
    const PointCloud stacked = a.concat(b);
    DirectionSet components = pca_directions(stacked, report.m, cfg.seed);
    report.timings.pca += seconds_since(t);

    t = Clock::now();
    const SelectionResult along_pcs =
        extremes_along_directions(a, b, report.alpha_pca, components);
    report.selection.idx_a = merge_indices(central.selection.idx_a, along_pcs.idx_a);
    report.selection.idx_b = merge_indices(central.selection.idx_b, along_pcs.idx_b);
    const PointCloud a_sel = a.subset(report.selection.idx_a);
    const PointCloud b_sel = b.subset(report.selection.idx_b);
    report.size_a = a_sel.size();
    report.size_b = b_sel.size();
    report.timings.selection += seconds_since(t);

    report.directions_used.requested_pca = components.requested_pca;
    report.directions_used.entries.push_back(
        {std::move(central.direction), DirectionKind::centroid, 0, 0.0});
    for (auto& e : components.entries)
        report.directions_used.entries.push_back(std::move(e));

    const bool full = cfg.mode == EstimationMode::subset_full;
    t = Clock::now();
    const FlatIndex index_a(full ? borrow(a) : borrow(a_sel));
    const FlatIndex index_b(full ? borrow(b) : borrow(b_sel));
    report.timings.index += seconds_since(t);

    t = Clock::now();
    HausdorffResult h = hausdorff_via_index(a_sel, index_b, b_sel, index_a);
    report.timings.query += seconds_since(t);

    // map witnesses back to rows of the full clouds
    if (h.directed_ab >= h.directed_ba) {
        h.witness_a = report.selection.idx_a[h.witness_a];
        if (!full)
            h.witness_b = report.selection.idx_b[h.witness_b];
    } else {
        h.witness_b = report.selection.idx_b[h.witness_b];
        if (!full)
            h.witness_a = report.selection.idx_a[h.witness_a];
    }
    report.exact_on_subsets = h;
    report.estimate = h.value;

    t = Clock::now();
    report.min_delta = min_delta(stacked, report.directions_used, cfg.delta_centered);
    report.bound_upper = report.estimate + 2.0 * report.min_delta;
    report.timings.bound += seconds_since(t);

    if (!(report.estimate <= report.bound_upper) || report.size_a > a.size() ||
        report.size_b > b.size())
        throw InvariantViolation("proj_hausdorff produced an inconsistent report");
    return report;
}

} // namespace prohd
