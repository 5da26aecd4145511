// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include "oracles.hpp"
#include "prohd/baselines.hpp"
#include "prohd/cloud_io.hpp"
#include "prohd/datasets.hpp"
#include "prohd/experiment.hpp"
#include "prohd/flat_index.hpp"
#include "prohd/geometry.hpp"
#include "prohd/parallel.hpp"
#include "prohd/prohd.hpp"

namespace {

using prohd::PointCloud;
using Clock = std::chrono::steady_clock;

// tolerances
constexpr double kOracleRelTol = 1e-9;       // 1: index vs brute force
constexpr double kOracleBudgetS = 60.0;      // 1: runtime cap
constexpr double kBoundSlack = 1e-9;         // 2-5: absolute slack on inequalities
constexpr double kMaxProhdErrorPct = 10.0;   // 7
constexpr double kScalingLow = 1.0;          // 9
constexpr double kScalingHigh = 4.0;         // 9
constexpr double kCsvRelTol = 1e-12;         // 10

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Outcome {
    bool pass;
    std::string detail;
};

int g_failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& check)
{
    const auto t = Clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    g_failures += !o.pass;
    std::printf("%s criterion %d: %s -- %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), seconds_since(t));
    std::fflush(stdout);
}

// Random instance with sizes in [10, 400] and D from {2, 4, 8, 16}.
std::pair<PointCloud, PointCloud> small_instance(std::uint64_t seed)
{
    prohd::Rng rng(seed, 0xacce);
    const std::size_t dims[] = {2, 4, 8, 16};
    const std::size_t dim = dims[rng.below(4)];
    const std::size_t na = 10 + rng.below(391), nb = 10 + rng.below(391);
    const double shift = rng.uniform();
    return {oracle::random_cloud(na, dim, 2 * seed), oracle::random_cloud(nb, dim, 2 * seed + 1, shift, 1 + shift)};
}

// Point sets whose Hausdorff distance is realized by a point in the middle of
// every projection: A is a sphere plus its centre, B the sphere scaled by 1.05.
std::pair<PointCloud, PointCloud> hollow_instance(std::uint64_t seed)
{
    prohd::Rng rng(seed, 0xb011);
    const std::size_t dim = 2 + rng.below(8);
    const std::size_t n = 50 + rng.below(300);
    std::vector<double> a(dim, 0.0), b;
    for (std::size_t i = 1; i < n; ++i) {
        for (double c : oracle::random_unit(dim, rng)) {
            a.push_back(c);
            b.push_back(1.05 * c);
        }
    }
    return {PointCloud(std::move(a), dim), PointCloud(std::move(b), dim)};
}

prohd::DirectionSet prefix(const prohd::DirectionSet& dirs, std::size_t count)
{
    prohd::DirectionSet s;
    s.entries.assign(dirs.entries.begin(), dirs.entries.begin() + static_cast<std::ptrdiff_t>(count));
    return s;
}

Outcome oracle_equivalence()
{
    const auto t = Clock::now();
    std::size_t bad = 0;
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto [a, b] = small_instance(s);
        const double fast = prohd::hausdorff_via_index(a, b).value;
        const double slow = prohd::hausdorff_bruteforce(a, b).value;
        const double rel = std::abs(fast - slow) / std::max(slow, 1e-300);
        worst = std::max(worst, rel);
        bad += rel > kOracleRelTol;
    }
    const double secs = seconds_since(t);
    return {bad == 0 && secs < kOracleBudgetS,
            fmt("200 instances, %zu mismatches, max rel dev %.3g, %.2fs", bad, worst, secs)};
}

Outcome single_direction_sandwich()
{
    std::size_t checks = 0, bad = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto [a, b] = small_instance(1000 + s);
        const auto h = prohd::hausdorff_bruteforce(a, b);
        const auto both = a.concat(b);
        prohd::Rng rng(s, 0x5a);
        for (int k = 0; k < 5; ++k) {
            const prohd::Direction u(oracle::random_unit(a.dim(), rng));
            const auto hu = prohd::projected_hausdorff_1d(a, b, u);
            for (bool centered : {true, false}) {
                const double d = prohd::delta(both, u, centered);
                ++checks;
                const bool ok = hu.value <= h.value + kBoundSlack &&
                                h.value <= hu.value + 2 * d + kBoundSlack &&
                                hu.directed_ab <= h.directed_ab + kBoundSlack &&
                                h.directed_ab <= hu.directed_ab + 2 * d + kBoundSlack &&
                                hu.directed_ba <= h.directed_ba + kBoundSlack &&
                                h.directed_ba <= hu.directed_ba + 2 * d + kBoundSlack;
                bad += !ok;
            }
        }
    }
    return {bad == 0, fmt("%zu checks (100 instances x 5 directions x 2 frames), %zu violations", checks, bad)};
}

Outcome multi_direction_bound()
{
    std::size_t bad = 0;
    double tightest = INFINITY;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto [a, b] = small_instance(2000 + s);
        const auto r = prohd::proj_hausdorff(a, b, {0.01, prohd::EstimationMode::subset_subset, true, s});
        const double h = prohd::hausdorff_bruteforce(a, b).value;
        const double hu = prohd::multi_direction_hausdorff(a, b, r.directions_used);
        const auto both = a.concat(b);
        for (bool centered : {true, false}) {
            const double d = prohd::min_delta(both, r.directions_used, centered);
            bad += !(hu <= h + kBoundSlack && h <= hu + 2 * d + kBoundSlack);
            tightest = std::min(tightest, hu + 2 * d - h);
        }
    }
    return {bad == 0, fmt("100 instances x 2 frames, %zu violations, smallest upper margin %.3g", bad, tightest)};
}

Outcome monotonicity()
{
    std::size_t bad = 0, steps = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto [a, b] = small_instance(3000 + s);
        const auto both = a.concat(b);
        const auto central = prohd::centroid_indices(a, b, 0.01);
        prohd::DirectionSet all;
        all.entries.push_back({central.direction, prohd::DirectionKind::centroid, 0, 0.0});
        for (auto& e : prohd::pca_directions(both, std::min<std::size_t>(a.dim(), 6), s).entries)
            all.entries.push_back(e);

        double prev_h = -INFINITY, prev_dc = INFINITY, prev_du = INFINITY;
        for (std::size_t c = 1; c <= all.size(); ++c) {
            const auto sub = prefix(all, c);
            const double hu = prohd::multi_direction_hausdorff(a, b, sub);
            const double dc = prohd::min_delta(both, sub, true);
            const double du = prohd::min_delta(both, sub, false);
            bad += !(hu >= prev_h && dc <= prev_dc && du <= prev_du);
            ++steps;
            prev_h = hu;
            prev_dc = dc;
            prev_du = du;
        }
    }
    return {bad == 0, fmt("50 instances, %zu nested steps, %zu violations", steps, bad)};
}

Outcome certified_mode()
{
    std::size_t bad = 0, over = 0, strict_interior = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const bool adversarial = s % 2 == 1;
        const auto [a, b] = adversarial ? hollow_instance(s) : small_instance(4000 + s);
        const double h = prohd::hausdorff_bruteforce(a, b).value;
        prohd::ProHdConfig cfg{0.05, prohd::EstimationMode::subset_full, true, s};
        const double full = prohd::proj_hausdorff(a, b, cfg).estimate;
        bad += full > h + kBoundSlack;
        strict_interior += adversarial && full < h - 1e-6;
        cfg.mode = prohd::EstimationMode::subset_subset;
        over += prohd::proj_hausdorff(a, b, cfg).estimate > h + kBoundSlack;
    }
    return {bad == 0,
            fmt("100 instances (50 with interior maximizers, %zu of them strictly below H), "
                "subset-full violations %zu; subset-subset estimate > H on %zu/100 (reported only)",
                strict_interior, bad, over)};
}

Outcome cardinality()
{
    std::size_t cases = 0, bad = 0;
    const std::size_t sizes[] = {1, 2, 3, 5, 10, 37, 100, 1000, 5000};
    const double alphas[] = {0.001, 0.01, 0.05, 0.2, 0.49, 0.9};
    const std::size_t dims[] = {1, 2, 4, 8, 16};
    auto ceil_mul = [](double f, std::size_t n) {
        return static_cast<std::size_t>(std::ceil(f * static_cast<double>(n)));
    };
    for (std::size_t n : sizes)
        for (double alpha : alphas)
            for (std::size_t dim : dims) {
                const std::size_t na = n, nb = n + 3;
                const auto a = oracle::random_cloud(na, dim, n * 31 + dim);
                const auto b = oracle::random_cloud(nb, dim, n * 37 + dim, 0.1, 1.1);
                const auto r = prohd::proj_hausdorff(a, b, {alpha, prohd::EstimationMode::subset_subset, true, n});
                const auto c = prohd::centroid_indices(a, b, alpha);
                const std::size_t m = r.m;
                for (auto [nx, cent, uni] :
                     {std::tuple{na, c.selection.idx_a.size(), r.size_a},
                      std::tuple{nb, c.selection.idx_b.size(), r.size_b}}) {
                    ++cases;
                    const std::size_t k = std::max<std::size_t>(1, static_cast<std::size_t>(alpha * nx));
                    const bool ok = cent <= std::min(nx, 2 * ceil_mul(alpha, nx)) &&
                                    cent == std::min(nx, 2 * k) && // continuous data: no shared extremes
                                    uni >= cent &&
                                    uni <= std::min(nx, 2 * ceil_mul(alpha, nx) +
                                                            2 * m * ceil_mul(alpha / static_cast<double>(m), nx));
                    bad += !ok;
                }
            }
    return {bad == 0, fmt("%zu (n, alpha, D, side) cases, %zu violations", cases, bad)};
}

struct TrendStats {
    double prohd_err;
    double random_err;
    double prohd_time;
    double exact_time;
};

Outcome effectiveness()
{
    constexpr std::size_t n = 20000, dim = 8;
    std::vector<double> pe, re, pt, et;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto [a, b] = prohd::generate_random_clouds(n, n, dim, 0.1, s);

        auto t = Clock::now();
        const double exact = prohd::hausdorff_via_index(a, b).value;
        et.push_back(seconds_since(t));

        t = Clock::now();
        const auto r = prohd::proj_hausdorff(a, b, {0.01, prohd::EstimationMode::subset_subset, true, s});
        pt.push_back(seconds_since(t));
        pe.push_back(*prohd::relative_error(r.estimate, exact));

        // uniform samples with exactly ProHD's per-side subset sizes
        prohd::Rng ra(s, 0), rb(s, 1);
        const auto ia = ra.sample_without_replacement(a.size(), r.size_a);
        const auto ib = rb.sample_without_replacement(b.size(), r.size_b);
        const double rnd = prohd::hausdorff_via_index(a.subset(ia), b.subset(ib)).value;
        re.push_back(*prohd::relative_error(rnd, exact));
    }
    const double mp = median(pe), mr = median(re), tp = median(pt), te = median(et);
    return {mp < mr && mp <= kMaxProhdErrorPct && tp < te,
            fmt("median error prohd %.2f%% vs random %.2f%% (limit %.0f%%); median time prohd %.3fs vs exact %.3fs",
                mp, mr, kMaxProhdErrorPct, tp, te)};
}

Outcome alpha_sweep()
{
    const auto [a, b] = prohd::generate_random_clouds(20000, 20000, 8, 0.1, 12345);
    const double exact = prohd::hausdorff_via_index(a, b).value;
    const double alphas[] = {0.01, 0.02, 0.05, 0.10, 0.20};
    std::vector<double> med;
    for (double alpha : alphas) {
        std::vector<double> errs;
        for (std::uint64_t s = 0; s < 10; ++s)
            errs.push_back(*prohd::relative_error(
                prohd::proj_hausdorff(a, b, {alpha, prohd::EstimationMode::subset_subset, true, s}).estimate,
                exact));
        med.push_back(median(errs));
    }
    bool ok = true;
    for (std::size_t i = 1; i < med.size(); ++i)
        ok = ok && med[i] <= med[i - 1];
    return {ok, fmt("median error %% at alpha 0.01/0.02/0.05/0.10/0.20: %.3f %.3f %.3f %.3f %.3f", med[0],
                    med[1], med[2], med[3], med[4])};
}

Outcome scaling()
{
    auto median_time = [](std::size_t n) {
        const auto [a, b] = prohd::generate_random_clouds(n, n, 8, 0.1, 77);
        std::vector<double> t;
        for (std::uint64_t s = 0; s < 5; ++s) {
            const auto start = Clock::now();
            (void)prohd::proj_hausdorff(a, b, {0.01, prohd::EstimationMode::subset_subset, true, s});
            t.push_back(seconds_since(start));
        }
        return median(t);
    };
    const double t50 = median_time(50000), t100 = median_time(100000);
    const double ratio = t100 / t50;
    return {ratio >= kScalingLow && ratio <= kScalingHigh,
            fmt("median time 50k %.3fs, 100k %.3fs, ratio %.2f (allowed [%.1f, %.1f])", t50, t100, ratio,
                kScalingLow, kScalingHigh)};
}

Outcome determinism()
{
    const auto [a, b] = prohd::generate_random_clouds(8000, 7000, 16, 0.1, 5);
    const std::size_t max_threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<double> estimates, exact, sampled;
    for (std::size_t threads : {std::size_t{1}, std::size_t{2}, max_threads}) {
        prohd::set_thread_count(threads);
        for (int rep = 0; rep < 2; ++rep) {
            estimates.push_back(prohd::proj_hausdorff(a, b, {0.02, prohd::EstimationMode::subset_subset, true, 9}).estimate);
            estimates.push_back(prohd::proj_hausdorff(a, b, {0.02, prohd::EstimationMode::subset_full, true, 9}).estimate);
            exact.push_back(prohd::hausdorff_via_index(a, b).value);
            sampled.push_back(prohd::random_sampling_hd(a, b, {0.02, 9, prohd::SamplingScheme::uniform}).estimate);
        }
    }
    prohd::set_thread_count(0);
    auto same = [](const std::vector<double>& v, std::size_t stride) {
        for (std::size_t i = stride; i < v.size(); ++i)
            if (v[i] != v[i % stride])
                return false;
        return true;
    };
    const bool runs_ok = same(estimates, 2) && same(exact, 1) && same(sampled, 1);

    const auto dir = std::filesystem::temp_directory_path() / ("prohd-accept-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    prohd::write_cloud(a, dir / "a.bin");
    const bool bin_ok = prohd::read_cloud(dir / "a.bin") == a;
    prohd::write_cloud(a, dir / "a.csv", prohd::CloudFormat::csv);
    const auto back = prohd::read_cloud(dir / "a.csv");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.coords().size(); ++i)
        worst = std::max(worst, std::abs(back.coords()[i] - a.coords()[i]) / std::abs(a.coords()[i]));
    std::filesystem::remove_all(dir);

    return {runs_ok && bin_ok && worst <= kCsvRelTol,
            fmt("threads {1, 2, %zu} x 2 runs identical: %s; binary bit-exact: %s; csv max rel dev %.3g",
                max_threads, runs_ok ? "yes" : "no", bin_ok ? "yes" : "no", worst)};
}

} // namespace

int main()
{
    report(1, "index matches brute force", oracle_equivalence);
    report(2, "single-direction sandwich", single_direction_sandwich);
    report(3, "multi-direction bound on full sets", multi_direction_bound);
    report(4, "monotone in nested direction sets", monotonicity);
    report(5, "subset-full never overestimates", certified_mode);
    report(6, "selection cardinality", cardinality);
    report(7, "random clouds D=8 n=20k effectiveness", effectiveness);
    report(8, "error non-increasing in alpha", alpha_sweep);
    report(9, "near-linear scaling 50k -> 100k", scaling);
    report(10, "determinism and file round trips", determinism);
    std::printf("%d of 10 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
