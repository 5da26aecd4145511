// prohd: generate point clouds, compute Hausdorff distances, run benchmark sweeps.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 internal invariant violation.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prohd/baselines.hpp"
#include "prohd/cloud_io.hpp"
#include "prohd/datasets.hpp"
#include "prohd/experiment.hpp"
#include "prohd/flat_index.hpp"
#include "prohd/parallel.hpp"
#include "prohd/prohd.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInvariant = 4;

struct GenArgs {
    std::size_t n_a = 1000;
    std::size_t n_b = 1000;
    std::size_t dim = 8;
    double offset = 0.1;
    std::string offset_mode = "b-only";
    std::uint64_t seed = 0;
    std::string out_a;
    std::string out_b;
    std::string format = "bin";
    std::string dtype = "f64";
};

struct HdArgs {
    std::string method = "prohd";
    std::string a;
    std::string b;
    double alpha = 0.01;
    std::string mode = "subset-subset";
    bool uncentered_delta = false;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    bool with_exact = false;
    bool json = false;
};

struct BenchArgs {
    std::string config;
    std::string out;
    std::string format = "csv";
    std::size_t threads = 0;
};

int run_gen(const GenArgs& g)
{
    const auto [a, b] = prohd::generate_random_clouds(g.n_a, g.n_b, g.dim, g.offset, g.seed,
                                                      prohd::parse_offset_mode(g.offset_mode));
    const auto format = prohd::parse_format(g.format);
    const auto dtype = prohd::parse_dtype(g.dtype);
    prohd::write_cloud(a, g.out_a, format, dtype);
    prohd::write_cloud(b, g.out_b, format, dtype);
    std::cout << "wrote " << a.size() << "x" << a.dim() << " to " << g.out_a << " and "
              << b.size() << "x" << b.dim() << " to " << g.out_b << "\n";
    return 0;
}

int run_hd(const HdArgs& h)
{
    using Clock = std::chrono::steady_clock;
    if (h.threads != 0)
        prohd::set_thread_count(h.threads);

    const auto method = prohd::parse_method(h.method);
    const prohd::PointCloud a = prohd::read_cloud(h.a);
    const prohd::PointCloud b = prohd::read_cloud(h.b);
    if (a.dim() != b.dim())
        throw prohd::DataError(prohd::DataErrorCode::ragged_row,
                               "clouds have different dimensions (" + std::to_string(a.dim()) +
                                   " vs " + std::to_string(b.dim()) + ")");

    nlohmann::ordered_json out;
    out["method"] = h.method;
    out["n_a"] = a.size();
    out["n_b"] = b.size();
    out["dim"] = a.dim();

    const auto start = Clock::now();
    double estimate = 0.0;
    switch (method) {
    case prohd::Method::exact: {
        const auto r = prohd::hausdorff_via_index(a, b);
        estimate = r.value;
        out["directed_ab"] = r.directed_ab;
        out["directed_ba"] = r.directed_ba;
        out["witness_a"] = r.witness_a;
        out["witness_b"] = r.witness_b;
        break;
    }
    case prohd::Method::prohd: {
        prohd::ProHdConfig cfg;
        cfg.alpha = h.alpha;
        cfg.mode = prohd::parse_mode(h.mode);
        cfg.delta_centered = !h.uncentered_delta;
        cfg.seed = h.seed;
        const auto r = prohd::proj_hausdorff(a, b, cfg);
        estimate = r.estimate;
        out["alpha"] = h.alpha;
        out["mode"] = h.mode;
        out["m"] = r.m;
        out["min_delta"] = r.min_delta;
        out["bound_upper"] = r.bound_upper;
        out["size_a"] = r.size_a;
        out["size_b"] = r.size_b;
        out["timings"] = {{"selection_s", r.timings.selection},
                          {"pca_s", r.timings.pca},
                          {"index_s", r.timings.index},
                          {"query_s", r.timings.query},
                          {"bound_s", r.timings.bound}};
        break;
    }
    case prohd::Method::random:
    case prohd::Method::systematic: {
        prohd::SampleSpec spec;
        spec.alpha = h.alpha;
        spec.seed = h.seed;
        const bool uniform = method == prohd::Method::random;
        spec.scheme = uniform ? prohd::SamplingScheme::uniform : prohd::SamplingScheme::systematic;
        const auto r =
            uniform ? prohd::random_sampling_hd(a, b, spec) : prohd::systematic_sampling_hd(a, b, spec);
        estimate = r.estimate;
        out["alpha"] = h.alpha;
        out["size_a"] = r.size_a;
        out["size_b"] = r.size_b;
        break;
    }
    }
    out["estimate"] = estimate;
    out["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();

    if (h.with_exact) {
        const double exact = prohd::hausdorff_via_index(a, b).value;
        out["exact"] = exact;
        const auto err = prohd::relative_error(estimate, exact);
        out["relative_error_percent"] = err ? nlohmann::ordered_json(*err) : nullptr;
        if (method == prohd::Method::prohd && h.mode == "subset-full" && estimate > exact + 1e-9)
            throw prohd::InvariantViolation("subset-full estimate exceeds the exact distance");
    }

    if (h.json) {
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& [key, value] : out.items()) {
            if (value.is_object()) {
                for (const auto& [k, v] : value.items())
                    std::cout << key << "." << k << ": " << v.dump() << "\n";
            } else {
                std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                          << "\n";
            }
        }
    }
    return 0;
}

int run_bench(const BenchArgs& args)
{
    if (args.threads != 0)
        prohd::set_thread_count(args.threads);
    std::ifstream in(args.config);
    if (!in)
        throw prohd::DataError(prohd::DataErrorCode::io, "cannot open " + args.config);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bench config is not valid JSON: ") + e.what());
    }
    const auto base_dir = std::filesystem::path(args.config).parent_path();
    const auto configs = prohd::parse_bench_config(j, base_dir);

    std::vector<prohd::ExperimentRecord> records;
    for (const auto& cfg : configs) {
        auto recs = prohd::run_experiment(cfg);
        for (const auto& r : recs) {
            std::cerr << r.method << " alpha=" << r.alpha << " seed=" << r.seed
                      << " estimate=" << r.estimate << " exact=" << r.exact_value << " err%="
                      << (r.relative_error_percent ? std::to_string(*r.relative_error_percent)
                                                   : "undefined")
                      << " t=" << r.wall_time_s << "s\n";
        }
        records.insert(records.end(), recs.begin(), recs.end());
    }
    prohd::emit_results(records, args.out, prohd::parse_result_format(args.format));
    std::cout << "wrote " << records.size() << " records to " << args.out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and projection-guided Hausdorff distances between point clouds"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate two uniform random clouds");
    gen_cmd->add_option("--n-a", gen.n_a, "Points in A")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--n-b", gen.n_b, "Points in B")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--dim", gen.dim, "Dimension")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--offset", gen.offset, "Per-coordinate offset of B")->capture_default_str();
    gen_cmd->add_option("--offset-mode", gen.offset_mode, "b-only or split")
        ->check(CLI::IsMember({"b-only", "b", "split"}))
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    gen_cmd->add_option("--out-a", gen.out_a, "Output path for A")->required();
    gen_cmd->add_option("--out-b", gen.out_b, "Output path for B")->required();
    gen_cmd->add_option("--format", gen.format, "bin or csv")
        ->check(CLI::IsMember({"bin", "csv"}))
        ->capture_default_str();
    gen_cmd->add_option("--dtype", gen.dtype, "f32 or f64 (binary only)")
        ->check(CLI::IsMember({"f32", "f64"}))
        ->capture_default_str();

    HdArgs hd;
    auto* hd_cmd = app.add_subcommand("hd", "Hausdorff distance between two point files");
    hd_cmd->add_option("--method", hd.method, "exact, prohd, random or systematic")
        ->check(CLI::IsMember({"exact", "prohd", "random", "systematic"}))
        ->capture_default_str();
    hd_cmd->add_option("--a", hd.a, "Point file for A")->required();
    hd_cmd->add_option("--b", hd.b, "Point file for B")->required();
    hd_cmd->add_option("--alpha", hd.alpha, "Selection or sampling fraction")->capture_default_str();
    hd_cmd->add_option("--mode", hd.mode, "subset-subset or subset-full")
        ->check(CLI::IsMember({"subset-subset", "subset-full"}))
        ->capture_default_str();
    hd_cmd->add_flag("--uncentered-delta", hd.uncentered_delta,
                     "Measure delta(u) against lines through the origin");
    hd_cmd->add_option("--seed", hd.seed, "Seed for PCA or sampling")->capture_default_str();
    hd_cmd->add_option("--threads", hd.threads, "Worker threads (default: PROHD_THREADS or all cores)");
    hd_cmd->add_flag("--with-exact", hd.with_exact, "Also compute the exact distance and relative error");
    hd_cmd->add_flag("--json", hd.json, "Print one JSON object");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep from a JSON config");
    bench_cmd->add_option("--config", bench.config, "Sweep configuration (JSON)")->required();
    bench_cmd->add_option("--out", bench.out, "Results file")->required();
    bench_cmd->add_option("--format", bench.format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    bench_cmd->add_option("--threads", bench.threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*hd_cmd)
            return run_hd(hd);
        return run_bench(bench);
    } catch (const prohd::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const prohd::DimensionMismatch& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const prohd::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: bad bench config: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
