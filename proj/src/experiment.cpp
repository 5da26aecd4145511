#include "prohd/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "prohd/baselines.hpp"
#include "prohd/cloud_io.hpp"
#include "prohd/flat_index.hpp"
#include "prohd/parallel.hpp"

namespace prohd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class ThreadBudget {
public:
    explicit ThreadBudget(std::size_t threads) : previous_(thread_count())
    {
        if (threads != 0)
            set_thread_count(threads);
    }
    ~ThreadBudget() { set_thread_count(previous_); }
    ThreadBudget(const ThreadBudget&) = delete;
    ThreadBudget& operator=(const ThreadBudget&) = delete;

private:
    std::size_t previous_;
};

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string default_dataset_id(const DatasetSpec& spec)
{
    if (const auto* g = std::get_if<GeneratedDataset>(&spec)) {
        std::ostringstream os;
        os << "uniform-" << g->n_a << "x" << g->n_b << "-d" << g->dim << "-offset"
           << format_double(g->offset);
        if (g->offset_mode == OffsetMode::split)
            os << "-split";
        return os.str();
    }
    const auto& f = std::get<FileDataset>(spec);
    return f.a.filename().string() + "|" + f.b.filename().string();
}

struct Instance {
    PointCloud a;
    PointCloud b;
};

Instance load_instance(const DatasetSpec& spec, std::uint64_t seed)
{
    if (const auto* g = std::get_if<GeneratedDataset>(&spec)) {
        auto [a, b] = generate_random_clouds(g->n_a, g->n_b, g->dim, g->offset,
                                             g->seed.value_or(seed), g->offset_mode);
        return {std::move(a), std::move(b)};
    }
    const auto& f = std::get<FileDataset>(spec);
    try {
        return {read_cloud(f.a), read_cloud(f.b)};
    } catch (const DataError& e) {
        throw DataError(e.code(), std::string("loading dataset: ") + e.what());
    }
}

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback)
{
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::vector<nlohmann::json> as_list(const nlohmann::json& j)
{
    if (j.is_array())
        return {j.begin(), j.end()};
    return {j};
}

ExperimentConfig parse_one(const nlohmann::json& j, const std::filesystem::path& base_dir)
{
    ExperimentConfig cfg;
    cfg.mode = parse_mode(get_or<std::string>(j, "mode", "subset-subset"));
    cfg.delta_centered = get_or(j, "delta_centered", true);
    cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
    cfg.repetitions = get_or<std::size_t>(j, "repetitions", 1);
    cfg.seeds = get_or(j, "seeds", std::vector<std::uint64_t>{});
    cfg.threads = get_or<std::size_t>(j, "threads", 0);
    cfg.dataset_id = get_or<std::string>(j, "dataset_id", "");
    if (!cfg.seeds.empty())
        cfg.repetitions = cfg.seeds.size();
    if (cfg.repetitions < 1)
        throw std::invalid_argument("repetitions must be >= 1");

    if (!j.contains("dataset"))
        throw std::invalid_argument("experiment needs a \"dataset\" entry");
    const auto& d = j.at("dataset");
    if (d.contains("generate")) {
        const auto& g = d.at("generate");
        GeneratedDataset gen;
        gen.n_a = g.at("n_a").get<std::size_t>();
        gen.n_b = g.at("n_b").get<std::size_t>();
        gen.dim = g.at("dim").get<std::size_t>();
        gen.offset = get_or(g, "offset", 0.1);
        gen.offset_mode = parse_offset_mode(get_or<std::string>(g, "offset_mode", "b-only"));
        if (g.contains("seed"))
            gen.seed = g.at("seed").get<std::uint64_t>();
        cfg.dataset = gen;
    } else if (d.contains("files")) {
        const auto& f = d.at("files");
        auto resolve = [&](const std::string& p) {
            std::filesystem::path path(p);
            return path.is_relative() ? base_dir / path : path;
        };
        cfg.dataset = FileDataset{resolve(f.at("a").get<std::string>()),
                                  resolve(f.at("b").get<std::string>())};
    } else {
        throw std::invalid_argument("dataset must contain \"generate\" or \"files\"");
    }
    return cfg;
}

} // namespace

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::exact: return "exact";
    case Method::prohd: return "prohd";
    case Method::random: return "random";
    case Method::systematic: return "systematic";
    }
    return "unknown";
}

Method parse_method(std::string_view text)
{
    for (auto m : {Method::exact, Method::prohd, Method::random, Method::systematic}) {
        if (text == to_string(m))
            return m;
    }
    throw std::invalid_argument("unknown method: " + std::string(text));
}

std::optional<double> relative_error(double estimate, double exact)
{
    if (exact > 0.0)
        return std::abs(estimate - exact) / exact * 100.0;
    if (estimate == exact)
        return 0.0;
    return std::nullopt;
}

const std::vector<std::string>& record_columns()
{
    static const std::vector<std::string> cols = {
        "method",       "dataset",          "n_a",        "n_b",          "dim",
        "alpha",        "seed",             "estimate",   "exact_value",  "relative_error_percent",
        "bound_upper",  "size_a",           "size_b",     "wall_time_s",  "time_selection_s",
        "time_pca_s",   "time_index_s",     "time_query_s"};
    return cols;
}

std::vector<std::uint64_t> repetition_seeds(const ExperimentConfig& cfg)
{
    if (!cfg.seeds.empty())
        return cfg.seeds;
    std::vector<std::uint64_t> seeds(cfg.repetitions);
    for (std::size_t r = 0; r < cfg.repetitions; ++r)
        seeds[r] = cfg.seed + r;
    return seeds;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg)
{
    if (cfg.repetitions < 1 && cfg.seeds.empty())
        throw std::invalid_argument("repetitions must be >= 1");
    if (cfg.method != Method::exact)
        require_fraction(cfg.alpha);
    if (const auto* f = std::get_if<FileDataset>(&cfg.dataset)) {
        for (const auto& p : {f->a, f->b}) {
            if (!std::filesystem::exists(p))
                throw DataError(DataErrorCode::io, "dataset file not found: " + p.string());
        }
    }

    const ThreadBudget budget(cfg.threads);
    const std::string dataset_id =
        cfg.dataset_id.empty() ? default_dataset_id(cfg.dataset) : cfg.dataset_id;

    std::vector<ExperimentRecord> records;
    for (const std::uint64_t seed : repetition_seeds(cfg)) {
        const Instance inst = load_instance(cfg.dataset, seed);

        ExperimentRecord rec;
        rec.method = std::string(to_string(cfg.method));
        rec.dataset = dataset_id;
        rec.n_a = inst.a.size();
        rec.n_b = inst.b.size();
        rec.dim = inst.a.dim();
        rec.alpha = cfg.alpha;
        rec.seed = seed;

        auto t = Clock::now();
        rec.exact_value = hausdorff_via_index(inst.a, inst.b).value;
        const double exact_time = seconds_since(t);

        switch (cfg.method) {
        case Method::exact:
            rec.estimate = rec.exact_value;
            rec.size_a = rec.n_a;
            rec.size_b = rec.n_b;
            rec.wall_time_s = exact_time;
            rec.time_query_s = exact_time;
            break;
        case Method::prohd: {
            ProHdConfig pc;
            pc.alpha = cfg.alpha;
            pc.mode = cfg.mode;
            pc.delta_centered = cfg.delta_centered;
            pc.seed = seed;
            t = Clock::now();
            const ProHdReport report = proj_hausdorff(inst.a, inst.b, pc);
            rec.wall_time_s = seconds_since(t);
            rec.estimate = report.estimate;
            rec.bound_upper = report.bound_upper;
            rec.size_a = report.size_a;
            rec.size_b = report.size_b;
            rec.time_selection_s = report.timings.selection;
            rec.time_pca_s = report.timings.pca;
            rec.time_index_s = report.timings.index;
            rec.time_query_s = report.timings.query;
            break;
        }
        case Method::random:
        case Method::systematic: {
            const bool uniform = cfg.method == Method::random;
            t = Clock::now();
            const auto idx_a = uniform ? uniform_sample(rec.n_a, cfg.alpha, seed, 0)
                                       : systematic_sample(rec.n_a, cfg.alpha, seed, 0);
            const auto idx_b = uniform ? uniform_sample(rec.n_b, cfg.alpha, seed, 1)
                                       : systematic_sample(rec.n_b, cfg.alpha, seed, 1);
            const PointCloud a_s = inst.a.subset(idx_a);
            const PointCloud b_s = inst.b.subset(idx_b);
            rec.time_selection_s = seconds_since(t);
            t = Clock::now();
            rec.estimate = hausdorff_via_index(a_s, b_s).value;
            rec.time_query_s = seconds_since(t);
            rec.wall_time_s = rec.time_selection_s + rec.time_query_s;
            rec.size_a = a_s.size();
            rec.size_b = b_s.size();
            break;
        }
        }
        rec.relative_error_percent = relative_error(rec.estimate, rec.exact_value);
        records.push_back(std::move(rec));
    }
    return records;
}

ResultFormat parse_result_format(std::string_view text)
{
    if (text == "csv")
        return ResultFormat::csv;
    if (text == "jsonl" || text == "json-lines")
        return ResultFormat::jsonl;
    throw std::invalid_argument("unknown result format: " + std::string(text));
}

nlohmann::ordered_json to_json(const ExperimentRecord& r)
{
    auto opt = [](const std::optional<double>& v) -> nlohmann::ordered_json {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    return nlohmann::ordered_json{
        {"method", r.method},
        {"dataset", r.dataset},
        {"n_a", r.n_a},
        {"n_b", r.n_b},
        {"dim", r.dim},
        {"alpha", r.alpha},
        {"seed", r.seed},
        {"estimate", r.estimate},
        {"exact_value", r.exact_value},
        {"relative_error_percent", opt(r.relative_error_percent)},
        {"bound_upper", opt(r.bound_upper)},
        {"size_a", r.size_a},
        {"size_b", r.size_b},
        {"wall_time_s", r.wall_time_s},
        {"time_selection_s", r.time_selection_s},
        {"time_pca_s", r.time_pca_s},
        {"time_index_s", r.time_index_s},
        {"time_query_s", r.time_query_s},
    };
}

ExperimentRecord record_from_json(const nlohmann::json& j)
{
    auto opt = [&](const char* key) -> std::optional<double> {
        const auto& v = j.at(key);
        return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
    };
    ExperimentRecord r;
    r.method = j.at("method").get<std::string>();
    r.dataset = j.at("dataset").get<std::string>();
    r.n_a = j.at("n_a").get<std::size_t>();
    r.n_b = j.at("n_b").get<std::size_t>();
    r.dim = j.at("dim").get<std::size_t>();
    r.alpha = j.at("alpha").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.estimate = j.at("estimate").get<double>();
    r.exact_value = j.at("exact_value").get<double>();
    r.relative_error_percent = opt("relative_error_percent");
    r.bound_upper = opt("bound_upper");
    r.size_a = j.at("size_a").get<std::size_t>();
    r.size_b = j.at("size_b").get<std::size_t>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    r.time_selection_s = j.at("time_selection_s").get<double>();
    r.time_pca_s = j.at("time_pca_s").get<double>();
    r.time_index_s = j.at("time_index_s").get<double>();
    r.time_query_s = j.at("time_query_s").get<double>();
    return r;
}

void emit_results(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path,
                  ResultFormat format)
{
    if (records.empty())
        throw std::invalid_argument("no records");
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw DataError(DataErrorCode::io, "cannot open " + path.string() + " for writing");

    if (format == ResultFormat::jsonl) {
        for (const auto& r : records)
            out << to_json(r).dump() << '\n';
    } else {
        const auto& cols = record_columns();
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << cols[i];
        out << '\n';
        auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
        for (const auto& r : records) {
            out << csv_field(r.method) << ',' << csv_field(r.dataset) << ',' << r.n_a << ','
                << r.n_b << ',' << r.dim << ',' << format_double(r.alpha) << ',' << r.seed << ','
                << format_double(r.estimate) << ',' << format_double(r.exact_value) << ','
                << opt(r.relative_error_percent) << ',' << opt(r.bound_upper) << ',' << r.size_a
                << ',' << r.size_b << ',' << format_double(r.wall_time_s) << ','
                << format_double(r.time_selection_s) << ',' << format_double(r.time_pca_s) << ','
                << format_double(r.time_index_s) << ',' << format_double(r.time_query_s) << '\n';
        }
    }
    if (!out)
        throw DataError(DataErrorCode::io, "write failure on " + path.string());
}

std::vector<ExperimentRecord> read_results_jsonl(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw DataError(DataErrorCode::io, "cannot open " + path.string());
    std::vector<ExperimentRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty())
            out.push_back(record_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

std::vector<ExperimentConfig> parse_bench_config(const nlohmann::json& j,
                                                 const std::filesystem::path& base_dir)
{
    std::vector<ExperimentConfig> out;
    for (const auto& exp : j.contains("experiments") ? as_list(j.at("experiments")) : as_list(j)) {
        const ExperimentConfig base = parse_one(exp, base_dir);
        const auto methods = as_list(exp.value("method", nlohmann::json("prohd")));
        const auto alphas = as_list(exp.value("alpha", nlohmann::json(0.01)));
        for (const auto& m : methods) {
            for (const auto& a : alphas) {
                ExperimentConfig cfg = base;
                cfg.method = parse_method(m.get<std::string>());
                cfg.alpha = a.get<double>();
                out.push_back(std::move(cfg));
            }
        }
    }
    if (out.empty())
        throw std::invalid_argument("bench configuration lists no experiments");
    return out;
}

} // namespace prohd
