#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "prohd/datasets.hpp"
#include "prohd/point_cloud.hpp"
#include "prohd/prohd.hpp"

namespace prohd {

enum class Method { exact, prohd, random, systematic };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct GeneratedDataset {
    std::size_t n_a = 1000;
    std::size_t n_b = 1000;
    std::size_t dim = 8;
    double offset = 0.1;
    OffsetMode offset_mode = OffsetMode::b_only;
    /// Fixes the instance across repetitions; otherwise each repetition's seed is used.
    std::optional<std::uint64_t> seed;
};

struct FileDataset {
    std::filesystem::path a;
    std::filesystem::path b;
};

using DatasetSpec = std::variant<GeneratedDataset, FileDataset>;

struct ExperimentConfig {
    Method method = Method::prohd;
    double alpha = 0.01;
    EstimationMode mode = EstimationMode::subset_subset;
    bool delta_centered = true;
    std::uint64_t seed = 0;
    std::size_t repetitions = 1;
    /// Explicit per-repetition seeds; when empty, repetition r uses seed + r.
    std::vector<std::uint64_t> seeds;
    DatasetSpec dataset = GeneratedDataset{};
    std::string dataset_id; ///< defaults to a description of the dataset
    std::size_t threads = 0; ///< 0 keeps the current process budget
};

struct ExperimentRecord {
    std::string method;
    std::string dataset;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    std::size_t dim = 0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    double estimate = 0.0;
    double exact_value = 0.0;
    std::optional<double> relative_error_percent; ///< empty when undefined
    std::optional<double> bound_upper;            ///< prohd only
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    double wall_time_s = 0.0;
    double time_selection_s = 0.0;
    double time_pca_s = 0.0;
    double time_index_s = 0.0;
    double time_query_s = 0.0;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// |estimate - exact| / exact * 100. For exact == 0 the error is 0 when the
/// estimate is also 0 and undefined (empty) otherwise.
std::optional<double> relative_error(double estimate, double exact);

/// Ordered CSV columns, matching the member order of ExperimentRecord.
const std::vector<std::string>& record_columns();

/// Seeds used by each repetition of `cfg`.
std::vector<std::uint64_t> repetition_seeds(const ExperimentConfig& cfg);

/// Runs every repetition of one configuration.
///
/// The exact reference comes from hausdorff_via_index. Reported times cover
/// the method only: file IO and the reference computation are excluded.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

enum class ResultFormat { csv, jsonl };
ResultFormat parse_result_format(std::string_view text);

/// Writes one row per record; floats carry 17 significant digits.
void emit_results(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path,
                  ResultFormat format);

std::vector<ExperimentRecord> read_results_jsonl(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ExperimentRecord& record);
ExperimentRecord record_from_json(const nlohmann::json& j);

/// Expands a bench configuration into individual experiments.
///
/// Accepts a single experiment object or {"experiments": [...]}. Within an
/// experiment "method" and "alpha" may be arrays; their cartesian product
/// is expanded, method-major. Relative file paths resolve against base_dir.
std::vector<ExperimentConfig> parse_bench_config(const nlohmann::json& j,
                                                 const std::filesystem::path& base_dir = {});

} // namespace prohd
