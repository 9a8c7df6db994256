#pragma once

#include "nids/baselines.hpp"
#include "nids/classifier.hpp"
#include "nids/common.hpp"
#include "nids/data_ingest.hpp"
#include "nids/ganomaly.hpp"
#include "nids/kmeans.hpp"
#include "nids/metrics.hpp"
#include "nids/sampling.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace nids {

namespace fs = std::filesystem;

enum class Scale { desk, full };

Scale parse_scale(const std::string& s);
std::string to_string(Scale s);

inline const std::vector<std::string> kAllMethods{"kmeans_only", "ganomaly_alone", "ocsvm", "proposed"};

struct DatasetConfig {
    std::string id;
    std::vector<fs::path> paths;       // detection data; stage-3 training data
    std::vector<fs::path> test_paths;  // designated stage-3 test files, if the dataset has them
    fs::path schema;
};

struct Stage3Config {
    ClassifierConfig classifier;
    std::string split = "holdout";  // "holdout" (stratified) or "designated" (dataset.test_paths)
    double test_fraction = 0.3;
    std::size_t max_train_rows = 0;  // 0 = all; a proportional per-category cap otherwise
    std::size_t max_test_rows = 0;
};

struct BaselineConfig {
    OcsvmConfig ocsvm;
    std::size_t kmeans_k = 0;  // 0 reuses the stage-1 k
};

// Applied on top of the base settings when scale = desk.
struct DeskOverrides {
    std::size_t sample_sets = 1;
    int stage2_epochs = 25;
    int stage3_epochs = 10;
    std::size_t row_cap = 0;
    std::size_t stage3_max_train_rows = 20000;
    std::size_t stage3_max_test_rows = 20000;
};

struct RunConfig {
    DatasetConfig dataset;
    SampleSetCounts counts;
    SamplingOptions sampling;
    ClusterFilterConfig stage1;
    ScorerConfig stage2;
    double operating_quantile = 0.9;
    Stage3Config stage3;
    BaselineConfig baselines;
    std::vector<std::string> methods = kAllMethods;
    std::uint64_t seed = 0;
    Scale scale = Scale::desk;
    DeskOverrides desk;
    std::size_t row_cap = 0;

    // Execution options; not part of the experiment identity.
    fs::path output_dir = "runs";
    std::size_t workers = 1;
    bool fail_fast = false;

    // Checks values and that every dataset file exists. Touches no output.
    void validate() const;
    // Scale overrides folded in.
    RunConfig resolved() const;

    // Everything that determines results; hashed into the run id and embedded
    // in every JSON artifact.
    nlohmann::json experiment_json() const;
    std::string config_hash() const;
    std::string run_id() const;
    fs::path run_dir() const { return output_dir / run_id(); }

    // Relative dataset and schema paths resolve against `base_dir`.
    static RunConfig from_json(const nlohmann::json& j, const fs::path& base_dir = {});
};

RunConfig load_run_config(const fs::path& path);

// Counts of one SampleSet for a known dataset id; the NSL-KDD numbers otherwise.
SampleSetCounts default_counts(const std::string& dataset_id);

struct StepRecord {
    std::string name;
    std::string status = "pending";  // pending | done | failed | skipped
    double wall_seconds = 0.0;
    bool resumed = false;
    std::vector<std::string> artifacts;  // relative to the run directory
    std::string error;

    nlohmann::json to_json() const;
    static StepRecord from_json(const nlohmann::json& j);
};

struct RunManifest {
    std::string run_id;
    std::string config_hash;
    std::string version;
    fs::path run_dir;
    std::vector<StepRecord> steps;

    StepRecord* find(const std::string& name);
    const StepRecord* find(const std::string& name) const;
    std::size_t count(const std::string& status) const;
    bool ok() const { return count("failed") == 0 && count("skipped") == 0 && count("pending") == 0; }

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
    static RunManifest load(const fs::path& run_dir);
};

// Loaded and encoded detection data, as persisted under ingest/.
struct IngestedData {
    FeatureSchema schema;  // fitted
    EncodedTable table;
    std::optional<EncodedTable> test_table;
};

// Each step is idempotent: finished artifacts are reused, not rewritten.
RunManifest run_ingest(const RunConfig& config);
RunManifest run_samplesets(const RunConfig& config);
// ingest, samplesets, every (sample set, fold, method) job, aggregate, report.
RunManifest run_pipeline(const RunConfig& config);
RunManifest run_stage3(const RunConfig& config);

IngestedData load_ingested(const fs::path& run_dir);

struct ReportOutcome {
    bool partial = false;
    std::vector<std::string> gaps;  // "method/set<s>/fold<f>"
    std::string tables;             // rendered text
};

// Render tables from the fold artifacts of a run directory. Missing runs
// become gap markers and flag the report as partial.
ReportOutcome write_report(const fs::path& run_dir);

struct ReaggregateOutcome {
    AggregateReport report;
    double max_difference = 0.0;  // vs the persisted fold results
    std::vector<std::string> mismatches;
};

// Recompute every fold metric from the score CSVs and test labels alone,
// with the rank-statistic AUC, and compare with the persisted results.
ReaggregateOutcome reaggregate(const fs::path& run_dir, double tolerance = 1e-9);

// Fold directory index for (sample set, fold).
inline std::size_t fold_dir_index(std::size_t sample_set, std::size_t fold, std::size_t fold_count) {
    return sample_set * fold_count + fold;
}

}  // namespace nids
