#pragma once

#include "nids/common.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nids {

enum class ColumnKind { numeric, categorical, timestamp, binary_label, attack_label, ignore };

ColumnKind parse_column_kind(const std::string& s);
std::string to_string(ColumnKind kind);

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
};

// Column layout, label harmonization rules and (once fitted) the ordinal
// encoding of every categorical column.
//
// A schema either lists every column in file order, or lists only the special
// columns and sets `default_kind`; in the latter case the file header supplies
// the remaining names.
struct FeatureSchema {
    std::string dataset_id;
    bool has_header = true;
    std::vector<ColumnSpec> columns;
    std::optional<ColumnKind> default_kind;

    // Raw binary-label values meaning "normal" (trimmed, case-insensitive).
    std::vector<std::string> normal_values;
    // Raw attack label -> attack category. Unmapped labels keep their raw name.
    std::map<std::string, std::string> category_map;
    // Ordered attack taxonomy; empty means "whatever categories appear, sorted".
    std::vector<std::string> categories;

    // Filled by fit_encoding: column -> (raw value -> code in [1, d]).
    std::map<std::string, std::map<std::string, int>> categorical_maps;

    // Throws Error unless exactly one binary_label and at most one
    // attack_label column exist and names are unique.
    void validate() const;

    bool is_normal_value(const std::string& raw) const;
    std::string category_of(const std::string& raw) const;

    nlohmann::json to_json() const;
    static FeatureSchema from_json(const nlohmann::json& j);
};

FeatureSchema load_schema(const std::filesystem::path& path);

struct IngestReport {
    std::size_t rows_read = 0;
    std::size_t rows_retained = 0;
    std::size_t normal_rows = 0;
    std::size_t anomalous_rows = 0;
    std::map<std::string, std::size_t> dropped;  // reason -> count

    std::size_t dropped_total() const;
    nlohmann::json to_json() const;
};

// Row-aligned raw columns after type validation. Numeric cells are parsed;
// categorical cells stay as strings until an encoding is applied.
struct RawTable {
    FeatureSchema schema;                       // resolved: one spec per file column
    std::vector<std::string> feature_names;     // numeric + categorical, file order
    std::vector<bool> feature_is_categorical;
    std::vector<double> numeric;                // rows x features, row-major; 0 in categorical slots
    std::vector<std::vector<std::string>> categorical;  // per feature column; empty for numeric ones
    std::vector<std::string> binary_raw;
    std::vector<std::string> attack_raw;        // empty when the schema has no attack_label column
    IngestReport report;

    std::size_t rows() const { return binary_raw.size(); }
    std::size_t feature_count() const { return feature_names.size(); }
};

struct LoadOptions {
    std::size_t row_cap = 0;  // retained rows per input file; 0 = unlimited
};

// Parse one or more CSV files sharing a schema. Rows with unparseable,
// missing or non-finite numeric cells (or a wrong field count) are dropped
// and counted in the report.
RawTable load_dataset(const std::filesystem::path& path, const FeatureSchema& schema,
                      const LoadOptions& options = {});
RawTable load_dataset(const std::vector<std::filesystem::path>& paths, const FeatureSchema& schema,
                      const LoadOptions& options = {});

// Parse CSV text directly (tests, bindings).
RawTable parse_dataset(std::istream& in, const FeatureSchema& schema, const LoadOptions& options = {},
                       const std::string& source_name = "<stream>");

// Lexicographic ordinal codes [1, d] for every categorical column over the
// given tables (fit on all of them so held-out files share one code space).
FeatureSchema fit_encoding(const RawTable& raw, const FeatureSchema& schema);
FeatureSchema fit_encoding(const std::vector<const RawTable*>& raws, const FeatureSchema& schema);

struct EncodedTable {
    std::vector<std::string> feature_names;
    Matrix values;                       // encoded, unnormalized
    std::vector<int> binary_labels;      // 0 normal, 1 anomaly
    std::vector<std::string> attack_labels;  // category or "" for normal rows
    bool has_attack_column = false;

    EncodedTable subset(const IndexList& rows) const;
};

// Apply a fitted schema. Categorical values missing from the map are an error.
EncodedTable encode(const RawTable& raw, const FeatureSchema& fitted);

struct NormParams {
    Vector min;
    Vector max;

    // (v - min) / (max - min); constant columns map to 0; clipped to [0,1]
    // when `clip` is set (held-out data).
    Matrix apply(const Matrix& values, bool clip = true) const;
    // Inverse map for non-constant columns; constant columns return min.
    Matrix invert(const Matrix& scaled) const;

    nlohmann::json to_json() const;
    static NormParams from_json(const nlohmann::json& j);
};

NormParams fit_norm_params(const Matrix& values);

// Normalized features with optional labels. Label reads go through the
// accessors below, which report to the audit hook.
class DataMatrix {
public:
    DataMatrix() = default;
    DataMatrix(Matrix features, NormParams norm, std::optional<std::vector<int>> binary_labels = {},
               std::optional<std::vector<std::string>> attack_labels = {});

    const Matrix& features() const { return features_; }
    const NormParams& norm_params() const { return norm_; }
    Index rows() const { return features_.rows(); }
    Index cols() const { return features_.cols(); }

    bool has_binary_labels() const { return binary_.has_value(); }
    bool has_attack_labels() const { return attack_.has_value(); }
    bool has_labels() const { return has_binary_labels() || has_attack_labels(); }

    const std::vector<int>& binary_labels() const;
    const std::vector<std::string>& attack_labels() const;

    DataMatrix subset(const IndexList& rows) const;

private:
    Matrix features_;
    NormParams norm_;
    std::optional<std::vector<int>> binary_;
    std::optional<std::vector<std::string>> attack_;
};

// Fit min-max parameters on `table` and scale it.
DataMatrix normalize(const EncodedTable& table);
// Scale held-out rows with previously fitted parameters (clipped to [0,1]).
DataMatrix apply_normalization(const EncodedTable& table, const NormParams& params);

// Same features, no labels of either kind.
DataMatrix strip_labels(const DataMatrix& m);

}  // namespace nids
