#pragma once

#include "nids/common.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace nids {

struct RatePair {
    double tpr = 0.0;
    double fpr = 0.0;
};

struct BinaryConfusion {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;

    static BinaryConfusion count(std::span<const int> predicted, std::span<const int> truth);
    // Errors when the truth had no positives or no negatives.
    RatePair rates() const;
};

// TP/(TP+FN) and FP/(FP+TN).
RatePair tpr_fpr(std::span<const int> predicted, std::span<const int> truth);

struct RocPoint {
    double threshold = 0.0;  // predict 1 iff score >= threshold
    double fpr = 0.0;
    double tpr = 0.0;
};

struct RocCurve {
    std::vector<RocPoint> points;  // from (0,0) to (1,1), both coordinates non-decreasing
    double auc = 0.0;
};

// Sweep every distinct score; equal scores move together as one step.
RocCurve roc_auc(std::span<const double> scores, std::span<const int> truth);

// Trapezoidal area under a point list (sorted internally by fpr, then tpr).
double trapezoid_auc(std::vector<RocPoint> points);

// Mann-Whitney rank statistic with midranks for ties. Independent of roc_auc;
// used by the re-aggregation tool to cross-check persisted scores.
double rank_auc(std::span<const double> scores, std::span<const int> truth);

struct ConfusionMatrix {
    std::vector<std::string> categories;
    std::vector<std::vector<std::size_t>> counts;  // [true][predicted]

    std::size_t row_sum(std::size_t c) const;
    std::size_t total() const;
    double accuracy() const;
    nlohmann::json to_json() const;
    static ConfusionMatrix from_json(const nlohmann::json& j);
    // Fixed-width text table, true classes on rows.
    std::string render() const;
};

ConfusionMatrix confusion_matrix(std::span<const int> truth, std::span<const int> predicted,
                                 const std::vector<std::string>& categories);

// One method's result on one fold of one SampleSet.
struct FoldResult {
    std::string method;
    std::size_t sample_set = 0;
    std::size_t fold = 0;
    double auc = 0.0;
    double tpr = 0.0;
    double fpr = 0.0;

    nlohmann::json to_json() const;
    static FoldResult from_json(const nlohmann::json& j);
};

struct MetricMeans {
    double auc = 0.0, tpr = 0.0, fpr = 0.0;
};

struct MethodSummary {
    std::string method;
    std::map<std::size_t, MetricMeans> per_sample_set;  // mean over folds
    MetricMeans grand;                                  // mean of the per-SampleSet means
};

struct AggregateReport {
    std::vector<std::size_t> sample_sets;
    std::size_t fold_count = 0;
    std::vector<MethodSummary> methods;  // in first-seen order
    std::vector<FoldResult> folds;

    nlohmann::json to_json() const;
    const MethodSummary& method(const std::string& name) const;
};

// Two-level mean. Every method must have every fold of every listed
// SampleSet; otherwise the error lists the missing (method, set, fold) runs.
AggregateReport aggregate(const std::vector<FoldResult>& results, const std::vector<std::size_t>& sample_sets,
                          std::size_t fold_count);

}  // namespace nids
