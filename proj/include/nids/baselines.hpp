#pragma once

#include "nids/common.hpp"
#include "nids/ganomaly.hpp"
#include "nids/kmeans.hpp"
#include "nids/metrics.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace nids {

// ---------------------------------------------------------------- KMeans-only

// Samples in clusters smaller than a size threshold are anomalies. The
// continuous score n_total - cluster_size orders samples the same way, so a
// sweep over it reproduces the threshold sweep.
struct KMeansOnlyResult {
    ClusterModel model;
    std::vector<double> thresholds;          // ascending
    std::vector<std::vector<int>> labels;    // per threshold, per sample
    std::vector<double> scores;              // per sample

    // One (fpr, tpr) point per threshold, plus nothing else.
    std::vector<RocPoint> roc_points(std::span<const int> truth) const;
};

// Cluster `data` and label it at every threshold (must be ascending).
KMeansOnlyResult kmeans_only_detect(const Matrix& data, std::size_t k, std::vector<double> size_thresholds,
                                    std::uint64_t seed, const KMeansOptions& options = {});

// Every distinct cluster size plus the 0 and n+1 sentinels: the complete
// attainable ROC for a fixed clustering.
std::vector<double> size_threshold_grid(const ClusterModel& model);

// Nearest-center cluster of each row; ties go to the lowest id.
std::vector<std::size_t> assign_clusters(const ClusterModel& model, const Matrix& data);

// n_train - size(cluster of row), for rows of a (possibly different) set.
std::vector<double> kmeans_only_scores(const ClusterModel& model, const Matrix& data);

// Labels of `data` at one size threshold (anomalous iff cluster size < th).
std::vector<int> kmeans_only_labels(const ClusterModel& model, const Matrix& data, double size_threshold);

// ---------------------------------------------------------------- OCSVM

struct OcsvmConfig {
    double nu = 0.1;
    double gamma = 0.0;       // <= 0 means 1 / n_features
    double tolerance = 1e-3;  // KKT stopping gap
    std::size_t cache_mb = 256;
    std::size_t max_iterations = 10'000'000;

    void validate() const;
    nlohmann::json to_json() const;
    static OcsvmConfig from_json(const nlohmann::json& j);
};

// One-class SVM with an RBF kernel, trained by SMO on the dual
//   min 1/2 a'Qa  s.t.  0 <= a_i <= 1,  sum a_i = nu * l.
class OneClassSvm {
public:
    static OneClassSvm fit(const Matrix& train, const OcsvmConfig& config);

    // rho - sum_i a_i K(x_i, x): higher means more anomalous.
    std::vector<double> anomaly_scores(const Matrix& data) const;

    double rho() const { return rho_; }
    double gamma() const { return gamma_; }
    std::size_t support_count() const { return static_cast<std::size_t>(sv_.rows()); }
    std::size_t iterations() const { return iterations_; }

    nlohmann::json to_json() const;
    static OneClassSvm from_json(const nlohmann::json& j);

private:
    Matrix sv_;
    Vector coef_;
    double rho_ = 0.0;
    double gamma_ = 0.0;
    std::size_t iterations_ = 0;
};

std::vector<double> ocsvm_detect(const Matrix& train, const Matrix& test, const OcsvmConfig& config);

// ---------------------------------------------------------------- GANomaly-alone

// The stage-2 scorer trained on the whole training split, skipping stage 1.
// Same code path as the proposed method; only the training rows differ.
ScoreVector ganomaly_alone(const Matrix& train, const Matrix& test, const ScorerConfig& config);

}  // namespace nids
