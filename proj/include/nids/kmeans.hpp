#pragma once

#include "nids/common.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <vector>

namespace nids {

struct KMeansOptions {
    std::size_t max_iterations = 300;
    // Independent seeded runs; the lowest-SSE model is kept.
    std::size_t restarts = 1;
};

struct ClusterModel {
    std::size_t k = 0;
    Matrix centers;                          // k x n
    std::vector<std::size_t> assignments;    // per sample
    std::vector<std::size_t> cluster_sizes;  // per cluster
    std::vector<double> distances;           // per sample, Euclidean to its center
    std::vector<double> sse_trace;           // within-cluster SSE after each assignment step
    std::size_t iterations = 0;
    bool converged = false;

    double sse() const;
};

// Lloyd's algorithm. Initial centers are k distinct rows drawn uniformly.
// Ties in nearest-center assignment go to the lowest cluster id; a cluster
// that loses all members keeps its previous center.
ClusterModel fit_kmeans(const Matrix& data, std::size_t k, std::uint64_t seed,
                        const KMeansOptions& options = {});

// Minimum cluster size expressed either as an absolute count or as a fraction
// of the clustered sample count.
struct SizeThreshold {
    enum class Mode { count, fraction } mode = Mode::fraction;
    double value = 0.05;

    double resolve(std::size_t sample_count) const;
    nlohmann::json to_json() const;
    static SizeThreshold from_json(const nlohmann::json& j);
};

struct SelectionPolicy {
    SizeThreshold th_sz;
    double th_var = 0.9;  // fraction of each eligible cluster kept, in (0, 1]

    void validate() const;
};

struct ClusterSelection {
    std::size_t cluster = 0;
    std::size_t size = 0;
    bool eligible = false;
    std::size_t kept = 0;
};

struct SelectionSummary {
    double size_threshold = 0.0;  // resolved absolute threshold
    double th_var = 0.0;
    std::vector<ClusterSelection> clusters;
    IndexList selected;  // sorted ascending

    nlohmann::json to_json() const;
};

// From each cluster larger than th_sz keep the floor(th_var * C_m) (at least 1)
// samples closest to its center; distance ties go to the lower row index.
SelectionSummary select_probable_normals(const ClusterModel& model, const SelectionPolicy& policy);

struct ClusterFilterConfig {
    std::size_t k = 10;
    SelectionPolicy policy;
    KMeansOptions kmeans;

    nlohmann::json to_json() const;
    static ClusterFilterConfig from_json(const nlohmann::json& j);
};

struct ClusterFilterResult {
    ClusterModel model;
    SelectionSummary summary;
};

// Stage 1: cluster the (unlabeled) rows and keep the probable normals.
ClusterFilterResult cluster_filter(const Matrix& data, const ClusterFilterConfig& config, std::uint64_t seed);

}  // namespace nids
