#pragma once

#include "nids/common.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <vector>

namespace nids {

struct SampleSet {
    IndexList indices;  // rows of the source matrix, normals first then anomalies
    std::size_t normal_count = 0;
    std::size_t anomaly_count = 0;

    std::size_t size() const { return indices.size(); }
    double anomaly_fraction() const;
};

// fold_of[i] is the fold of sample_set.indices[i].
struct FoldAssignment {
    std::size_t k = 3;
    std::vector<std::size_t> fold_of;

    // Positions (into the SampleSet's index list) of the test split for `fold`.
    IndexList test_positions(std::size_t fold) const;
    IndexList train_positions(std::size_t fold) const;
};

struct SampleSetCounts {
    std::size_t normal = 0;
    std::size_t anomaly = 0;
};

struct SampleSetBundle {
    std::uint64_t seed = 0;
    std::vector<SampleSet> sample_sets;
    std::vector<FoldAssignment> folds;  // one per sample set

    nlohmann::json to_json() const;
    static SampleSetBundle from_json(const nlohmann::json& j);
};

struct SamplingOptions {
    std::size_t set_count = 5;
    std::size_t fold_count = 3;
    // Accepted anomaly fraction per SampleSet.
    double min_anomaly_fraction = 0.095;
    double max_anomaly_fraction = 0.105;
};

// Draw `set_count` pairwise-disjoint SampleSets, each with exactly
// counts.normal normals and counts.anomaly anomalies, uniformly without
// replacement, and attach stratified folds.
SampleSetBundle make_samplesets(const std::vector<int>& binary_labels, SampleSetCounts counts,
                                std::uint64_t seed, const SamplingOptions& options = {});

// Stratified k-fold split: anomalies and normals are shuffled separately and
// dealt round-robin with a shared counter, so fold sizes differ by at most 1
// and each fold's anomaly count differs by at most 1 from the others.
FoldAssignment cv_folds(const std::vector<int>& binary_labels, std::size_t k, std::uint64_t seed);

}  // namespace nids
