#pragma once

#include "nids/common.hpp"
#include "nids/nn/layers.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace nids {

struct FeatureSchema;

struct AttackTaxonomy {
    std::vector<std::string> categories;
    std::map<std::string, std::string> raw_to_category;  // optional; identity for category names
    std::vector<std::string> normal_values{"normal", "benign"};  // compared case-insensitively

    std::size_t size() const { return categories.size(); }
    // Category index of a raw label or category name. Normal labels and
    // anything unmapped are errors.
    int index_of(const std::string& label) const;
    std::vector<int> encode(const std::vector<std::string>& labels) const;
    void validate() const;

    nlohmann::json to_json() const;
    static AttackTaxonomy from_json(const nlohmann::json& j);
    // Categories from the schema, or the sorted observed labels if it lists none.
    static AttackTaxonomy from_schema(const FeatureSchema& schema, const std::vector<std::string>& observed);
};

struct AdasynResult {
    Matrix features;          // originals first, in input order, then synthetic rows
    std::vector<int> labels;
    std::size_t original_rows = 0;
    std::vector<int> duplicated_classes;  // classes that fell back to random duplication
};

// Adaptive synthetic oversampling of every class below `target` rows. The
// per-sample share of a class deficit follows the fraction of other-class
// points among its `neighbors` nearest neighbours (all classes considered).
AdasynResult adasyn_resample(const Matrix& features, const std::vector<int>& labels, std::size_t target,
                             int neighbors, std::uint64_t seed);

// Largest per-class count; the usual ADASYN target.
std::size_t max_class_count(const std::vector<int>& labels);

struct ClassifierConfig {
    int conv1_filters = 32;
    int conv2_filters = 64;
    int kernel_size = 3;  // odd, 'same' padding
    int dense_units = 128;
    int epochs = 30;
    int batch_size = 128;
    double learning_rate = 1e-3;
    int patience = 5;  // stop after this many epochs without a lower training loss
    int adasyn_neighbors = 5;
    std::uint64_t seed = 0;

    void validate() const;
    nlohmann::json to_json() const;
    static ClassifierConfig from_json(const nlohmann::json& j);
    static ClassifierConfig from_json(const nlohmann::json& j, ClassifierConfig defaults);
};

class ClassifierModel {
public:
    ClassifierModel(int feature_count, AttackTaxonomy taxonomy, ClassifierConfig config);

    const AttackTaxonomy& taxonomy() const { return taxonomy_; }
    const ClassifierConfig& config() const { return config_; }
    int feature_count() const { return features_; }
    nn::Sequential& network() { return net_; }
    const nn::Sequential& network() const { return net_; }
    const std::vector<double>& epoch_losses() const { return epoch_losses_; }
    int best_epoch() const { return best_epoch_; }

    Matrix predict_proba(const Matrix& data) const;
    std::vector<int> predict(const Matrix& data) const;

    // Minibatch Adam on softmax cross-entropy, with early stopping on the
    // training loss; the best epoch's weights are kept.
    void fit(const Matrix& data, const std::vector<int>& labels);

    nlohmann::json to_json() const;
    static ClassifierModel from_json(const nlohmann::json& j);
    void save(const std::filesystem::path& path) const;  // CBOR
    static ClassifierModel load(const std::filesystem::path& path);

private:
    nn::Tensor to_input(const Matrix& data, Index begin, Index count) const;

    AttackTaxonomy taxonomy_;
    ClassifierConfig config_;
    int features_ = 0;
    int padded_ = 0;
    nn::Sequential net_;
    std::vector<double> epoch_losses_;
    int best_epoch_ = 0;
};

// Labels are category names (or raw labels the taxonomy maps).
ClassifierModel train_classifier(const Matrix& features, const std::vector<std::string>& labels,
                                 const AttackTaxonomy& taxonomy, const ClassifierConfig& config);
ClassifierModel train_classifier(const Matrix& features, const std::vector<int>& labels,
                                 const AttackTaxonomy& taxonomy, const ClassifierConfig& config);

Matrix predict_proba(const ClassifierModel& model, const Matrix& features);

inline constexpr double kLogLossClip = 1e-15;

// Mean of -log p(true class), probabilities clipped to [1e-15, 1 - 1e-15].
double multiclass_log_loss(const Matrix& probabilities, const std::vector<int>& truth);
// Same with the prior vector used as every sample's prediction.
double base_log_loss(const std::vector<double>& priors, const std::vector<int>& truth);
std::vector<double> class_priors(const std::vector<int>& labels, std::size_t classes);

}  // namespace nids
