#pragma once

#include "nids/common.hpp"
#include "nids/nn/layers.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace nids {

struct ScorerConfig {
    int latent_dim = 16;
    std::vector<int> conv_widths{16, 32, 64};  // empty -> dense encoder/decoder
    int kernel_size = 4;                       // even, so transposed convs exactly double length
    double w_adv = 1.0;
    double w_con = 50.0;
    double w_enc = 1.0;
    int epochs = 50;
    int batch_size = 64;
    double learning_rate = 2e-4;
    double beta1 = 0.5;
    std::uint64_t seed = 0;

    void validate() const;
    nlohmann::json to_json() const;
    static ScorerConfig from_json(const nlohmann::json& j);
    static ScorerConfig from_json(const nlohmann::json& j, ScorerConfig defaults);
};

struct LossRecord {
    int epoch = 0;
    int step = 0;
    double adv = 0.0;
    double con = 0.0;
    double enc = 0.0;
    double total = 0.0;          // as computed by the generator objective
    double discriminator = 0.0;
};

struct TrainingStats {
    std::vector<LossRecord> steps;
    std::vector<LossRecord> epochs;  // per-epoch means
    int discriminator_resets = 0;

    nlohmann::json to_json() const;  // epoch means only
};

// Encoder-decoder-encoder adversarial scorer over 1-D feature vectors.
//
// Inputs are zero-padded on the feature axis to a multiple of
// 2^conv_widths.size(); reconstructions are masked so padded positions stay 0.
class AnomalyScorer {
public:
    // Fresh, randomly initialized model (seeded by config.seed).
    AnomalyScorer(int feature_count, ScorerConfig config);

    const ScorerConfig& config() const { return config_; }
    int feature_count() const { return features_; }
    int padded_length() const { return padded_; }

    nn::Sequential& encoder() { return encoder_; }
    nn::Sequential& decoder() { return decoder_; }
    nn::Sequential& second_encoder() { return second_encoder_; }
    nn::Sequential& discriminator_features() { return disc_features_; }
    nn::Sequential& discriminator_head() { return disc_head_; }
    const nn::Sequential& encoder() const { return encoder_; }
    const nn::Sequential& second_encoder() const { return second_encoder_; }

    // Per-sample ||G_E(x) - E(G(x))||.
    std::vector<double> raw_scores(const Matrix& data) const;
    // Reconstruction G(x), unpadded.
    Matrix reconstruct(const Matrix& data) const;

    const TrainingStats& stats() const { return stats_; }

    // Runs the adversarial training loop on `normals` in place.
    void fit(const Matrix& normals);

    nlohmann::json to_json() const;
    static AnomalyScorer from_json(const nlohmann::json& j);
    void save(const std::filesystem::path& path) const;  // CBOR
    static AnomalyScorer load(const std::filesystem::path& path);

    nn::Tensor pad(const Matrix& data, Index begin, Index count) const;

private:
    AnomalyScorer() = default;
    void build();
    void reset_discriminator(Rng& rng);

    ScorerConfig config_;
    int features_ = 0;
    int padded_ = 0;
    nn::Tensor mask_;  // 1 x padded, 1 on real features
    nn::Sequential encoder_, decoder_, second_encoder_, disc_features_, disc_head_;
    TrainingStats stats_;
};

struct ScoreVector {
    std::vector<double> raw;
    std::vector<double> scaled;
    double threshold = 0.5;
    std::vector<int> predicted;
};

// Train a scorer on (presumed normal) feature rows.
AnomalyScorer train_scorer(const Matrix& normals, const ScorerConfig& config);

// Raw scores only; see scale_scores / classify for the rest of the vector.
ScoreVector score(const AnomalyScorer& scorer, const Matrix& data);

// (s - min) / (max - min) over the given set; a constant set maps to all 0.
std::vector<double> scale_scores(std::span<const double> raw);

// 1 iff scaled >= th.
std::vector<int> classify(std::span<const double> scaled, double th);

// Linear-interpolated quantile of the scaled training scores, used as the
// operating threshold for single-point TPR/FPR.
double operating_threshold(std::span<const double> scaled_train, double quantile);

}  // namespace nids
