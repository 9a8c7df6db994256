#pragma once

#include "nids/nn/layers.hpp"

#include <vector>

namespace nids::nn {

struct AdamOptions {
    float learning_rate = 1e-3f;
    float beta1 = 0.9f;
    float beta2 = 0.999f;
    float epsilon = 1e-8f;
};

class Adam {
public:
    Adam(std::vector<Param*> params, AdamOptions options);
    void step();
    void zero_grad();
    const AdamOptions& options() const { return options_; }

private:
    std::vector<Param*> params_;
    std::vector<Tensor> m_, v_;
    AdamOptions options_;
    long step_ = 0;
};

// Numerically stable loss helpers. Each returns the mean loss and writes the
// gradient with respect to its first argument (already divided by the count).

// Binary cross-entropy on logits against a constant target in {0, 1}.
double bce_with_logits(const Tensor& logits, float target, Tensor& grad);

// Softmax + categorical cross-entropy; labels are class indices.
double softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels, Tensor& grad);

Tensor softmax(const Tensor& logits);

}  // namespace nids::nn
