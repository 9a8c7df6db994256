#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nids {
class Rng;
}

// Minimal 1-D neural network toolkit: layers with explicit forward/backward
// passes. Activations travel as row-major (batch x channels*length) float
// matrices, channel-major within a row.
namespace nids::nn {

using Tensor = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Shape {
    int channels = 1;
    int length = 1;
    int size() const { return channels * length; }
    bool operator==(const Shape&) const = default;
};

struct Param {
    std::string name;
    Tensor value;
    Tensor grad;
};

// Per-call scratch that a layer needs for its backward pass. Kept outside the
// layer so one network can be applied several times before backpropagating.
struct LayerCache {
    Tensor input;
    Tensor output;
    std::vector<int> argmax;
};

class Layer {
public:
    virtual ~Layer() = default;
    virtual std::string kind() const = 0;
    virtual Shape input_shape() const = 0;
    virtual Shape output_shape() const = 0;
    virtual Tensor forward(const Tensor& x, LayerCache& cache) const = 0;
    // Returns d(loss)/d(input) and accumulates parameter gradients.
    virtual Tensor backward(const Tensor& grad_out, const LayerCache& cache) = 0;
    virtual std::vector<Param*> params() { return {}; }
    virtual std::unique_ptr<Layer> clone() const = 0;
    virtual nlohmann::json config() const = 0;
};

class Conv1d final : public Layer {
public:
    Conv1d(Shape in, int out_channels, int kernel, int stride, int padding);
    std::string kind() const override { return "conv1d"; }
    Shape input_shape() const override { return in_; }
    Shape output_shape() const override { return out_; }
    Tensor forward(const Tensor& x, LayerCache& cache) const override;
    Tensor backward(const Tensor& grad_out, const LayerCache& cache) override;
    std::vector<Param*> params() override { return {&weight_, &bias_}; }
    std::unique_ptr<Layer> clone() const override { return std::make_unique<Conv1d>(*this); }
    nlohmann::json config() const override;

    Param& weight() { return weight_; }  // out_channels x (in_channels * kernel)
    Param& bias() { return bias_; }

private:
    Shape in_, out_;
    int kernel_, stride_, padding_;
    Param weight_, bias_;
};

// Transposed 1-D convolution: output length (L - 1) * stride - 2 * padding + kernel.
class ConvTranspose1d final : public Layer {
public:
    ConvTranspose1d(Shape in, int out_channels, int kernel, int stride, int padding);
    std::string kind() const override { return "conv_transpose1d"; }
    Shape input_shape() const override { return in_; }
    Shape output_shape() const override { return out_; }
    Tensor forward(const Tensor& x, LayerCache& cache) const override;
    Tensor backward(const Tensor& grad_out, const LayerCache& cache) override;
    std::vector<Param*> params() override { return {&weight_, &bias_}; }
    std::unique_ptr<Layer> clone() const override { return std::make_unique<ConvTranspose1d>(*this); }
    nlohmann::json config() const override;

    Param& weight() { return weight_; }  // in_channels x (out_channels * kernel)
    Param& bias() { return bias_; }

private:
    Shape in_, out_;
    int kernel_, stride_, padding_;
    Param weight_, bias_;
};

class Linear final : public Layer {
public:
    Linear(int in_features, int out_features);
    std::string kind() const override { return "linear"; }
    Shape input_shape() const override { return {1, in_}; }
    Shape output_shape() const override { return {1, out_}; }
    Tensor forward(const Tensor& x, LayerCache& cache) const override;
    Tensor backward(const Tensor& grad_out, const LayerCache& cache) override;
    std::vector<Param*> params() override { return {&weight_, &bias_}; }
    std::unique_ptr<Layer> clone() const override { return std::make_unique<Linear>(*this); }
    nlohmann::json config() const override;

    Param& weight() { return weight_; }  // out x in
    Param& bias() { return bias_; }

private:
    int in_, out_;
    Param weight_, bias_;
};

enum class ActivationKind { relu, leaky_relu, sigmoid, tanh };

class Activation final : public Layer {
public:
    Activation(Shape shape, ActivationKind kind, float slope = 0.2f);
    std::string kind() const override { return "activation"; }
    Shape input_shape() const override { return shape_; }
    Shape output_shape() const override { return shape_; }
    Tensor forward(const Tensor& x, LayerCache& cache) const override;
    Tensor backward(const Tensor& grad_out, const LayerCache& cache) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<Activation>(*this); }
    nlohmann::json config() const override;

private:
    Shape shape_;
    ActivationKind act_;
    float slope_;
};

class MaxPool1d final : public Layer {
public:
    MaxPool1d(Shape in, int size);
    std::string kind() const override { return "maxpool1d"; }
    Shape input_shape() const override { return in_; }
    Shape output_shape() const override { return out_; }
    Tensor forward(const Tensor& x, LayerCache& cache) const override;
    Tensor backward(const Tensor& grad_out, const LayerCache& cache) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<MaxPool1d>(*this); }
    nlohmann::json config() const override;

private:
    Shape in_, out_;
    int size_;
};

// Changes the logical (channels, length) view without touching data.
class Reshape final : public Layer {
public:
    Reshape(Shape in, Shape out);
    std::string kind() const override { return "reshape"; }
    Shape input_shape() const override { return in_; }
    Shape output_shape() const override { return out_; }
    Tensor forward(const Tensor& x, LayerCache& cache) const override;
    Tensor backward(const Tensor& grad_out, const LayerCache& cache) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<Reshape>(*this); }
    nlohmann::json config() const override;

private:
    Shape in_, out_;
};

using Tape = std::vector<LayerCache>;

class Sequential {
public:
    Sequential() = default;
    explicit Sequential(Shape input) : input_(input) {}
    Sequential(const Sequential& other);
    Sequential& operator=(const Sequential& other);
    Sequential(Sequential&&) noexcept = default;
    Sequential& operator=(Sequential&&) noexcept = default;

    // Appends a layer; its input shape must match the current output shape.
    template <typename L, typename... Args>
    L& add(Args&&... args) {
        auto layer = std::make_unique<L>(std::forward<Args>(args)...);
        L& ref = *layer;
        push(std::move(layer));
        return ref;
    }
    void push(std::unique_ptr<Layer> layer);

    Shape input_shape() const { return input_; }
    Shape output_shape() const;
    std::size_t size() const { return layers_.size(); }
    Layer& layer(std::size_t i) { return *layers_[i]; }
    const Layer& layer(std::size_t i) const { return *layers_[i]; }

    Tensor forward(const Tensor& x, Tape& tape) const;
    Tensor forward(const Tensor& x) const;  // inference, no tape kept
    // Forward through layers [0, end) only.
    Tensor forward_prefix(const Tensor& x, std::size_t end, Tape& tape) const;
    Tensor backward(const Tensor& grad_out, const Tape& tape);
    Tensor backward_prefix(const Tensor& grad_out, const Tape& tape, std::size_t end);

    std::vector<Param*> params();
    void zero_grad();
    std::size_t parameter_count() const;

    // Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights and biases.
    void initialize(Rng& rng);

    // Layer-by-layer shape signature, used to assert architectural identity.
    std::vector<std::pair<Shape, Shape>> shape_signature() const;

    nlohmann::json to_json() const;
    static Sequential from_json(const nlohmann::json& j);

private:
    Shape input_{};
    std::vector<std::unique_ptr<Layer>> layers_;
};

}  // namespace nids::nn
