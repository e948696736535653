#pragma once

#include <cstdint>
#include <vector>

#include "camoe/matrix.hpp"

namespace camoe {

enum class Activation : std::uint8_t { kRelu = 0 };
enum class OutputHead : std::uint8_t { kLinear = 0, kSoftmax = 1 };

/// Layered weights and biases of one dense network.
/// weights[i] has shape layer_dims[i+1] x layer_dims[i]; biases[i] has
/// length layer_dims[i+1]. Hidden layers apply `activation`, the final
/// layer is affine followed by `output_head`.
struct MlpParams {
    std::vector<std::size_t> layer_dims;
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
    Activation activation = Activation::kRelu;
    OutputHead output_head = OutputHead::kLinear;

    std::size_t num_layers() const { return weights.size(); }
    std::size_t input_dim() const { return layer_dims.front(); }
    std::size_t output_dim() const { return layer_dims.back(); }
};

/// Gradient container shaped like the parameters it differentiates.
struct MlpGrads {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
};

/// Per-layer values retained by a forward pass for backpropagation.
/// layer_inputs[i] is the activation entering layer i (layer_inputs[0] is
/// the network input); preacts[i] is the affine output of layer i.
struct ForwardCache {
    std::vector<Matrix> layer_inputs;
    std::vector<Matrix> preacts;
};

/// Glorot-uniform weights in [-sqrt(6/(fan_in+fan_out)), +...], zero
/// biases. Identical seed gives bit-identical parameters.
MlpParams init_params(const std::vector<std::size_t>& layer_dims, std::uint64_t seed,
                      OutputHead head = OutputHead::kLinear, Activation act = Activation::kRelu);

/// Forward pass over a batch (input is B x layer_dims[0]). When `cache` is
/// non-null it is filled for a later mlp_backward call.
Matrix mlp_forward(const MlpParams& params, const Matrix& input, ForwardCache* cache = nullptr);

/// Row-wise softmax with per-row max subtraction. Rows of the result are
/// probability vectors.
Matrix softmax(const Matrix& logits);

struct CrossEntropyResult {
    double loss = 0.0;
    Matrix grad_logits;  // (probs - one_hot) / B; valid when probs came from softmax
};

/// Mean negative log-likelihood with the picked probability clamped at
/// 1e-12.
CrossEntropyResult cross_entropy(const Matrix& probs, const std::vector<int>& labels);

/// Reverse-mode pass. `grad_output` is the gradient with respect to the
/// final affine output (the pre-head logits); for softmax heads pair it
/// with cross_entropy's grad_logits or convert a probability-space
/// gradient via softmax_grad_to_logits first. When `grad_input` is
/// non-null it receives the gradient with respect to the network input.
MlpGrads mlp_backward(const MlpParams& params, const ForwardCache& cache,
                      const Matrix& grad_output, Matrix* grad_input = nullptr);

/// Jacobian-vector product of a row-wise softmax: maps a gradient taken
/// with respect to probabilities to one with respect to logits.
Matrix softmax_grad_to_logits(const Matrix& probs, const Matrix& grad_probs);

/// Plain SGD update p <- p - lr * g, in place.
void sgd_step(MlpParams& params, const MlpGrads& grads, double lr);

/// Accumulate `other` into `acc` (shapes must match).
void accumulate(MlpGrads& acc, const MlpGrads& other);

/// Zero-filled gradients shaped like `params`.
MlpGrads zero_grads(const MlpParams& params);

}  // namespace camoe
