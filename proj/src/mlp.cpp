#include "camoe/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "camoe/errors.hpp"
#include "camoe/rng.hpp"

namespace camoe {

MlpParams init_params(const std::vector<std::size_t>& layer_dims, std::uint64_t seed,
                      OutputHead head, Activation act) {
    if (layer_dims.size() < 2) {
        throw InvalidDimensionError("init_params: need at least input and output dims");
    }
    for (std::size_t d : layer_dims) {
        if (d == 0) throw InvalidDimensionError("init_params: zero layer dimension");
    }
    MlpParams p;
    p.layer_dims = layer_dims;
    p.activation = act;
    p.output_head = head;
    Rng rng(seed);
    for (std::size_t i = 0; i + 1 < layer_dims.size(); ++i) {
        const std::size_t fan_in = layer_dims[i];
        const std::size_t fan_out = layer_dims[i + 1];
        const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        std::uniform_real_distribution<double> dist(-limit, limit);
        Matrix w(fan_out, fan_in);
        for (double& v : w.data) v = dist(rng);
        p.weights.push_back(std::move(w));
        p.biases.emplace_back(fan_out, 0.0);
    }
    return p;
}

Matrix mlp_forward(const MlpParams& params, const Matrix& input, ForwardCache* cache) {
    if (input.cols != params.input_dim()) {
        throw InvalidDimensionError("mlp_forward: input has " + std::to_string(input.cols) +
                                    " cols, expected " + std::to_string(params.input_dim()));
    }
    if (cache) {
        cache->layer_inputs.clear();
        cache->preacts.clear();
    }
    Matrix act = input;
    const std::size_t L = params.num_layers();
    for (std::size_t l = 0; l < L; ++l) {
        if (cache) cache->layer_inputs.push_back(act);
        Matrix pre = matmul_nt(act, params.weights[l]);
        const std::vector<double>& b = params.biases[l];
        for (std::size_t i = 0; i < pre.rows; ++i) {
            double* row = pre.data.data() + i * pre.cols;
            for (std::size_t j = 0; j < pre.cols; ++j) row[j] += b[j];
        }
        if (cache) cache->preacts.push_back(pre);
        if (l + 1 < L) {
            for (double& v : pre.data) v = v > 0.0 ? v : 0.0;  // ReLU
            act = std::move(pre);
        } else {
            act = params.output_head == OutputHead::kSoftmax ? softmax(pre) : std::move(pre);
        }
    }
    require_finite(act, "mlp_forward output");
    return act;
}

Matrix softmax(const Matrix& logits) {
    Matrix out(logits.rows, logits.cols);
    for (std::size_t i = 0; i < logits.rows; ++i) {
        const double* in = logits.data.data() + i * logits.cols;
        double* o = out.data.data() + i * out.cols;
        double mx = in[0];
        for (std::size_t j = 1; j < logits.cols; ++j) mx = std::max(mx, in[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < logits.cols; ++j) {
            o[j] = std::exp(in[j] - mx);
            sum += o[j];
        }
        for (std::size_t j = 0; j < logits.cols; ++j) o[j] /= sum;
    }
    require_finite(out, "softmax output");
    return out;
}

CrossEntropyResult cross_entropy(const Matrix& probs, const std::vector<int>& labels) {
    if (labels.size() != probs.rows) {
        throw InvalidDimensionError("cross_entropy: label count != batch rows");
    }
    const std::size_t B = probs.rows;
    const std::size_t C = probs.cols;
    CrossEntropyResult res;
    res.grad_logits = Matrix(B, C);
    double total = 0.0;
    for (std::size_t i = 0; i < B; ++i) {
        const int y = labels[i];
        if (y < 0 || static_cast<std::size_t>(y) >= C) {
            throw InvalidLabelError("cross_entropy: label " + std::to_string(y) +
                                    " outside [0, " + std::to_string(C) + ")");
        }
        total -= std::log(std::max(probs(i, static_cast<std::size_t>(y)), 1e-12));
        for (std::size_t j = 0; j < C; ++j) {
            res.grad_logits(i, j) = probs(i, j) / static_cast<double>(B);
        }
        res.grad_logits(i, static_cast<std::size_t>(y)) -= 1.0 / static_cast<double>(B);
    }
    res.loss = total / static_cast<double>(B);
    return res;
}

MlpGrads mlp_backward(const MlpParams& params, const ForwardCache& cache,
                      const Matrix& grad_output, Matrix* grad_input) {
    const std::size_t L = params.num_layers();
    if (cache.layer_inputs.size() != L || cache.preacts.size() != L) {
        throw InvalidDimensionError("mlp_backward: cache does not match parameter layers");
    }
    if (grad_output.rows != cache.preacts.back().rows ||
        grad_output.cols != params.output_dim()) {
        throw InvalidDimensionError("mlp_backward: grad_output shape mismatch");
    }
    MlpGrads grads;
    grads.weights.resize(L);
    grads.biases.resize(L);
    Matrix delta = grad_output;  // gradient at the current layer's affine output
    for (std::size_t l = L; l-- > 0;) {
        grads.weights[l] = matmul_tn(delta, cache.layer_inputs[l]);
        std::vector<double> bgrad(params.biases[l].size(), 0.0);
        for (std::size_t i = 0; i < delta.rows; ++i) {
            const double* row = delta.data.data() + i * delta.cols;
            for (std::size_t j = 0; j < delta.cols; ++j) bgrad[j] += row[j];
        }
        grads.biases[l] = std::move(bgrad);
        if (l > 0 || grad_input) {
            Matrix gin = matmul(delta, params.weights[l]);
            if (l > 0) {
                const Matrix& pre = cache.preacts[l - 1];
                for (std::size_t i = 0; i < gin.data.size(); ++i) {
                    if (pre.data[i] <= 0.0) gin.data[i] = 0.0;  // inactive ReLU unit
                }
                delta = std::move(gin);
            } else {
                *grad_input = std::move(gin);
            }
        }
    }
    return grads;
}

Matrix softmax_grad_to_logits(const Matrix& probs, const Matrix& grad_probs) {
    if (!probs.same_shape(grad_probs)) {
        throw InvalidDimensionError("softmax_grad_to_logits: shape mismatch");
    }
    Matrix out(probs.rows, probs.cols);
    for (std::size_t i = 0; i < probs.rows; ++i) {
        const double* p = probs.data.data() + i * probs.cols;
        const double* g = grad_probs.data.data() + i * grad_probs.cols;
        double dot = 0.0;
        for (std::size_t j = 0; j < probs.cols; ++j) dot += p[j] * g[j];
        double* o = out.data.data() + i * out.cols;
        for (std::size_t j = 0; j < probs.cols; ++j) o[j] = p[j] * (g[j] - dot);
    }
    return out;
}

void sgd_step(MlpParams& params, const MlpGrads& grads, double lr) {
    if (lr < 0.0) throw InvalidArgumentError("sgd_step: negative learning rate");
    if (grads.weights.size() != params.weights.size()) {
        throw InvalidDimensionError("sgd_step: layer count mismatch");
    }
    for (std::size_t l = 0; l < params.weights.size(); ++l) {
        if (!params.weights[l].same_shape(grads.weights[l]) ||
            params.biases[l].size() != grads.biases[l].size()) {
            throw InvalidDimensionError("sgd_step: gradient shape mismatch at layer " +
                                        std::to_string(l));
        }
        for (std::size_t i = 0; i < params.weights[l].data.size(); ++i) {
            params.weights[l].data[i] -= lr * grads.weights[l].data[i];
        }
        for (std::size_t i = 0; i < params.biases[l].size(); ++i) {
            params.biases[l][i] -= lr * grads.biases[l][i];
        }
    }
}

void accumulate(MlpGrads& acc, const MlpGrads& other) {
    if (acc.weights.empty()) {
        acc = other;
        return;
    }
    if (acc.weights.size() != other.weights.size()) {
        throw InvalidDimensionError("accumulate: layer count mismatch");
    }
    for (std::size_t l = 0; l < acc.weights.size(); ++l) {
        for (std::size_t i = 0; i < acc.weights[l].data.size(); ++i) {
            acc.weights[l].data[i] += other.weights[l].data[i];
        }
        for (std::size_t i = 0; i < acc.biases[l].size(); ++i) {
            acc.biases[l][i] += other.biases[l][i];
        }
    }
}

MlpGrads zero_grads(const MlpParams& params) {
    MlpGrads g;
    for (std::size_t l = 0; l < params.num_layers(); ++l) {
        g.weights.emplace_back(params.weights[l].rows, params.weights[l].cols);
        g.biases.emplace_back(params.biases[l].size(), 0.0);
    }
    return g;
}

}  // namespace camoe
