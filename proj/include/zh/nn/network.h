#pragma once

#include <cstdint>
#include <vector>

#include "zh/encoding/action_table.h"
#include "zh/encoding/input_tensor.h"

namespace zh::nn {

struct Tensor {
    std::vector<int> shape;
    std::vector<float> values;

    Tensor() = default;
    Tensor(std::vector<int> s, float fill = 0.0f);

    int64_t count() const;
    friend bool operator==(const Tensor&, const Tensor&) = default;
};

struct NetworkConfig {
    uint32_t blocks = 12;
    uint32_t channels = 256;
    uint32_t policy_head_planes = 16;
    uint32_t value_head_planes = 8;

    friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

// Inference-mode batch normalization parameters.
struct BatchNorm {
    Tensor gamma, beta, mean, var;
};

struct ConvBlock {
    Tensor weight;  // [out, in, k, k], no bias (normalization follows)
    BatchNorm bn;
};

struct ResidualBlock {
    ConvBlock conv1, conv2;
};

// Layer order is fixed; see weights_io.h for the serialized layout.
struct NetworkWeights {
    ConvBlock stem;                      // 3x3, 15 -> channels
    std::vector<ResidualBlock> blocks;
    Tensor policy_conv_w, policy_conv_b; // 1x1 -> policy planes (with bias)
    Tensor policy_fc_w, policy_fc_b;     // [2308, planes*64]
    Tensor value_conv_w, value_conv_b;   // 1x1 -> value planes (with bias)
    Tensor value_fc_w, value_fc_b;       // [1, planes*64]
};

struct EvalResult {
    std::vector<float> policy;  // 2308 entries, >= 0, sum 1
    double value = 0.5;         // win probability in [0, 1] for the side to move
};

// Throws ShapeMismatch if weights do not fit the config.
void validate_shapes(const NetworkConfig& config, const NetworkWeights& weights);

// Stem conv+bn+relu, `blocks` residual blocks (conv-bn-relu, conv-bn, skip,
// relu), then a 1x1-conv + fully connected policy head (softmax over 2308)
// and value head (tanh mapped to [0,1] via (v+1)/2). Spatial size stays 8x8.
EvalResult forward(const NetworkConfig& config, const NetworkWeights& weights,
                   const InputTensor& input);

// Randomly initialized network for tests and smoke runs.
NetworkWeights random_weights(const NetworkConfig& config, uint64_t seed);

}  // namespace zh::nn
