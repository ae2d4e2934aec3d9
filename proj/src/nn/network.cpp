#include "zh/nn/network.h"

#include <cmath>
#include <random>

#include "zh/errors.h"

namespace zh::nn {

namespace {
constexpr float kBnEpsilon = 1e-5f;
constexpr int kSpatial = 64;  // 8x8 throughout
}  // namespace

Tensor::Tensor(std::vector<int> s, float fill) : shape(std::move(s)) {
    values.assign(static_cast<size_t>(count()), fill);
}

int64_t Tensor::count() const {
    int64_t n = 1;
    for (int d : shape) n *= d;
    return n;
}

namespace {

void expect_shape(const Tensor& t, std::vector<int> shape, const char* name) {
    if (t.shape != shape || t.count() != static_cast<int64_t>(t.values.size()))
        throw ShapeMismatch(std::string("tensor '") + name +
                            "' has an unexpected shape");
}

void check_bn(const BatchNorm& bn, int channels, const char* name) {
    expect_shape(bn.gamma, {channels}, name);
    expect_shape(bn.beta, {channels}, name);
    expect_shape(bn.mean, {channels}, name);
    expect_shape(bn.var, {channels}, name);
    for (float v : bn.var.values)
        if (!(v > 0.0f))
            throw ShapeMismatch(std::string("normalization variance in '") + name +
                                "' must be strictly positive");
}

// 3x3 conv, stride 1, padding 1, no bias. in/out are [C][64] row-major.
void conv3x3(const float* in, int in_ch, const Tensor& w, int out_ch, float* out) {
    for (int oc = 0; oc < out_ch; ++oc) {
        float* dst = out + oc * kSpatial;
        for (int i = 0; i < kSpatial; ++i) dst[i] = 0.0f;
        for (int ic = 0; ic < in_ch; ++ic) {
            const float* src = in + ic * kSpatial;
            const float* k = &w.values[(static_cast<size_t>(oc) * in_ch + ic) * 9];
            for (int y = 0; y < 8; ++y) {
                for (int x = 0; x < 8; ++x) {
                    float acc = 0.0f;
                    for (int dy = -1; dy <= 1; ++dy) {
                        const int yy = y + dy;
                        if (yy < 0 || yy > 7) continue;
                        for (int dx = -1; dx <= 1; ++dx) {
                            const int xx = x + dx;
                            if (xx < 0 || xx > 7) continue;
                            acc += k[(dy + 1) * 3 + (dx + 1)] * src[yy * 8 + xx];
                        }
                    }
                    dst[y * 8 + x] += acc;
                }
            }
        }
    }
}

void conv1x1(const float* in, int in_ch, const Tensor& w, const Tensor& b,
             int out_ch, float* out) {
    for (int oc = 0; oc < out_ch; ++oc) {
        float* dst = out + oc * kSpatial;
        for (int i = 0; i < kSpatial; ++i) dst[i] = b.values[oc];
        for (int ic = 0; ic < in_ch; ++ic) {
            const float k = w.values[static_cast<size_t>(oc) * in_ch + ic];
            const float* src = in + ic * kSpatial;
            for (int i = 0; i < kSpatial; ++i) dst[i] += k * src[i];
        }
    }
}

void batch_norm(float* data, int channels, const BatchNorm& bn) {
    for (int c = 0; c < channels; ++c) {
        const float scale = bn.gamma.values[c] / std::sqrt(bn.var.values[c] + kBnEpsilon);
        const float shift = bn.beta.values[c] - bn.mean.values[c] * scale;
        float* d = data + c * kSpatial;
        for (int i = 0; i < kSpatial; ++i) d[i] = d[i] * scale + shift;
    }
}

void relu(float* data, int n) {
    for (int i = 0; i < n; ++i)
        if (data[i] < 0.0f) data[i] = 0.0f;
}

}  // namespace

void validate_shapes(const NetworkConfig& config, const NetworkWeights& w) {
    if (config.blocks == 0 || config.channels == 0 ||
        config.policy_head_planes == 0 || config.value_head_planes == 0)
        throw ShapeMismatch("network config fields must be positive");
    const int c = static_cast<int>(config.channels);
    const int p = static_cast<int>(config.policy_head_planes);
    const int v = static_cast<int>(config.value_head_planes);

    expect_shape(w.stem.weight, {c, InputTensor::kPlanes, 3, 3}, "stem.conv");
    check_bn(w.stem.bn, c, "stem.bn");
    if (w.blocks.size() != config.blocks)
        throw ShapeMismatch("wrong number of residual blocks");
    for (const auto& block : w.blocks) {
        expect_shape(block.conv1.weight, {c, c, 3, 3}, "block.conv1");
        check_bn(block.conv1.bn, c, "block.bn1");
        expect_shape(block.conv2.weight, {c, c, 3, 3}, "block.conv2");
        check_bn(block.conv2.bn, c, "block.bn2");
    }
    expect_shape(w.policy_conv_w, {p, c, 1, 1}, "policy.conv.weight");
    expect_shape(w.policy_conv_b, {p}, "policy.conv.bias");
    expect_shape(w.policy_fc_w, {kNumActions, p * kSpatial}, "policy.fc.weight");
    expect_shape(w.policy_fc_b, {kNumActions}, "policy.fc.bias");
    expect_shape(w.value_conv_w, {v, c, 1, 1}, "value.conv.weight");
    expect_shape(w.value_conv_b, {v}, "value.conv.bias");
    expect_shape(w.value_fc_w, {1, v * kSpatial}, "value.fc.weight");
    expect_shape(w.value_fc_b, {1}, "value.fc.bias");
}

EvalResult forward(const NetworkConfig& config, const NetworkWeights& weights,
                   const InputTensor& input) {
    validate_shapes(config, weights);
    const int c = static_cast<int>(config.channels);

    std::vector<float> a(static_cast<size_t>(c) * kSpatial);
    std::vector<float> b(static_cast<size_t>(c) * kSpatial);
    std::vector<float> t(static_cast<size_t>(c) * kSpatial);

    conv3x3(input.values.data(), InputTensor::kPlanes, weights.stem.weight, c,
            a.data());
    batch_norm(a.data(), c, weights.stem.bn);
    relu(a.data(), c * kSpatial);

    for (const auto& block : weights.blocks) {
        conv3x3(a.data(), c, block.conv1.weight, c, b.data());
        batch_norm(b.data(), c, block.conv1.bn);
        relu(b.data(), c * kSpatial);
        conv3x3(b.data(), c, block.conv2.weight, c, t.data());
        batch_norm(t.data(), c, block.conv2.bn);
        for (int i = 0; i < c * kSpatial; ++i) t[i] += a[i];  // identity skip
        relu(t.data(), c * kSpatial);
        std::swap(a, t);
    }

    EvalResult result;

    // policy head
    const int p = static_cast<int>(config.policy_head_planes);
    std::vector<float> ph(static_cast<size_t>(p) * kSpatial);
    conv1x1(a.data(), c, weights.policy_conv_w, weights.policy_conv_b, p, ph.data());
    std::vector<double> logits(kNumActions);
    for (int i = 0; i < kNumActions; ++i) {
        double acc = weights.policy_fc_b.values[i];
        const float* row = &weights.policy_fc_w.values[static_cast<size_t>(i) * p * kSpatial];
        for (int j = 0; j < p * kSpatial; ++j) acc += double(row[j]) * ph[j];
        logits[i] = acc;
    }
    double max_logit = logits[0];
    for (double l : logits) max_logit = std::max(max_logit, l);
    double sum = 0.0;
    result.policy.resize(kNumActions);
    for (int i = 0; i < kNumActions; ++i) {
        const double e = std::exp(logits[i] - max_logit);
        result.policy[i] = static_cast<float>(e);
        sum += e;
    }
    for (float& f : result.policy) f = static_cast<float>(f / sum);

    // value head
    const int v = static_cast<int>(config.value_head_planes);
    std::vector<float> vh(static_cast<size_t>(v) * kSpatial);
    conv1x1(a.data(), c, weights.value_conv_w, weights.value_conv_b, v, vh.data());
    double z = weights.value_fc_b.values[0];
    for (int j = 0; j < v * kSpatial; ++j)
        z += double(weights.value_fc_w.values[j]) * vh[j];
    result.value = (std::tanh(z) + 1.0) / 2.0;

    return result;
}

NetworkWeights random_weights(const NetworkConfig& config, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<float> dist(0.0f, 0.1f);
    auto rand_tensor = [&](std::vector<int> shape) {
        Tensor t(std::move(shape));
        for (float& f : t.values) f = dist(rng);
        return t;
    };
    auto rand_bn = [&](int channels) {
        BatchNorm bn;
        bn.gamma = rand_tensor({channels});
        bn.beta = rand_tensor({channels});
        bn.mean = rand_tensor({channels});
        bn.var = Tensor({channels});
        for (float& f : bn.var.values) f = 0.5f + std::abs(dist(rng));
        return bn;
    };

    const int c = static_cast<int>(config.channels);
    const int p = static_cast<int>(config.policy_head_planes);
    const int v = static_cast<int>(config.value_head_planes);

    NetworkWeights w;
    w.stem.weight = rand_tensor({c, InputTensor::kPlanes, 3, 3});
    w.stem.bn = rand_bn(c);
    w.blocks.resize(config.blocks);
    for (auto& block : w.blocks) {
        block.conv1.weight = rand_tensor({c, c, 3, 3});
        block.conv1.bn = rand_bn(c);
        block.conv2.weight = rand_tensor({c, c, 3, 3});
        block.conv2.bn = rand_bn(c);
    }
    w.policy_conv_w = rand_tensor({p, c, 1, 1});
    w.policy_conv_b = rand_tensor({p});
    w.policy_fc_w = rand_tensor({kNumActions, p * kSpatial});
    w.policy_fc_b = rand_tensor({kNumActions});
    w.value_conv_w = rand_tensor({v, c, 1, 1});
    w.value_conv_b = rand_tensor({v});
    w.value_fc_w = rand_tensor({1, v * kSpatial});
    w.value_fc_b = rand_tensor({1});
    return w;
}

}  // namespace zh::nn
