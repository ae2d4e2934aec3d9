#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "naive_forward.h"
#include "random_games.h"
#include "zh/errors.h"
#include "zh/nn/evaluator.h"
#include "zh/nn/losses.h"
#include "zh/nn/weights_io.h"
#include "zh/rules/notation.h"

using namespace zh;

namespace {

nn::NetworkConfig tiny_config() {
    nn::NetworkConfig config;
    config.blocks = 1;
    config.channels = 4;
    config.policy_head_planes = 2;
    config.value_head_planes = 1;
    return config;
}

nn::NetworkWeights zero_weights(const nn::NetworkConfig& config) {
    nn::NetworkWeights w = nn::random_weights(config, 0);
    auto zero = [](nn::Tensor& t) {
        for (float& f : t.values) f = 0.0f;
    };
    auto zero_bn = [&](nn::BatchNorm& bn) {
        zero(bn.gamma), zero(bn.beta), zero(bn.mean);
        for (float& f : bn.var.values) f = 1.0f;
    };
    zero(w.stem.weight);
    zero_bn(w.stem.bn);
    for (auto& block : w.blocks) {
        zero(block.conv1.weight), zero_bn(block.conv1.bn);
        zero(block.conv2.weight), zero_bn(block.conv2.bn);
    }
    zero(w.policy_conv_w), zero(w.policy_conv_b);
    zero(w.policy_fc_w), zero(w.policy_fc_b);
    zero(w.value_conv_w), zero(w.value_conv_b);
    zero(w.value_fc_w), zero(w.value_fc_b);
    return w;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("forward output is a distribution with a bounded value") {
    const auto config = tiny_config();
    const auto weights = nn::random_weights(config, 42);
    const auto result = nn::forward(config, weights, encode_position(initial_position()));
    REQUIRE(result.policy.size() == size_t(kNumActions));
    double sum = 0.0;
    for (float p : result.policy) {
        CHECK(p >= 0.0f);
        sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(result.value >= 0.0);
    CHECK(result.value <= 1.0);
}

TEST_CASE("all-zero weights give the same output for every input") {
    const auto config = tiny_config();
    const auto weights = zero_weights(config);
    const auto a = nn::forward(config, weights, encode_position(initial_position()));
    const auto positions = zh::testing::random_positions(5, 3);
    for (const Position& pos : positions) {
        const auto b = nn::forward(config, weights, encode_position(pos));
        CHECK(b.policy == a.policy);
        CHECK(b.value == a.value);
    }
    CHECK(a.value == doctest::Approx(0.5));
    for (float p : a.policy) CHECK(p == doctest::Approx(1.0 / kNumActions));
}

TEST_CASE("known head biases with zero convolutions") {
    // with all convs zero the policy logits equal the fc bias and the value
    // is squash(value bias)
    auto config = tiny_config();
    auto weights = zero_weights(config);
    weights.policy_fc_b.values[7] = 1.0f;  // one boosted logit
    weights.value_fc_b.values[0] = 0.3f;
    const auto result = nn::forward(config, weights, encode_position(initial_position()));

    const double expected_hi = std::exp(1.0) / (std::exp(1.0) + (kNumActions - 1));
    const double expected_lo = 1.0 / (std::exp(1.0) + (kNumActions - 1));
    CHECK(result.policy[7] == doctest::Approx(expected_hi).epsilon(1e-6));
    CHECK(result.policy[0] == doctest::Approx(expected_lo).epsilon(1e-6));
    const double bias = weights.value_fc_b.values[0];
    CHECK(result.value == doctest::Approx((std::tanh(bias) + 1.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("residual block with zero convolutions is an identity") {
    // a two-block network whose second block is zeroed with identity
    // normalization must match the one-block network: the block input is
    // already post-relu, so relu(x + 0) == x
    nn::NetworkConfig two = tiny_config();
    two.blocks = 2;
    auto weights = nn::random_weights(two, 9);
    auto zero = [](nn::Tensor& t) {
        for (float& f : t.values) f = 0.0f;
    };
    auto identity_bn = [](nn::BatchNorm& bn) {
        for (float& f : bn.gamma.values) f = 1.0f;
        for (float& f : bn.beta.values) f = 0.0f;
        for (float& f : bn.mean.values) f = 0.0f;
        for (float& f : bn.var.values) f = 1.0f - 1e-5f;  // sqrt(var+eps) == 1
    };
    zero(weights.blocks[1].conv1.weight);
    identity_bn(weights.blocks[1].conv1.bn);
    zero(weights.blocks[1].conv2.weight);
    identity_bn(weights.blocks[1].conv2.bn);

    nn::NetworkConfig one = two;
    one.blocks = 1;
    auto truncated = nn::random_weights(one, 1);
    truncated.stem = weights.stem;
    truncated.blocks[0] = weights.blocks[0];
    truncated.policy_conv_w = weights.policy_conv_w;
    truncated.policy_conv_b = weights.policy_conv_b;
    truncated.policy_fc_w = weights.policy_fc_w;
    truncated.policy_fc_b = weights.policy_fc_b;
    truncated.value_conv_w = weights.value_conv_w;
    truncated.value_conv_b = weights.value_conv_b;
    truncated.value_fc_w = weights.value_fc_w;
    truncated.value_fc_b = weights.value_fc_b;

    const InputTensor input = encode_position(initial_position());
    const auto with_block = nn::forward(two, weights, input);
    const auto without = nn::forward(one, truncated, input);
    for (int i = 0; i < kNumActions; ++i)
        CHECK(with_block.policy[i] == doctest::Approx(without.policy[i]).epsilon(1e-6));
    CHECK(with_block.value == doctest::Approx(without.value).epsilon(1e-9));
}

TEST_CASE("production forward matches the naive oracle") {
    const auto config = tiny_config();
    const auto positions = zh::testing::random_positions(4, 5);
    for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto weights = nn::random_weights(config, seed);
        for (const Position& pos : positions) {
            const InputTensor input = encode_position(pos);
            const auto fast = nn::forward(config, weights, input);
            const auto naive = oracle::naive_forward(config, weights, input);
            for (int i = 0; i < kNumActions; ++i)
                CHECK(std::abs(fast.policy[i] - naive.policy[i]) < 1e-5);
            CHECK(std::abs(fast.value - naive.value) < 1e-5);
        }
    }
}

TEST_CASE("forward is deterministic") {
    const auto config = tiny_config();
    const auto weights = nn::random_weights(config, 77);
    const InputTensor input = encode_position(initial_position());
    const auto a = nn::forward(config, weights, input);
    const auto b = nn::forward(config, weights, input);
    CHECK(a.policy == b.policy);
    CHECK(a.value == b.value);
}

TEST_CASE("weights round trip bitwise") {
    const auto config = tiny_config();
    const auto weights = nn::random_weights(config, 1234);
    const std::string path = temp_path("zh_test_weights.zhnn");
    nn::save_weights(path, config, weights);
    const auto [config2, weights2] = nn::load_weights(path);
    CHECK(config2 == config);
    CHECK(weights2.stem.weight == weights.stem.weight);
    CHECK(weights2.blocks[0].conv2.bn.var == weights.blocks[0].conv2.bn.var);
    CHECK(weights2.policy_fc_w == weights.policy_fc_w);
    CHECK(weights2.value_fc_b == weights.value_fc_b);
    std::remove(path.c_str());
}

TEST_CASE("weights loader rejects bad input") {
    const auto config = tiny_config();
    const auto weights = nn::random_weights(config, 5);
    const std::string path = temp_path("zh_test_weights_bad.zhnn");
    nn::save_weights(path, config, weights);

    // truncation
    {
        std::ifstream in(path, std::ios::binary);
        std::string all((std::istreambuf_iterator<char>(in)), {});
        std::ofstream out(path, std::ios::binary);
        out.write(all.data(), static_cast<std::streamsize>(all.size() / 2));
    }
    CHECK_THROWS_AS(nn::load_weights(path), FormatError);

    // bad magic
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOPE";
    }
    CHECK_THROWS_AS(nn::load_weights(path), FormatError);
    std::remove(path.c_str());

    // zero blocks rejected before any tensor data
    nn::NetworkConfig bad = config;
    bad.blocks = 0;
    nn::NetworkWeights none = weights;
    none.blocks.clear();
    CHECK_THROWS_AS(nn::save_weights(temp_path("zh_test_never.zhnn"), bad, none),
                    ShapeMismatch);
}

TEST_CASE("poisson nll closed forms") {
    std::vector<float> pred(kNumActions, 0.0f);
    const float eps = static_cast<float>(nn::kLossEpsilon);

    // prediction equals the scaled one-hot target (epsilon floored)
    for (float& f : pred) f = eps;
    pred[100] = 1.0f;
    PolicyTarget target{ActionIndex(100), 1.0f};
    const double expected_min =
        ((kNumActions - 1) * double(eps) + 1.0 - 1.0 * std::log(1.0)) / kNumActions;
    CHECK(nn::poisson_nll(pred, target) == doctest::Approx(expected_min).epsilon(1e-12));

    // uniform prediction, scale-1.0 target
    const float u = 1.0f / kNumActions;
    for (float& f : pred) f = u;
    const double expected_uniform =
        (kNumActions * double(u) - std::log(double(u))) / kNumActions;
    CHECK(nn::poisson_nll(pred, target) ==
          doctest::Approx(expected_uniform).epsilon(1e-12));

    // doubling the target scale adds exactly the extra ln-term
    PolicyTarget doubled{ActionIndex(100), 2.0f};
    const double base = nn::poisson_nll(pred, target);
    const double twice = nn::poisson_nll(pred, doubled);
    CHECK(twice - base ==
          doctest::Approx(-std::log(double(u)) / kNumActions).epsilon(1e-12));

    // nonpositive predictions are rejected
    pred[5] = 0.0f;
    CHECK_THROWS_AS(nn::poisson_nll(pred, target), DomainError);
}

TEST_CASE("mse closed forms") {
    CHECK(nn::mse(0.5, ValueTarget{0.5f}) == 0.0);
    CHECK(nn::mse(1.0, ValueTarget{0.0f}) == 1.0);
    CHECK(nn::mse(0.75, ValueTarget{0.5f}) == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("baseline evaluators satisfy the contract") {
    const Position pos = parse_fen("4k3/8/8/8/4n3/3P4/8/4K3[] w - - 0 1");

    nn::UniformEvaluator uniform;
    const auto u = uniform.evaluate(pos);
    double sum = 0.0;
    for (float p : u.policy) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(u.value == 0.5);
    const auto mask = action_table().legal_move_mask(pos);
    for (int i = 0; i < kNumActions; ++i)
        if (!mask[i]) CHECK(u.policy[i] == 0.0f);

    nn::MaterialEvaluator material;
    const auto m = material.evaluate(pos);
    CHECK(m.value > 0.0);
    CHECK(m.value < 0.5);  // a pawn against a knight
    // after the capture the mover (now P2) is behind a pawn plus a pocketed knight
    const Position up = apply_move(pos, parse_uci_move(pos, "d3e4"));
    CHECK(material.evaluate(up).value < 0.5);
}

TEST_CASE("network evaluator wraps encode + forward") {
    const auto config = tiny_config();
    auto weights = nn::random_weights(config, 21);
    nn::NetworkEvaluator evaluator(config, std::move(weights));
    const auto result = evaluator.evaluate(initial_position());
    double sum = 0.0;
    for (float p : result.policy) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(result.value >= 0.0);
    CHECK(result.value <= 1.0);
}
