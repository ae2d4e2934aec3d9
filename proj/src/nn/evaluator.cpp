#include "zh/nn/evaluator.h"

#include <cmath>

#include "zh/errors.h"
#include "zh/nn/weights_io.h"

namespace zh::nn {

namespace {

std::vector<float> uniform_over_mask(const Position& pos) {
    std::vector<float> policy(kNumActions, 0.0f);
    const auto moves = legal_moves(pos);
    if (moves.empty()) {
        const float p = 1.0f / kNumActions;
        for (float& f : policy) f = p;
        return policy;
    }
    const float p = 1.0f / static_cast<float>(moves.size());
    for (const Move& m : moves)
        policy[action_table().move_to_index(pos, m).value()] = p;
    return policy;
}

}  // namespace

EvalResult UniformEvaluator::evaluate(const Position& pos) {
    return {uniform_over_mask(pos), 0.5};
}

double material_balance(const Position& pos) {
    constexpr double kValue[5] = {1, 3, 3, 5, 9};  // pawn..queen
    double balance = 0.0;
    for (int c = 0; c < 2; ++c) {
        const double sign = static_cast<Color>(c) == pos.side_to_move() ? 1.0 : -1.0;
        for (int k = 0; k < kDroppableKinds; ++k) {
            balance += sign * kValue[k] *
                       popcount(pos.pieces(static_cast<Color>(c),
                                           static_cast<PieceKind>(k)));
            balance += sign * kValue[k] *
                       pos.pocket(static_cast<Color>(c)).counts[k];
        }
    }
    return balance;
}

EvalResult MaterialEvaluator::evaluate(const Position& pos) {
    const double value = 1.0 / (1.0 + std::exp(-0.25 * material_balance(pos)));
    return {uniform_over_mask(pos), value};
}

NetworkEvaluator::NetworkEvaluator(NetworkConfig config, NetworkWeights weights)
    : config_(config), weights_(std::move(weights)) {
    validate_shapes(config_, weights_);
}

EvalResult NetworkEvaluator::evaluate(const Position& pos) {
    return forward(config_, weights_, encode_position(pos));
}

std::unique_ptr<Evaluator> make_evaluator(const std::string& kind,
                                          const std::string& weights_path) {
    if (kind == "uniform") return std::make_unique<UniformEvaluator>();
    if (kind == "material") return std::make_unique<MaterialEvaluator>();
    if (kind == "network") {
        if (weights_path.empty())
            throw DomainError("the network evaluator requires a weights path");
        auto [config, weights] = load_weights(weights_path);
        return std::make_unique<NetworkEvaluator>(config, std::move(weights));
    }
    throw DomainError("unknown evaluator kind: " + kind);
}

}  // namespace zh::nn
