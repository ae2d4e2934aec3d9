#include "zh/data/metrics.h"

#include <algorithm>

#include "zh/errors.h"
#include "zh/nn/losses.h"

namespace zh::data {

double evaluate_policy_accuracy(nn::Evaluator& evaluator,
                                std::span<const LabeledExample> dataset) {
    if (dataset.empty()) throw DomainError("accuracy requires a nonempty dataset");
    const auto& table = action_table();
    size_t hits = 0;
    for (const LabeledExample& labeled : dataset) {
        const nn::EvalResult eval = evaluator.evaluate(labeled.pos);
        int best = -1;
        float best_p = -1.0f;
        for (const Move& m : legal_moves(labeled.pos)) {
            const int index = table.move_to_index(labeled.pos, m).value();
            const float p = eval.policy[index];
            if (p > best_p || (p == best_p && index < best)) {
                best_p = p;
                best = index;
            }
        }
        if (best == labeled.ex.policy.index.value()) ++hits;
    }
    return static_cast<double>(hits) / dataset.size();
}

Losses evaluate_losses(nn::Evaluator& evaluator,
                       std::span<const LabeledExample> dataset) {
    if (dataset.empty()) throw DomainError("losses require a nonempty dataset");
    Losses losses;
    std::vector<float> pred(kNumActions);
    for (const LabeledExample& labeled : dataset) {
        const nn::EvalResult eval = evaluator.evaluate(labeled.pos);
        for (int i = 0; i < kNumActions; ++i)
            pred[i] = std::max(eval.policy[i],
                               static_cast<float>(nn::kLossEpsilon));
        losses.policy += nn::poisson_nll(pred, labeled.ex.policy);
        losses.value += nn::mse(eval.value, labeled.ex.value);
    }
    losses.policy /= dataset.size();
    losses.value /= dataset.size();
    return losses;
}

double mean_game_plies(const std::vector<GameRecord>& games) {
    if (games.empty()) return 0.0;
    size_t total = 0;
    for (const GameRecord& game : games) total += game.moves.size();
    return static_cast<double>(total) / games.size();
}

}  // namespace zh::data
