#pragma once

#include <span>

#include "zh/data/dataset.h"
#include "zh/nn/evaluator.h"

namespace zh::data {

// Fraction of examples whose top-1 masked policy move matches the recorded
// action index (argmax ties broken by the lower index).
double evaluate_policy_accuracy(nn::Evaluator& evaluator,
                                std::span<const LabeledExample> dataset);

struct Losses {
    double policy = 0.0;  // mean Poisson NLL
    double value = 0.0;   // mean squared error
};

// Evaluator predictions are floored at kLossEpsilon before the policy loss so
// that masked (zero) entries stay in the Poisson NLL domain.
Losses evaluate_losses(nn::Evaluator& evaluator,
                       std::span<const LabeledExample> dataset);

double mean_game_plies(const std::vector<GameRecord>& games);

}  // namespace zh::data
