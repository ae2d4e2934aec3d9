#pragma once

#include <memory>
#include <string>

#include "zh/encoding/action_table.h"
#include "zh/nn/network.h"

namespace zh::nn {

// Position evaluation contract used by the search: a nonnegative policy over
// the 2308 actions summing to 1, and a win probability in [0,1] for the side
// to move.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual EvalResult evaluate(const Position& pos) = 0;
    virtual std::string name() const = 0;
};

// Uniform policy over the legal mask, value 0.5. On positions with no legal
// moves the policy falls back to uniform over all actions.
class UniformEvaluator : public Evaluator {
public:
    EvalResult evaluate(const Position& pos) override;
    std::string name() const override { return "uniform"; }
};

// Uniform policy over the legal mask; value is a logistic of the material and
// pocket balance for the side to move.
class MaterialEvaluator : public Evaluator {
public:
    EvalResult evaluate(const Position& pos) override;
    std::string name() const override { return "material"; }
};

class NetworkEvaluator : public Evaluator {
public:
    NetworkEvaluator(NetworkConfig config, NetworkWeights weights);
    EvalResult evaluate(const Position& pos) override;
    std::string name() const override { return "network"; }
    const NetworkConfig& config() const { return config_; }

private:
    NetworkConfig config_;
    NetworkWeights weights_;
};

double material_balance(const Position& pos);  // pawns, for the side to move

std::unique_ptr<Evaluator> make_evaluator(const std::string& kind,
                                          const std::string& weights_path);

}  // namespace zh::nn
