#pragma once

#include <atomic>
#include <string>

#include "zh/engine/time_manager.h"
#include "zh/nn/evaluator.h"
#include "zh/search/mcts.h"

namespace zh::engine {

struct EngineConfig {
    std::string weights_path;
    std::string evaluator = "uniform";  // uniform | material | network
    search::SearchParams search;
    int verbosity = 0;
    int64_t safety_margin_ms = kDefaultSafetyMarginMs;
};

// Argmax of the evaluator policy over the legal mask, ties broken by the
// lower action index. Throws NoLegalMoves on terminal positions.
Move top_policy_move(const Position& pos, nn::Evaluator& evaluator);

// Clock-driven move choice: with less than ten seconds remaining the tree
// search is skipped and the top policy move is played; otherwise the search
// runs with the depth from depth_for_time and the time_allocation budget.
Move choose_move(const Position& pos, const ClockState& clock,
                 nn::Evaluator& evaluator, const search::SearchParams& params,
                 int64_t safety_margin_ms = kDefaultSafetyMarginMs,
                 const std::atomic<bool>* stop = nullptr);

// Budget-driven move choice (self-play, fixed playout counts).
Move choose_move(const Position& pos, nn::Evaluator& evaluator,
                 const search::SearchParams& params,
                 const std::atomic<bool>* stop = nullptr);

}  // namespace zh::engine
