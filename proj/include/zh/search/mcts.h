#pragma once

#include <atomic>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "zh/encoding/action_table.h"
#include "zh/nn/evaluator.h"
#include "zh/rules/position.h"

namespace zh::search {

struct SearchParams {
    double alpha = 0.3;       // noise constant
    double beta = 6.0;        // noise decay value
    double gamma = 0.5;       // exploration constant
    double mate_score = 1.5;  // win score credited to a mating move
    int playout_depth = 20;   // plies from root a playout may descend
    // budget: either or both may be set; the search stops at whichever
    // limit is hit first
    std::optional<uint64_t> playout_budget = 800;
    std::optional<int64_t> time_budget_ms;
    uint64_t seed = 0;
};

struct SearchNode {
    Move move_from_parent{};            // unset at the root
    double prior = 0.0;                 // masked, renormalized policy probability
    int visits = 0;
    double win_sum = 0.0;               // accumulated playout scores
    bool expanded = false;
    std::vector<std::unique_ptr<SearchNode>> children;

    // lazily materialized
    std::optional<Position> pos;
    std::optional<std::optional<GameResult>> result;

    bool terminal() const { return result && result->has_value(); }
    double mean_score() const { return win_sum / std::max(1, visits); }
};

struct MoveVisits {
    Move move;
    int visits;
    double mean_score;
};

struct SearchResult {
    Move best_move{};
    std::vector<MoveVisits> visit_distribution;  // sorted by action index
    double root_value = 0.5;
    uint64_t playouts = 0;
};

using Rng = std::mt19937_64;

// Uniform sample in [-alpha/(x*beta), +alpha/(x*beta)]; exactly 0 when
// alpha == 0. x is the full-game move number (>= 1).
double noise(const SearchParams& params, int move_number, Rng& rng);

// Eq.-style node score:
//   V = (c*(U + Noise) + Wbar) / 2 + gamma * sqrt(N_parent) / (1 + n_child)
// with U the child prior, Wbar = win_sum / max(1, visits) and
// c = 1 / max_sibling_prior.
double node_score(const SearchNode& child, int parent_visits,
                  double max_sibling_prior, const SearchParams& params,
                  int move_number, Rng& rng);

class Searcher {
public:
    Searcher(nn::Evaluator& evaluator, SearchParams params,
             const std::atomic<bool>* stop = nullptr);

    // Runs playouts until the budget is exhausted or stop is set.
    // Throws NoLegalMoves on terminal positions.
    SearchResult run(const Position& root_pos);

    // One line per playout: UCI path and leaf value.
    void set_trace(std::function<void(const std::string&)> sink) {
        trace_ = std::move(sink);
    }

    // Exposed for unit tests.
    std::vector<SearchNode*> select_path(SearchNode& root, int move_number);
    double expand_and_evaluate(SearchNode& node);
    void backpropagate(const std::vector<SearchNode*>& path, double leaf_value);

private:
    void materialize(SearchNode& node, const SearchNode& parent);

    nn::Evaluator& evaluator_;
    SearchParams params_;
    const std::atomic<bool>* stop_;
    Rng rng_;
    std::function<void(const std::string&)> trace_;
};

SearchResult search(const Position& pos, nn::Evaluator& evaluator,
                    const SearchParams& params,
                    const std::atomic<bool>* stop = nullptr);

}  // namespace zh::search
