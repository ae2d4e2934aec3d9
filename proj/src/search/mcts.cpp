#include "zh/search/mcts.h"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <sstream>

#include "zh/errors.h"
#include "zh/rules/notation.h"

namespace zh::search {

double noise(const SearchParams& params, int move_number, Rng& rng) {
    assert(move_number >= 1);
    if (params.alpha == 0.0) return 0.0;
    const double bound = params.alpha / (move_number * params.beta);
    return std::uniform_real_distribution<double>(-bound, bound)(rng);
}

double node_score(const SearchNode& child, int parent_visits,
                  double max_sibling_prior, const SearchParams& params,
                  int move_number, Rng& rng) {
    const double c = 1.0 / max_sibling_prior;
    const double wbar = child.win_sum / std::max(1, child.visits);
    return (c * (child.prior + noise(params, move_number, rng)) + wbar) / 2.0 +
           params.gamma * std::sqrt(static_cast<double>(parent_visits)) /
               (1.0 + child.visits);
}

Searcher::Searcher(nn::Evaluator& evaluator, SearchParams params,
                   const std::atomic<bool>* stop)
    : evaluator_(evaluator), params_(params), stop_(stop), rng_(params.seed) {}

void Searcher::materialize(SearchNode& node, const SearchNode& parent) {
    if (!node.pos) {
        PositionCore core = parent.pos->core();
        detail::apply_core(core, node.move_from_parent);
        std::vector<StateKey> history = parent.pos->repetition_history();
        history.push_back(state_key(parent.pos->core()));
        node.pos.emplace(core, std::move(history));
    }
    if (!node.result) node.result = game_result(*node.pos);
}

std::vector<SearchNode*> Searcher::select_path(SearchNode& root, int move_number) {
    std::vector<SearchNode*> path{&root};
    SearchNode* node = &root;
    int depth = 0;
    while (node->expanded && !node->terminal() && depth < params_.playout_depth) {
        double max_prior = 0.0;
        for (const auto& child : node->children)
            max_prior = std::max(max_prior, child->prior);
        SearchNode* best = nullptr;
        double best_score = -std::numeric_limits<double>::infinity();
        for (const auto& child : node->children) {
            const double score = node_score(*child, node->visits, max_prior,
                                            params_, move_number, rng_);
            if (score > best_score) {
                best_score = score;
                best = child.get();
            }
        }
        materialize(*best, *node);
        path.push_back(best);
        node = best;
        ++depth;
    }
    return path;
}

double Searcher::expand_and_evaluate(SearchNode& node) {
    assert(node.pos && node.result);
    if (node.terminal()) {
        // A mate leaf scores mate_score: it is credited to the mating move.
        return **node.result == GameResult::Draw ? 0.5 : params_.mate_score;
    }
    const nn::EvalResult eval = evaluator_.evaluate(*node.pos);
    if (node.expanded)  // depth-capped playout: value only
        return std::clamp(eval.value, 0.0, 1.0);

    const auto moves = legal_moves(*node.pos);
    const auto& table = action_table();
    double prior_sum = 0.0;
    node.children.reserve(moves.size());
    for (const Move& m : moves) {
        auto child = std::make_unique<SearchNode>();
        child->move_from_parent = m;
        child->prior = eval.policy[table.move_to_index(*node.pos, m).value()];
        prior_sum += child->prior;
        node.children.push_back(std::move(child));
    }
    if (prior_sum > 0.0) {
        for (auto& child : node.children) child->prior /= prior_sum;
    } else {
        const double uniform = 1.0 / static_cast<double>(node.children.size());
        for (auto& child : node.children) child->prior = uniform;
    }
    node.expanded = true;
    return std::clamp(eval.value, 0.0, 1.0);
}

void Searcher::backpropagate(const std::vector<SearchNode*>& path,
                             double leaf_value) {
    double v = leaf_value;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        (*it)->win_sum += v;
        (*it)->visits += 1;
        // mate-aware perspective flip
        v = v == params_.mate_score ? 0.0 : 1.0 - v;
    }
}

SearchResult Searcher::run(const Position& root_pos) {
    if (game_result(root_pos))
        throw NoLegalMoves("search requires a non-terminal position");

    SearchNode root;
    root.pos = root_pos;
    root.result = game_result(root_pos);
    expand_and_evaluate(root);  // free root expansion; playouts carry the budget

    const int move_number = root_pos.fullmove_number();
    const auto deadline =
        params_.time_budget_ms
            ? std::optional(std::chrono::steady_clock::now() +
                            std::chrono::milliseconds(*params_.time_budget_ms))
            : std::nullopt;

    uint64_t playouts = 0;
    while (true) {
        if (params_.playout_budget && playouts >= *params_.playout_budget) break;
        if (deadline && std::chrono::steady_clock::now() >= *deadline) break;
        if (!params_.playout_budget && !deadline && !stop_) break;
        if (stop_ && stop_->load(std::memory_order_relaxed)) break;

        auto path = select_path(root, move_number);
        const double leaf_value = expand_and_evaluate(*path.back());
        backpropagate(path, leaf_value);
        ++playouts;

        if (trace_) {
            std::ostringstream line;
            for (size_t i = 1; i < path.size(); ++i)
                line << (i > 1 ? " " : "") << to_uci(path[i]->move_from_parent);
            line << " value " << leaf_value;
            trace_(line.str());
        }
    }

    SearchResult result;
    result.playouts = playouts;
    result.root_value = root.visits > 0 ? root.win_sum / root.visits : 0.5;

    const auto& table = action_table();
    const SearchNode* best = nullptr;
    int best_index = 0;
    for (const auto& child : root.children) {
        const int index = table.move_to_index(root_pos, child->move_from_parent).value();
        result.visit_distribution.push_back(
            {child->move_from_parent, child->visits, child->mean_score()});
        const bool better =
            !best || child->visits > best->visits ||
            (child->visits == best->visits &&
             (child->mean_score() > best->mean_score() ||
              (child->mean_score() == best->mean_score() && index < best_index)));
        if (better) {
            best = child.get();
            best_index = index;
        }
    }
    std::sort(result.visit_distribution.begin(), result.visit_distribution.end(),
              [&](const MoveVisits& a, const MoveVisits& b) {
                  return table.move_to_index(root_pos, a.move).value() <
                         table.move_to_index(root_pos, b.move).value();
              });
    result.best_move = best->move_from_parent;
    return result;
}

SearchResult search(const Position& pos, nn::Evaluator& evaluator,
                    const SearchParams& params, const std::atomic<bool>* stop) {
    Searcher searcher(evaluator, params, stop);
    return searcher.run(pos);
}

}  // namespace zh::search
