#include "zh/engine/engine.h"

#include "zh/errors.h"

namespace zh::engine {

Move top_policy_move(const Position& pos, nn::Evaluator& evaluator) {
    const auto moves = legal_moves(pos);
    if (moves.empty()) throw NoLegalMoves("no legal moves");
    const nn::EvalResult eval = evaluator.evaluate(pos);
    const auto& table = action_table();

    const Move* best = nullptr;
    float best_p = -1.0f;
    int best_index = 0;
    for (const Move& m : moves) {
        const int index = table.move_to_index(pos, m).value();
        const float p = eval.policy[index];
        if (p > best_p || (p == best_p && index < best_index)) {
            best = &m;
            best_p = p;
            best_index = index;
        }
    }
    return *best;
}

Move choose_move(const Position& pos, const ClockState& clock,
                 nn::Evaluator& evaluator, const search::SearchParams& params,
                 int64_t safety_margin_ms, const std::atomic<bool>* stop) {
    const Color mover = pos.side_to_move();
    const double remaining_seconds = clock.remaining(mover) / 1000.0;
    const int depth = depth_for_time(remaining_seconds);
    if (depth == 0) return top_policy_move(pos, evaluator);

    search::SearchParams p = params;
    p.playout_depth = depth;
    p.time_budget_ms = time_allocation(clock, mover, safety_margin_ms);
    return search::search(pos, evaluator, p, stop).best_move;
}

Move choose_move(const Position& pos, nn::Evaluator& evaluator,
                 const search::SearchParams& params, const std::atomic<bool>* stop) {
    return search::search(pos, evaluator, params, stop).best_move;
}

}  // namespace zh::engine
