#include "zh/encoding/targets.h"

namespace zh {

float outcome_scale(GameResult result, Color mover) {
    if (result == GameResult::Draw) return 0.5f;
    return result == win_for(mover) ? 1.0f : 0.1f;
}

PolicyTarget policy_target(const Move& m, const Position& pos, GameResult result) {
    return {action_table().move_to_index(pos, m),
            outcome_scale(result, pos.side_to_move())};
}

ValueTarget value_target(GameResult result, Color mover) {
    if (result == GameResult::Draw) return {0.5f};
    return {result == win_for(mover) ? 1.0f : 0.0f};
}

}  // namespace zh
