#pragma once

#include "zh/encoding/action_table.h"
#include "zh/rules/position.h"

namespace zh {

// Scaled one-hot policy target: the move's action index, scaled by the game
// outcome for the mover (1.0 win, 0.5 draw, 0.1 loss).
struct PolicyTarget {
    ActionIndex index;
    float scale = 1.0f;
    friend bool operator==(const PolicyTarget&, const PolicyTarget&) = default;
};

// Game outcome for the player to move: 1 win, 0 loss, 0.5 draw.
struct ValueTarget {
    float value = 0.5f;
    friend bool operator==(const ValueTarget&, const ValueTarget&) = default;
};

float outcome_scale(GameResult result, Color mover);

PolicyTarget policy_target(const Move& m, const Position& pos, GameResult result);
ValueTarget value_target(GameResult result, Color mover);

}  // namespace zh
