#pragma once

#include <array>
#include <cstdint>

#include "zh/rules/types.h"

namespace zh::engine {

struct ClockState {
    std::array<int64_t, 2> remaining_ms{};  // per side
    std::array<int64_t, 2> increment_ms{};
    int ply_number = 1;  // 1-based index of the ply about to be played

    int64_t remaining(Color c) const { return remaining_ms[static_cast<int>(c)]; }
};

constexpr int64_t kDefaultSafetyMarginMs = 50;

// 10% of remaining time for the first fifteen plies, 2/15 thereafter, minus a
// safety margin, floored at zero.
int64_t time_allocation(const ClockState& clock, Color mover,
                        int64_t safety_margin_ms = kDefaultSafetyMarginMs);

// Playout depth by remaining clock time; boundary values belong to the
// higher-time bucket. 0 disables the tree search.
int depth_for_time(double remaining_seconds);

}  // namespace zh::engine
