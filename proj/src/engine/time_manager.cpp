#include "zh/engine/time_manager.h"

#include <algorithm>
#include <cmath>

namespace zh::engine {

int64_t time_allocation(const ClockState& clock, Color mover,
                        int64_t safety_margin_ms) {
    const double remaining = static_cast<double>(clock.remaining(mover));
    const double fraction = clock.ply_number <= 15 ? 0.10 : 2.0 / 15.0;
    const int64_t raw = std::llround(fraction * remaining);
    return std::max<int64_t>(0, raw - safety_margin_ms);
}

int depth_for_time(double remaining_seconds) {
    if (remaining_seconds >= 750) return 20;
    if (remaining_seconds >= 300) return 15;
    if (remaining_seconds >= 120) return 12;
    if (remaining_seconds >= 60) return 10;
    if (remaining_seconds >= 10) return 4;
    return 0;
}

}  // namespace zh::engine
