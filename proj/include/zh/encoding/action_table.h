#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zh/rules/position.h"

namespace zh {

// Compressed 2308-entry action space:
//   [0, 304)      drops:     pawn (48 squares), knight/bishop/rook/queen (64 each)
//   [304, 1820)   linear:    8 directions x 7 distances, off-board origins
//                            removed except on distance-1 diagonal planes
//   [1820, 2236)  knight:    8 directions, rank-invalid landing squares removed
//   [2236, 2308)  underpromotion: {N,B,R} x {left-capture, push, right-capture} x file
constexpr int kNumActions = 2308;
constexpr int kDropSectionStart = 0;
constexpr int kLinearSectionStart = 304;
constexpr int kKnightSectionStart = 1820;
constexpr int kUnderpromoSectionStart = 2236;

struct ActionIndex {
    int v = -1;
    constexpr ActionIndex() = default;
    constexpr explicit ActionIndex(int index) : v(index) {}
    constexpr int value() const { return v; }
    friend constexpr auto operator<=>(ActionIndex, ActionIndex) = default;
};

// Directions as (rank delta, file delta), in the fixed section order.
constexpr std::array<std::array<int, 2>, 8> kLinearDirs = {{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}
}};  // N NE E SE S SW W NW
constexpr std::array<std::array<int, 2>, 8> kKnightDirs = {{
    {2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -2}, {2, -1}
}};

enum class PromoLane : uint8_t { LeftCapture = 0, Push = 1, RightCapture = 2 };

struct MoveShape {
    enum class Tag : uint8_t { Drop, Linear, Knight, Underpromo };
    Tag tag = Tag::Drop;
    // Drop
    PieceKind drop_kind = PieceKind::Pawn;
    // Linear / Knight
    uint8_t direction = 0;  // into kLinearDirs or kKnightDirs
    uint8_t distance = 0;   // 1..7, linear only
    Square landing{};       // also the drop target square
    // Underpromo
    PieceKind promo_piece = PieceKind::Knight;
    PromoLane lane = PromoLane::Push;
    uint8_t file = 0;       // absolute landing file

    friend bool operator==(const MoveShape&, const MoveShape&) = default;
};

class ActionTable {
public:
    ActionTable();

    int size() const { return kNumActions; }
    const MoveShape& shape(ActionIndex i) const { return shapes_[i.value()]; }

    int drop_section_size() const { return kLinearSectionStart; }
    int linear_section_size() const { return kKnightSectionStart - kLinearSectionStart; }
    int knight_section_size() const { return kUnderpromoSectionStart - kKnightSectionStart; }
    int underpromo_section_size() const { return kNumActions - kUnderpromoSectionStart; }

    // Entries on one linear plane (direction, distance 1..7).
    int linear_plane_size(int direction, int distance) const {
        return linear_plane_count_[direction][distance - 1];
    }

    ActionIndex move_to_index(const Position& pos, const Move& m) const;
    Move index_to_move(const Position& pos, ActionIndex i) const;  // IllegalIndex
    std::array<bool, kNumActions> legal_move_mask(const Position& pos) const;

    // "index<TAB>shape" text, one line per entry.
    std::string dump() const;

private:
    std::vector<MoveShape> shapes_;
    std::array<std::array<int, 64>, kDroppableKinds> drop_index_;
    std::array<std::array<std::array<int16_t, 64>, 7>, 8> linear_slot_;  // -1 = removed
    std::array<std::array<int, 7>, 8> linear_base_;
    std::array<std::array<int, 7>, 8> linear_plane_count_;
    std::array<std::array<int16_t, 64>, 8> knight_slot_;
    std::array<int, 8> knight_base_;
};

ActionTable build_action_table();

// Shared immutable instance.
const ActionTable& action_table();

std::string shape_text(const MoveShape& shape);

}  // namespace zh
