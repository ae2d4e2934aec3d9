#pragma once

#include <array>

#include "zh/rules/position.h"

namespace zh {

// 960-feature binary board encoding: 15 planes of 8x8, flattened as
// plane*64 + rank*8 + file.
//
//   planes 0..5   P1 pawn/knight/bishop/rook/queen/king occupancy
//   planes 6..11  same for P2
//   plane 12      promoted-piece occupancy
//   plane 13      pocket thermometer bits and turn bits (layout below)
//   plane 14      castling bits, repetition flags, 58 zeros
struct InputTensor {
    static constexpr int kPlanes = 15;
    static constexpr int kSize = kPlanes * 64;

    std::array<float, kSize> values{};

    float at(int plane, int rank, int file) const {
        return values[plane * 64 + rank * 8 + file];
    }
    friend bool operator==(const InputTensor&, const InputTensor&) = default;
};

// Plane-13 layout. The pocket region occupies the first 62 slots; only the
// first 60 can ever be set (16+16+4+4+4+4+4+4+2+2), the remaining two stay
// zero. The final two slots are the turn bits.
namespace plane13 {
constexpr int kPawnBits = 16, kMinorBits = 4, kQueenBits = 2;
// bit-group base offsets, per (kind, color)
constexpr int group_base(PieceKind k, Color c) {
    constexpr int kBase[5] = {0, 32, 40, 48, 56};  // pawn,knight,bishop,rook,queen
    constexpr int kWidth[5] = {16, 4, 4, 4, 2};
    return kBase[static_cast<int>(k)] + (c == Color::P2 ? kWidth[static_cast<int>(k)] : 0);
}
constexpr int kTurnP1 = 62, kTurnP2 = 63;
}  // namespace plane13

namespace plane14 {
constexpr int kCastleP1K = 0, kCastleP2K = 1, kCastleP1Q = 2, kCastleP2Q = 3;
constexpr int kSeenOnce = 4, kSeenTwice = 5;  // cumulative: rc>=1, rc>=2
}  // namespace plane14

InputTensor encode_position(const Position& pos);

// Inverse of encode_position up to what the tensor carries: the en-passant
// target, repetition history, and move counters are not recoverable.
Position reconstruct_position(const InputTensor& t);

}  // namespace zh
