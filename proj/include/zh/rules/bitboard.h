#pragma once

#include <bit>
#include <cstdint>

#include "zh/rules/types.h"

namespace zh {

using Bitboard = uint64_t;

constexpr Bitboard bb(Square s) { return Bitboard(1) << s.index(); }

constexpr Bitboard kRank1 = 0x00000000000000FFULL;  // rank 0
constexpr Bitboard kRank8 = 0xFF00000000000000ULL;  // rank 7

constexpr Bitboard rank_bb(int r) { return kRank1 << (8 * r); }
constexpr Bitboard file_bb(int f) { return 0x0101010101010101ULL << f; }

inline int popcount(Bitboard b) { return std::popcount(b); }
inline Square lsb(Bitboard b) { return Square(std::countr_zero(b)); }
inline Square pop_lsb(Bitboard& b) {
    Square s = lsb(b);
    b &= b - 1;
    return s;
}

// Precomputed leaper attacks.
Bitboard knight_attacks(Square s);
Bitboard king_attacks(Square s);
Bitboard pawn_attacks(Color c, Square s);  // capture targets of a c-pawn on s

// Sliding attacks with blockers included in the result.
Bitboard bishop_attacks(Square s, Bitboard occ);
Bitboard rook_attacks(Square s, Bitboard occ);
inline Bitboard queen_attacks(Square s, Bitboard occ) {
    return bishop_attacks(s, occ) | rook_attacks(s, occ);
}

}  // namespace zh
