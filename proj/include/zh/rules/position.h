#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zh/rules/bitboard.h"
#include "zh/rules/types.h"

namespace zh {

// Castling-right bits.
enum CastleRight : uint8_t {
    kCastleP1King = 1,
    kCastleP1Queen = 2,
    kCastleP2King = 4,
    kCastleP2Queen = 8,
};

// The trivially copyable part of a position: everything except the
// repetition history.
struct PositionCore {
    std::array<std::array<Bitboard, kPieceKinds>, 2> pieces{};  // [color][kind]
    std::array<Bitboard, 2> occ{};
    Bitboard promoted = 0;  // squares holding pieces created by promotion
    std::array<Pocket, 2> pockets{};
    Color stm = Color::P1;
    uint8_t castling = 0;
    int8_t ep_square = -1;  // -1 = none
    uint16_t halfmove = 0;
    uint16_t fullmove = 1;

    Bitboard all() const { return occ[0] | occ[1]; }
    friend bool operator==(const PositionCore&, const PositionCore&) = default;
};

// Canonical byte encoding of the repetition-relevant state: placement,
// promoted set, pockets, side to move, castling rights, en-passant target.
// Equal keys iff all of those are equal. Clocks are excluded.
using StateKey = std::array<uint8_t, 53>;

struct StateKeyHash {
    size_t operator()(const StateKey& k) const;
};

StateKey state_key(const PositionCore& core);

class Position {
public:
    Position() = default;
    Position(PositionCore core, std::vector<StateKey> history)
        : core_(core), history_(std::move(history)) {}

    Color side_to_move() const { return core_.stm; }
    std::optional<std::pair<Color, PieceKind>> piece_at(Square s) const;
    bool is_promoted(Square s) const { return core_.promoted & bb(s); }
    const Pocket& pocket(Color c) const { return core_.pockets[static_cast<int>(c)]; }
    uint8_t castling_rights() const { return core_.castling; }
    bool has_castle_right(CastleRight r) const { return core_.castling & r; }
    std::optional<Square> en_passant_target() const {
        if (core_.ep_square < 0) return std::nullopt;
        return Square(core_.ep_square);
    }
    int halfmove_clock() const { return core_.halfmove; }
    int fullmove_number() const { return core_.fullmove; }
    int plies_played() const {
        return (core_.fullmove - 1) * 2 + (core_.stm == Color::P2 ? 1 : 0);
    }

    Bitboard pieces(Color c, PieceKind k) const {
        return core_.pieces[static_cast<int>(c)][static_cast<int>(k)];
    }
    Bitboard occupied(Color c) const { return core_.occ[static_cast<int>(c)]; }
    Bitboard occupied() const { return core_.all(); }
    Bitboard promoted_squares() const { return core_.promoted; }
    Square king_square(Color c) const { return lsb(pieces(c, PieceKind::King)); }

    bool in_check() const;  // side to move

    const PositionCore& core() const { return core_; }
    const std::vector<StateKey>& repetition_history() const { return history_; }

    // Core equality; the repetition history is deliberately excluded
    // (FEN round-trips do not carry it).
    friend bool operator==(const Position& a, const Position& b) {
        return a.core_ == b.core_;
    }

private:
    PositionCore core_;
    std::vector<StateKey> history_;
};

Position initial_position();

// Exactly the legal Crazyhouse moves; empty iff the position is terminal
// (checkmate, stalemate, or threefold repetition).
std::vector<Move> legal_moves(const Position& pos);

bool is_legal(const Position& pos, const Move& m);

// Throws IllegalMove unless m is legal. The returned position's history is
// extended with the pre-move state key.
Position apply_move(const Position& pos, const Move& m);

std::optional<GameResult> game_result(const Position& pos);

StateKey state_key(const Position& pos);

// Prior occurrences of the current state key in the history, saturated at 2.
int repetition_count(const Position& pos);

uint64_t perft(const Position& pos, int depth);

// Does m (assumed legal) give check?
bool gives_check(const Position& pos, const Move& m);

namespace detail {
// Square attacked by any piece of `by`, given full occupancy `occ`.
bool attacked(const PositionCore& core, Square s, Color by, Bitboard occ);
// Pseudo-legality filtering is done by applying to a core copy; these are
// shared with perft and the legality probe.
void apply_core(PositionCore& core, const Move& m);
std::vector<Move> gen_legal(const PositionCore& core);
}  // namespace detail

}  // namespace zh
