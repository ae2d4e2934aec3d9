#include "zh/encoding/input_tensor.h"

#include "zh/errors.h"

namespace zh {

InputTensor encode_position(const Position& pos) {
    InputTensor t;
    auto set = [&](int plane, int slot) { t.values[plane * 64 + slot] = 1.0f; };

    for (int c = 0; c < 2; ++c)
        for (int k = 0; k < kPieceKinds; ++k) {
            Bitboard b = pos.pieces(static_cast<Color>(c), static_cast<PieceKind>(k));
            while (b) set(c * 6 + k, pop_lsb(b).index());
        }

    for (Bitboard b = pos.promoted_squares(); b;) set(12, pop_lsb(b).index());

    for (int c = 0; c < 2; ++c)
        for (int k = 0; k < kDroppableKinds; ++k) {
            const int n = pos.pocket(static_cast<Color>(c)).counts[k];
            const int base = plane13::group_base(static_cast<PieceKind>(k),
                                                 static_cast<Color>(c));
            for (int j = 0; j < n; ++j) set(13, base + j);
        }
    set(13, pos.side_to_move() == Color::P1 ? plane13::kTurnP1 : plane13::kTurnP2);

    if (pos.has_castle_right(kCastleP1King)) set(14, plane14::kCastleP1K);
    if (pos.has_castle_right(kCastleP2King)) set(14, plane14::kCastleP2K);
    if (pos.has_castle_right(kCastleP1Queen)) set(14, plane14::kCastleP1Q);
    if (pos.has_castle_right(kCastleP2Queen)) set(14, plane14::kCastleP2Q);
    const int rc = repetition_count(pos);
    if (rc >= 1) set(14, plane14::kSeenOnce);
    if (rc >= 2) set(14, plane14::kSeenTwice);

    return t;
}

Position reconstruct_position(const InputTensor& t) {
    PositionCore core;
    auto get = [&](int plane, int slot) { return t.values[plane * 64 + slot] != 0.0f; };

    for (int c = 0; c < 2; ++c)
        for (int k = 0; k < kPieceKinds; ++k)
            for (int sq = 0; sq < 64; ++sq)
                if (get(c * 6 + k, sq)) {
                    core.pieces[c][k] |= bb(Square(sq));
                    core.occ[c] |= bb(Square(sq));
                }

    for (int sq = 0; sq < 64; ++sq)
        if (get(12, sq)) core.promoted |= bb(Square(sq));

    for (int c = 0; c < 2; ++c)
        for (int k = 0; k < kDroppableKinds; ++k) {
            const int base = plane13::group_base(static_cast<PieceKind>(k),
                                                 static_cast<Color>(c));
            const int width = k == 0 ? plane13::kPawnBits
                              : k == 4 ? plane13::kQueenBits
                                       : plane13::kMinorBits;
            int n = 0;
            while (n < width && get(13, base + n)) ++n;
            core.pockets[c].counts[k] = static_cast<uint8_t>(n);
        }

    const bool p1_turn = get(13, plane13::kTurnP1);
    const bool p2_turn = get(13, plane13::kTurnP2);
    if (p1_turn == p2_turn) throw FormatError("tensor has invalid turn bits");
    core.stm = p1_turn ? Color::P1 : Color::P2;

    if (get(14, plane14::kCastleP1K)) core.castling |= kCastleP1King;
    if (get(14, plane14::kCastleP2K)) core.castling |= kCastleP2King;
    if (get(14, plane14::kCastleP1Q)) core.castling |= kCastleP1Queen;
    if (get(14, plane14::kCastleP2Q)) core.castling |= kCastleP2Queen;

    return Position(core, {});
}

}  // namespace zh
