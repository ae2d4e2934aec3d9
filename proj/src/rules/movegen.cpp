#include "zh/rules/position.h"

namespace zh::detail {

namespace {

// Does applying m leave the mover's king attacked? Works on a core copy.
bool leaves_king_in_check(const PositionCore& core, const Move& m) {
    PositionCore after = core;
    apply_core(after, m);
    const Color us = core.stm;
    Square king = lsb(after.pieces[static_cast<int>(us)]
                                  [static_cast<int>(PieceKind::King)]);
    return attacked(after, king, opponent(us), after.all());
}

void add_if_legal(const PositionCore& core, std::vector<Move>& out, const Move& m) {
    if (!leaves_king_in_check(core, m)) out.push_back(m);
}

void add_pawn_move(const PositionCore& core, std::vector<Move>& out, Square from,
                   Square to, int last_rank) {
    if (to.rank() == last_rank) {
        for (PieceKind p : {PieceKind::Queen, PieceKind::Rook, PieceKind::Bishop,
                            PieceKind::Knight})
            add_if_legal(core, out, Move::board(from, to, p));
    } else {
        add_if_legal(core, out, Move::board(from, to));
    }
}

}  // namespace

std::vector<Move> gen_legal(const PositionCore& core) {
    std::vector<Move> out;
    out.reserve(64);

    const Color us = core.stm;
    const int ui = static_cast<int>(us);
    const Bitboard own = core.occ[ui];
    const Bitboard their = core.occ[1 - ui];
    const Bitboard all = own | their;
    const int fwd = us == Color::P1 ? 8 : -8;
    const int last_rank = us == Color::P1 ? 7 : 0;
    const int home_rank = us == Color::P1 ? 1 : 6;

    // pawns
    Bitboard pawns = core.pieces[ui][static_cast<int>(PieceKind::Pawn)];
    for (Bitboard b = pawns; b;) {
        Square from = pop_lsb(b);
        Square push(from.index() + fwd);
        if (!(all & bb(push))) {
            add_pawn_move(core, out, from, push, last_rank);
            if (from.rank() == home_rank) {
                Square push2(push.index() + fwd);
                if (!(all & bb(push2)))
                    add_if_legal(core, out, Move::board(from, push2));
            }
        }
        Bitboard caps = pawn_attacks(us, from) & their;
        while (caps) add_pawn_move(core, out, from, pop_lsb(caps), last_rank);
        if (core.ep_square >= 0 &&
            (pawn_attacks(us, from) & bb(Square(core.ep_square))))
            add_if_legal(core, out, Move::board(from, Square(core.ep_square)));
    }

    // knights
    for (Bitboard b = core.pieces[ui][static_cast<int>(PieceKind::Knight)]; b;) {
        Square from = pop_lsb(b);
        Bitboard targets = knight_attacks(from) & ~own;
        while (targets) add_if_legal(core, out, Move::board(from, pop_lsb(targets)));
    }

    // sliders
    for (Bitboard b = core.pieces[ui][static_cast<int>(PieceKind::Bishop)]; b;) {
        Square from = pop_lsb(b);
        Bitboard targets = bishop_attacks(from, all) & ~own;
        while (targets) add_if_legal(core, out, Move::board(from, pop_lsb(targets)));
    }
    for (Bitboard b = core.pieces[ui][static_cast<int>(PieceKind::Rook)]; b;) {
        Square from = pop_lsb(b);
        Bitboard targets = rook_attacks(from, all) & ~own;
        while (targets) add_if_legal(core, out, Move::board(from, pop_lsb(targets)));
    }
    for (Bitboard b = core.pieces[ui][static_cast<int>(PieceKind::Queen)]; b;) {
        Square from = pop_lsb(b);
        Bitboard targets = queen_attacks(from, all) & ~own;
        while (targets) add_if_legal(core, out, Move::board(from, pop_lsb(targets)));
    }

    // king
    {
        Square from = lsb(core.pieces[ui][static_cast<int>(PieceKind::King)]);
        Bitboard targets = king_attacks(from) & ~own;
        while (targets) add_if_legal(core, out, Move::board(from, pop_lsb(targets)));

        const int rank = us == Color::P1 ? 0 : 7;
        const Color them = opponent(us);
        const bool in_check = attacked(core, from, them, all);
        if (!in_check && from == Square::of(4, rank)) {
            const Bitboard rooks = core.pieces[ui][static_cast<int>(PieceKind::Rook)];
            const uint8_t ks = us == Color::P1 ? kCastleP1King : kCastleP2King;
            const uint8_t qs = us == Color::P1 ? kCastleP1Queen : kCastleP2Queen;
            if ((core.castling & ks) && (rooks & bb(Square::of(7, rank))) &&
                !(all & (bb(Square::of(5, rank)) | bb(Square::of(6, rank)))) &&
                !attacked(core, Square::of(5, rank), them, all) &&
                !attacked(core, Square::of(6, rank), them, all))
                out.push_back(Move::board(from, Square::of(6, rank)));
            if ((core.castling & qs) && (rooks & bb(Square::of(0, rank))) &&
                !(all & (bb(Square::of(1, rank)) | bb(Square::of(2, rank)) |
                         bb(Square::of(3, rank)))) &&
                !attacked(core, Square::of(2, rank), them, all) &&
                !attacked(core, Square::of(3, rank), them, all))
                out.push_back(Move::board(from, Square::of(2, rank)));
        }
    }

    // drops
    const Pocket& pocket = core.pockets[ui];
    if (!pocket.empty()) {
        const Bitboard empty = ~all;
        for (int k = 0; k < kDroppableKinds; ++k) {
            if (pocket.counts[k] == 0) continue;
            Bitboard targets = empty;
            if (static_cast<PieceKind>(k) == PieceKind::Pawn)
                targets &= ~(kRank1 | kRank8);
            while (targets)
                add_if_legal(core, out,
                             Move::drop(static_cast<PieceKind>(k), pop_lsb(targets)));
        }
    }

    return out;
}

}  // namespace zh::detail
