#include "zh/rules/position.h"

#include <cassert>
#include <cstring>

#include "zh/errors.h"
#include "zh/rules/notation.h"

namespace zh {

char piece_char(PieceKind k) {
    constexpr const char* kChars = "PNBRQK";
    return kChars[static_cast<int>(k)];
}

std::optional<PieceKind> piece_from_char(char c) {
    switch (c) {
        case 'P': case 'p': return PieceKind::Pawn;
        case 'N': case 'n': return PieceKind::Knight;
        case 'B': case 'b': return PieceKind::Bishop;
        case 'R': case 'r': return PieceKind::Rook;
        case 'Q': case 'q': return PieceKind::Queen;
        case 'K': case 'k': return PieceKind::King;
        default: return std::nullopt;
    }
}

std::string square_name(Square s) {
    return {static_cast<char>('a' + s.file()), static_cast<char>('1' + s.rank())};
}

std::optional<Square> square_from_name(std::string_view name) {
    if (name.size() != 2) return std::nullopt;
    int f = name[0] - 'a', r = name[1] - '1';
    if (!on_board(f, r)) return std::nullopt;
    return Square::of(f, r);
}

std::optional<std::pair<Color, PieceKind>> Position::piece_at(Square s) const {
    Bitboard mask = bb(s);
    for (int c = 0; c < 2; ++c) {
        if (!(core_.occ[c] & mask)) continue;
        for (int k = 0; k < kPieceKinds; ++k)
            if (core_.pieces[c][k] & mask)
                return std::pair{static_cast<Color>(c), static_cast<PieceKind>(k)};
    }
    return std::nullopt;
}

bool Position::in_check() const {
    return detail::attacked(core_, king_square(core_.stm), opponent(core_.stm),
                            core_.all());
}

StateKey state_key(const PositionCore& core) {
    StateKey key{};
    // 32 bytes: one nibble per square, 0 empty, 1..6 P1 Pawn..King, 7..12 P2
    for (int sq = 0; sq < 64; ++sq) {
        Bitboard mask = Bitboard(1) << sq;
        uint8_t code = 0;
        for (int c = 0; c < 2 && code == 0; ++c)
            for (int k = 0; k < kPieceKinds; ++k)
                if (core.pieces[c][k] & mask) {
                    code = static_cast<uint8_t>(k + 1 + 6 * c);
                    break;
                }
        key[sq / 2] |= (sq & 1) ? uint8_t(code << 4) : code;
    }
    for (int i = 0; i < 8; ++i) key[32 + i] = uint8_t(core.promoted >> (8 * i));
    for (int c = 0; c < 2; ++c)
        for (int k = 0; k < kDroppableKinds; ++k)
            key[40 + c * 5 + k] = core.pockets[c].counts[k];
    key[50] = static_cast<uint8_t>(core.stm);
    key[51] = core.castling;
    key[52] = static_cast<uint8_t>(core.ep_square + 1);
    return key;
}

StateKey state_key(const Position& pos) { return state_key(pos.core()); }

size_t StateKeyHash::operator()(const StateKey& k) const {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (uint8_t b : k) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

int repetition_count(const Position& pos) {
    StateKey key = state_key(pos);
    int count = 0;
    for (const StateKey& prior : pos.repetition_history())
        if (prior == key && ++count == 2) break;
    return count;
}

Position initial_position() {
    return parse_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR[] w KQkq - 0 1");
}

namespace detail {

bool attacked(const PositionCore& core, Square s, Color by, Bitboard occ) {
    const auto& p = core.pieces[static_cast<int>(by)];
    // pawn_attacks from the target square with the attacker color swapped
    // gives the squares a `by`-pawn must stand on.
    if (pawn_attacks(opponent(by), s) & p[static_cast<int>(PieceKind::Pawn)])
        return true;
    if (knight_attacks(s) & p[static_cast<int>(PieceKind::Knight)]) return true;
    if (king_attacks(s) & p[static_cast<int>(PieceKind::King)]) return true;
    Bitboard diag = p[static_cast<int>(PieceKind::Bishop)] |
                    p[static_cast<int>(PieceKind::Queen)];
    if (diag && (bishop_attacks(s, occ) & diag)) return true;
    Bitboard straight = p[static_cast<int>(PieceKind::Rook)] |
                        p[static_cast<int>(PieceKind::Queen)];
    if (straight && (rook_attacks(s, occ) & straight)) return true;
    return false;
}

namespace {

void set_piece(PositionCore& core, Square s, Color c, PieceKind k) {
    core.pieces[static_cast<int>(c)][static_cast<int>(k)] |= bb(s);
    core.occ[static_cast<int>(c)] |= bb(s);
}

void clear_piece(PositionCore& core, Square s, Color c, PieceKind k) {
    core.pieces[static_cast<int>(c)][static_cast<int>(k)] &= ~bb(s);
    core.occ[static_cast<int>(c)] &= ~bb(s);
}

PieceKind kind_at(const PositionCore& core, Color c, Square s) {
    Bitboard mask = bb(s);
    for (int k = 0; k < kPieceKinds; ++k)
        if (core.pieces[static_cast<int>(c)][k] & mask)
            return static_cast<PieceKind>(k);
    assert(false && "no piece on square");
    return PieceKind::Pawn;
}

void clear_rook_rights(PositionCore& core, Square s) {
    switch (s.index()) {
        case 7: core.castling &= ~kCastleP1King; break;    // h1
        case 0: core.castling &= ~kCastleP1Queen; break;   // a1
        case 63: core.castling &= ~kCastleP2King; break;   // h8
        case 56: core.castling &= ~kCastleP2Queen; break;  // a8
    }
}

}  // namespace

void apply_core(PositionCore& core, const Move& m) {
    const Color us = core.stm;
    const int ui = static_cast<int>(us);
    bool irreversible = false;

    if (m.is_drop()) {
        set_piece(core, m.to(), us, m.drop_kind());
        core.pockets[ui].remove(m.drop_kind());
        core.ep_square = -1;
        irreversible = true;
    } else {
        const Square from = m.from(), to = m.to();
        const PieceKind kind = kind_at(core, us, from);
        const Color them = opponent(us);

        if (core.occ[static_cast<int>(them)] & bb(to)) {
            PieceKind captured = kind_at(core, them, to);
            clear_piece(core, to, them, captured);
            core.pockets[ui].add((core.promoted & bb(to)) ? PieceKind::Pawn
                                                          : captured);
            core.promoted &= ~bb(to);
            irreversible = true;
        } else if (kind == PieceKind::Pawn && to.index() == core.ep_square) {
            Square cap = Square::of(to.file(), from.rank());
            clear_piece(core, cap, them, PieceKind::Pawn);
            core.promoted &= ~bb(cap);
            core.pockets[ui].add(PieceKind::Pawn);
            irreversible = true;
        }

        clear_piece(core, from, us, kind);
        if (auto promo = m.promotion()) {
            set_piece(core, to, us, *promo);
            core.promoted |= bb(to);
            core.promoted &= ~bb(from);
            irreversible = true;
        } else {
            set_piece(core, to, us, kind);
            // a promoted piece carries its mark with it
            if (core.promoted & bb(from)) {
                core.promoted &= ~bb(from);
                core.promoted |= bb(to);
            }
        }

        if (kind == PieceKind::King) {
            core.castling &= us == Color::P1 ? ~(kCastleP1King | kCastleP1Queen)
                                             : ~(kCastleP2King | kCastleP2Queen);
            if (to.file() - from.file() == 2) {  // kingside
                Square rfrom = Square::of(7, from.rank()), rto = Square::of(5, from.rank());
                clear_piece(core, rfrom, us, PieceKind::Rook);
                set_piece(core, rto, us, PieceKind::Rook);
            } else if (from.file() - to.file() == 2) {  // queenside
                Square rfrom = Square::of(0, from.rank()), rto = Square::of(3, from.rank());
                clear_piece(core, rfrom, us, PieceKind::Rook);
                set_piece(core, rto, us, PieceKind::Rook);
            }
        }
        clear_rook_rights(core, from);
        clear_rook_rights(core, to);

        core.ep_square = -1;
        if (kind == PieceKind::Pawn) {
            irreversible = true;
            int dr = to.rank() - from.rank();
            if (dr == 2 || dr == -2)
                core.ep_square =
                    static_cast<int8_t>(Square::of(from.file(), (from.rank() + to.rank()) / 2).index());
        }
    }

    core.halfmove = irreversible ? 0 : core.halfmove + 1;
    if (us == Color::P2) ++core.fullmove;
    core.stm = opponent(us);
}

}  // namespace detail

// Move generation is purely rule-based; the automatic threefold draw is
// adjudicated by game_result, not here (recorded games legally continue
// through repeated positions).
std::vector<Move> legal_moves(const Position& pos) {
    return detail::gen_legal(pos.core());
}

bool is_legal(const Position& pos, const Move& m) {
    auto moves = legal_moves(pos);
    for (const Move& lm : moves)
        if (lm == m) return true;
    return false;
}

Position apply_move(const Position& pos, const Move& m) {
    if (!is_legal(pos, m)) throw IllegalMove("move is not legal in this position");
    PositionCore core = pos.core();
    detail::apply_core(core, m);
    std::vector<StateKey> history = pos.repetition_history();
    history.push_back(state_key(pos.core()));
    return Position(core, std::move(history));
}

std::optional<GameResult> game_result(const Position& pos) {
    if (detail::gen_legal(pos.core()).empty())
        return pos.in_check() ? win_for(opponent(pos.side_to_move())) : GameResult::Draw;
    if (repetition_count(pos) >= 2) return GameResult::Draw;
    return std::nullopt;
}

bool gives_check(const Position& pos, const Move& m) {
    PositionCore core = pos.core();
    detail::apply_core(core, m);
    return detail::attacked(core, lsb(core.pieces[static_cast<int>(core.stm)]
                                                 [static_cast<int>(PieceKind::King)]),
                            opponent(core.stm), core.all());
}

uint64_t perft(const Position& pos, int depth) {
    if (depth == 0) return 1;
    if (game_result(pos)) return 0;
    auto moves = legal_moves(pos);
    if (depth == 1) return moves.size();
    uint64_t total = 0;
    for (const Move& m : moves) {
        PositionCore core = pos.core();
        detail::apply_core(core, m);
        std::vector<StateKey> history = pos.repetition_history();
        history.push_back(state_key(pos.core()));
        total += perft(Position(core, std::move(history)), depth - 1);
    }
    return total;
}

}  // namespace zh
