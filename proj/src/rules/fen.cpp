#include <cctype>
#include <sstream>

#include "zh/errors.h"
#include "zh/rules/notation.h"

namespace zh {

namespace {

void validate(const PositionCore& core, size_t offset_for_errors) {
    auto fail = [&](const std::string& msg) { throw ParseError(msg, offset_for_errors); };

    for (int c = 0; c < 2; ++c) {
        if (popcount(core.pieces[c][static_cast<int>(PieceKind::King)]) != 1)
            fail("each side must have exactly one king");
        if (core.pieces[c][static_cast<int>(PieceKind::Pawn)] & (kRank1 | kRank8))
            fail("pawn on first or last rank");
        for (int k = 0; k < kDroppableKinds; ++k)
            if (core.pockets[c].counts[k] > kPocketMax[k])
                fail("pocket count exceeds maximum");
    }
    Bitboard markable = core.all();
    for (int c = 0; c < 2; ++c) {
        markable &= ~core.pieces[c][static_cast<int>(PieceKind::Pawn)];
        markable &= ~core.pieces[c][static_cast<int>(PieceKind::King)];
    }
    if (core.promoted & ~markable)
        fail("promotion mark on an empty square, pawn, or king");

    if (core.ep_square >= 0) {
        Square ep(core.ep_square);
        const bool p1_pushed = core.stm == Color::P2;
        if (ep.rank() != (p1_pushed ? 2 : 5)) fail("en-passant square on wrong rank");
        if (core.all() & bb(ep)) fail("en-passant square is occupied");
        Color pusher = p1_pushed ? Color::P1 : Color::P2;
        Square pawn_sq = Square::of(ep.file(), p1_pushed ? 3 : 4);
        if (!(core.pieces[static_cast<int>(pusher)][static_cast<int>(PieceKind::Pawn)] &
              bb(pawn_sq)))
            fail("en-passant square without a double-pushed pawn");
    }

    const Color mover = core.stm;
    Square their_king = lsb(core.pieces[static_cast<int>(opponent(mover))]
                                       [static_cast<int>(PieceKind::King)]);
    if (detail::attacked(core, their_king, mover, core.all()))
        fail("side not to move is in check");
}

}  // namespace

Position parse_fen(std::string_view text) {
    PositionCore core;
    size_t i = 0;
    auto fail = [&](const std::string& msg) { throw ParseError(msg, i); };
    auto skip_spaces = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };

    // board field, rank 7 down to rank 0
    int rank = 7, file = 0;
    Square last_piece{};
    bool have_last = false;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '[') break;
        if (c == '/') {
            if (file != 8) fail("rank does not have 8 squares");
            if (--rank < 0) fail("too many ranks");
            file = 0;
            have_last = false;
        } else if (c >= '1' && c <= '8') {
            file += c - '0';
            if (file > 8) fail("rank overflows 8 squares");
            have_last = false;
        } else if (c == '~') {
            if (!have_last) fail("'~' must follow a piece");
            auto piece = Position(core, {}).piece_at(last_piece);
            if (piece->second == PieceKind::Pawn || piece->second == PieceKind::King)
                fail("'~' on a pawn or king");
            core.promoted |= bb(last_piece);
            have_last = false;
        } else if (auto kind = piece_from_char(c)) {
            if (file > 7) fail("rank overflows 8 squares");
            Color color = std::isupper(static_cast<unsigned char>(c)) ? Color::P1
                                                                      : Color::P2;
            last_piece = Square::of(file, rank);
            core.pieces[static_cast<int>(color)][static_cast<int>(*kind)] |=
                bb(last_piece);
            core.occ[static_cast<int>(color)] |= bb(last_piece);
            have_last = true;
            ++file;
        } else {
            fail("unexpected character in board field");
        }
        ++i;
    }
    if (rank != 0 || file != 8) fail("board field must describe 8 ranks");

    // optional pocket field in brackets
    if (i < text.size() && text[i] == '[') {
        ++i;
        while (i < text.size() && text[i] != ']') {
            char c = text[i];
            if (c == '-') {  // tolerated empty-pocket marker
                ++i;
                continue;
            }
            auto kind = piece_from_char(c);
            if (!kind || *kind == PieceKind::King) fail("invalid pocket piece");
            Color color = std::isupper(static_cast<unsigned char>(c)) ? Color::P1
                                                                      : Color::P2;
            core.pockets[static_cast<int>(color)].add(*kind);
            ++i;
        }
        if (i >= text.size()) fail("unterminated pocket field");
        ++i;  // ']'
    }

    skip_spaces();
    if (i >= text.size()) fail("missing side to move");
    if (text[i] == 'w') core.stm = Color::P1;
    else if (text[i] == 'b') core.stm = Color::P2;
    else fail("side to move must be 'w' or 'b'");
    ++i;

    skip_spaces();
    if (i >= text.size()) fail("missing castling field");
    if (text[i] == '-') {
        ++i;
    } else {
        while (i < text.size() && text[i] != ' ') {
            switch (text[i]) {
                case 'K': core.castling |= kCastleP1King; break;
                case 'Q': core.castling |= kCastleP1Queen; break;
                case 'k': core.castling |= kCastleP2King; break;
                case 'q': core.castling |= kCastleP2Queen; break;
                default: fail("invalid castling character");
            }
            ++i;
        }
    }

    skip_spaces();
    if (i >= text.size()) fail("missing en-passant field");
    if (text[i] == '-') {
        ++i;
    } else {
        if (i + 1 >= text.size()) fail("truncated en-passant square");
        auto sq = square_from_name(text.substr(i, 2));
        if (!sq) fail("invalid en-passant square");
        core.ep_square = static_cast<int8_t>(sq->index());
        i += 2;
    }

    auto parse_int = [&](int max_value, int fallback) {
        skip_spaces();
        if (i >= text.size()) return fallback;
        int value = 0;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > max_value) fail("counter out of range");
            ++i;
        }
        if (i == start) fail("expected a number");
        return value;
    };
    core.halfmove = static_cast<uint16_t>(parse_int(9999, 0));
    core.fullmove = static_cast<uint16_t>(parse_int(9999, 1));
    if (core.fullmove == 0) fail("fullmove number must be at least 1");
    skip_spaces();
    if (i != text.size()) fail("trailing characters after FEN");

    validate(core, i);
    return Position(core, {});
}

std::string to_fen(const Position& pos) {
    std::ostringstream out;
    for (int rank = 7; rank >= 0; --rank) {
        int run = 0;
        for (int file = 0; file < 8; ++file) {
            Square s = Square::of(file, rank);
            auto piece = pos.piece_at(s);
            if (!piece) {
                ++run;
                continue;
            }
            if (run) {
                out << run;
                run = 0;
            }
            char c = piece_char(piece->second);
            out << static_cast<char>(piece->first == Color::P1
                                         ? c
                                         : std::tolower(static_cast<unsigned char>(c)));
            if (pos.is_promoted(s)) out << '~';
        }
        if (run) out << run;
        if (rank) out << '/';
    }

    out << '[';
    constexpr PieceKind kPocketOrder[] = {PieceKind::Queen, PieceKind::Rook,
                                          PieceKind::Bishop, PieceKind::Knight,
                                          PieceKind::Pawn};
    for (int c = 0; c < 2; ++c)
        for (PieceKind k : kPocketOrder)
            for (int n = 0; n < pos.pocket(static_cast<Color>(c)).count(k); ++n)
                out << static_cast<char>(
                    c == 0 ? piece_char(k)
                           : std::tolower(static_cast<unsigned char>(piece_char(k))));
    out << ']';

    out << (pos.side_to_move() == Color::P1 ? " w " : " b ");
    if (pos.castling_rights() == 0) {
        out << '-';
    } else {
        if (pos.has_castle_right(kCastleP1King)) out << 'K';
        if (pos.has_castle_right(kCastleP1Queen)) out << 'Q';
        if (pos.has_castle_right(kCastleP2King)) out << 'k';
        if (pos.has_castle_right(kCastleP2Queen)) out << 'q';
    }
    out << ' ';
    out << (pos.en_passant_target() ? square_name(*pos.en_passant_target()) : "-");
    out << ' ' << pos.halfmove_clock() << ' ' << pos.fullmove_number();
    return out.str();
}

}  // namespace zh
