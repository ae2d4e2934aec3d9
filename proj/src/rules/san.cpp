#include <cctype>
#include <sstream>

#include "zh/errors.h"
#include "zh/rules/notation.h"

namespace zh {

namespace {

bool is_capture(const Position& pos, const Move& m) {
    if (m.is_drop()) return false;
    if (pos.piece_at(m.to())) return true;
    auto kind = pos.piece_at(m.from());
    return kind && kind->second == PieceKind::Pawn && pos.en_passant_target() &&
           *pos.en_passant_target() == m.to();
}

bool is_castle(const Position& pos, const Move& m) {
    if (m.is_drop()) return false;
    auto piece = pos.piece_at(m.from());
    return piece && piece->second == PieceKind::King &&
           std::abs(m.to().file() - m.from().file()) == 2;
}

std::string check_suffix(const Position& pos, const Move& m) {
    Position after = apply_move(pos, m);
    if (!after.in_check()) return "";
    return detail::gen_legal(after.core()).empty() ? "#" : "+";
}

}  // namespace

std::string to_san(const Position& pos, const Move& m) {
    if (!is_legal(pos, m)) throw IllegalMove("cannot write SAN for an illegal move");

    std::ostringstream out;
    if (m.is_drop()) {
        out << piece_char(m.drop_kind()) << '@' << square_name(m.to());
    } else if (is_castle(pos, m)) {
        out << (m.to().file() == 6 ? "O-O" : "O-O-O");
    } else {
        const PieceKind kind = pos.piece_at(m.from())->second;
        const bool capture = is_capture(pos, m);
        if (kind == PieceKind::Pawn) {
            if (capture) out << static_cast<char>('a' + m.from().file());
        } else {
            out << piece_char(kind);
            // disambiguate against same-kind pieces that can also reach m.to()
            bool need_file = false, need_rank = false, any = false;
            for (const Move& other : legal_moves(pos)) {
                if (other.is_drop() || other == m || other.to() != m.to()) continue;
                auto piece = pos.piece_at(other.from());
                if (piece->second != kind) continue;
                any = true;
                if (other.from().file() == m.from().file()) need_rank = true;
                if (other.from().rank() == m.from().rank()) need_file = true;
            }
            if (any && !need_file && !need_rank) need_file = true;
            if (need_file) out << static_cast<char>('a' + m.from().file());
            if (need_rank) out << static_cast<char>('1' + m.from().rank());
        }
        if (capture) out << 'x';
        out << square_name(m.to());
        if (auto promo = m.promotion()) out << '=' << piece_char(*promo);
    }
    out << check_suffix(pos, m);
    return out.str();
}

Move parse_san(const Position& pos, std::string_view text) {
    std::string s(text);
    // strip annotations
    while (!s.empty() && (s.back() == '+' || s.back() == '#' || s.back() == '!' ||
                          s.back() == '?'))
        s.pop_back();
    if (s.empty()) throw ParseError("empty SAN", 0);

    const auto moves = legal_moves(pos);
    auto require_legal = [&](const Move& m) {
        for (const Move& lm : moves)
            if (lm == m) return m;
        throw ParseError("SAN move is not legal: " + std::string(text), 0);
    };

    // castling
    if (s == "O-O" || s == "0-0")
        return require_legal(Move::board(Square::of(4, pos.side_to_move() == Color::P1 ? 0 : 7),
                                         Square::of(6, pos.side_to_move() == Color::P1 ? 0 : 7)));
    if (s == "O-O-O" || s == "0-0-0")
        return require_legal(Move::board(Square::of(4, pos.side_to_move() == Color::P1 ? 0 : 7),
                                         Square::of(2, pos.side_to_move() == Color::P1 ? 0 : 7)));

    // drops: "P@e4", "N@f5"
    if (s.size() == 4 && s[1] == '@') {
        auto kind = piece_from_char(s[0]);
        auto to = square_from_name(std::string_view(s).substr(2));
        if (!kind || *kind == PieceKind::King || !to)
            throw ParseError("malformed drop: " + std::string(text), 0);
        return require_legal(Move::drop(*kind, *to));
    }

    // structural parse: [Piece][fromFile][fromRank][x]target[=Promo]
    std::optional<PieceKind> promo;
    if (s.size() >= 2 && s[s.size() - 2] == '=') {
        promo = piece_from_char(s.back());
        if (!promo || *promo == PieceKind::King || *promo == PieceKind::Pawn)
            throw ParseError("invalid promotion piece: " + std::string(text), 0);
        s.resize(s.size() - 2);
    }
    if (s.size() < 2) throw ParseError("truncated SAN: " + std::string(text), 0);
    auto to = square_from_name(std::string_view(s).substr(s.size() - 2));
    if (!to) throw ParseError("missing target square: " + std::string(text), 0);
    s.resize(s.size() - 2);

    bool capture = false;
    if (!s.empty() && s.back() == 'x') {
        capture = true;
        s.pop_back();
    }

    PieceKind kind = PieceKind::Pawn;
    size_t idx = 0;
    if (idx < s.size() && std::isupper(static_cast<unsigned char>(s[idx]))) {
        auto k = piece_from_char(s[idx]);
        if (!k) throw ParseError("unknown piece letter: " + std::string(text), 0);
        kind = *k;
        ++idx;
    }
    int from_file = -1, from_rank = -1;
    if (idx < s.size() && s[idx] >= 'a' && s[idx] <= 'h') from_file = s[idx++] - 'a';
    if (idx < s.size() && s[idx] >= '1' && s[idx] <= '8') from_rank = s[idx++] - '1';
    if (idx != s.size()) throw ParseError("malformed SAN: " + std::string(text), 0);

    std::optional<Move> found;
    for (const Move& m : moves) {
        if (m.is_drop() || m.to() != *to) continue;
        auto piece = pos.piece_at(m.from());
        if (piece->second != kind) continue;
        if (is_castle(pos, m)) continue;
        if (from_file >= 0 && m.from().file() != from_file) continue;
        if (from_rank >= 0 && m.from().rank() != from_rank) continue;
        if (capture != is_capture(pos, m)) continue;
        if (m.promotion() != promo) continue;
        if (found) throw AmbiguousMove("ambiguous SAN: " + std::string(text));
        found = m;
    }
    if (!found) throw ParseError("SAN matches no legal move: " + std::string(text), 0);
    return *found;
}

Move parse_uci_move(const Position& pos, std::string_view text) {
    auto fail = [&] { throw ParseError("malformed move: " + std::string(text), 0); };

    std::optional<Move> m;
    if (text.size() == 4 && text[1] == '@') {
        auto kind = piece_from_char(text[0]);
        auto to = square_from_name(text.substr(2));
        if (!kind || *kind == PieceKind::King || !to) fail();
        m = Move::drop(*kind, *to);
    } else if (text.size() == 4 || text.size() == 5) {
        auto from = square_from_name(text.substr(0, 2));
        auto to = square_from_name(text.substr(2, 2));
        if (!from || !to) fail();
        if (text.size() == 5) {
            auto promo = piece_from_char(text[4]);
            if (!promo || *promo == PieceKind::King || *promo == PieceKind::Pawn) fail();
            m = Move::board(*from, *to, *promo);
        } else {
            m = Move::board(*from, *to);
        }
    } else {
        fail();
    }
    if (!is_legal(pos, *m))
        throw ParseError("move is not legal here: " + std::string(text), 0);
    return *m;
}

std::string to_uci(const Move& m) {
    if (m.is_drop())
        return std::string(1, piece_char(m.drop_kind())) + "@" + square_name(m.to());
    std::string out = square_name(m.from()) + square_name(m.to());
    if (auto promo = m.promotion())
        out += static_cast<char>(
            std::tolower(static_cast<unsigned char>(piece_char(*promo))));
    return out;
}

}  // namespace zh
