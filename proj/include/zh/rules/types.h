#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace zh {

enum class Color : uint8_t { P1 = 0, P2 = 1 };  // P1 = White, P2 = Black

constexpr Color opponent(Color c) { return c == Color::P1 ? Color::P2 : Color::P1; }

enum class PieceKind : uint8_t { Pawn = 0, Knight, Bishop, Rook, Queen, King };

constexpr int kPieceKinds = 6;
constexpr int kDroppableKinds = 5;  // Pawn..Queen; kings are never pocketed

char piece_char(PieceKind k);                       // uppercase: P N B R Q K
std::optional<PieceKind> piece_from_char(char c);   // accepts either case

// Board square, rank-major: index = rank*8 + file. Rank 0 is White's back rank,
// file 0 is the a-file.
struct Square {
    uint8_t v = 0;

    constexpr Square() = default;
    constexpr explicit Square(int index) : v(static_cast<uint8_t>(index)) {}
    static constexpr Square of(int file, int rank) { return Square(rank * 8 + file); }

    constexpr int file() const { return v & 7; }
    constexpr int rank() const { return v >> 3; }
    constexpr int index() const { return v; }

    friend constexpr auto operator<=>(Square, Square) = default;
};

constexpr bool on_board(int file, int rank) {
    return file >= 0 && file < 8 && rank >= 0 && rank < 8;
}

std::string square_name(Square s);                        // "e4"
std::optional<Square> square_from_name(std::string_view); // nullopt if malformed

// Board move (with optional promotion) or piece drop.
class Move {
public:
    constexpr Move() = default;

    static constexpr Move board(Square from, Square to) {
        Move m;
        m.from_ = from;
        m.to_ = to;
        return m;
    }
    static constexpr Move board(Square from, Square to, PieceKind promo) {
        Move m = board(from, to);
        m.aux_ = static_cast<uint8_t>(promo) + 1;
        return m;
    }
    static constexpr Move drop(PieceKind kind, Square to) {
        Move m;
        m.drop_ = 1;
        m.to_ = to;
        m.aux_ = static_cast<uint8_t>(kind) + 1;
        return m;
    }

    constexpr bool is_drop() const { return drop_ != 0; }
    constexpr Square from() const { return from_; }  // board moves only
    constexpr Square to() const { return to_; }
    constexpr std::optional<PieceKind> promotion() const {
        if (drop_ || aux_ == 0) return std::nullopt;
        return static_cast<PieceKind>(aux_ - 1);
    }
    constexpr PieceKind drop_kind() const { return static_cast<PieceKind>(aux_ - 1); }

    friend constexpr bool operator==(const Move&, const Move&) = default;

private:
    uint8_t drop_ = 0;
    Square from_{};
    Square to_{};
    uint8_t aux_ = 0;  // promotion kind + 1, or drop kind + 1; 0 = none
};

enum class GameResult : uint8_t { P1Win, P2Win, Draw };

constexpr GameResult win_for(Color c) {
    return c == Color::P1 ? GameResult::P1Win : GameResult::P2Win;
}

// Reserve of captured pieces available for dropping.
struct Pocket {
    std::array<uint8_t, kDroppableKinds> counts{};  // indexed by PieceKind Pawn..Queen

    constexpr int count(PieceKind k) const { return counts[static_cast<int>(k)]; }
    constexpr void add(PieceKind k) { ++counts[static_cast<int>(k)]; }
    constexpr void remove(PieceKind k) { --counts[static_cast<int>(k)]; }
    constexpr int total() const {
        int t = 0;
        for (auto c : counts) t += c;
        return t;
    }
    constexpr bool empty() const { return total() == 0; }

    friend constexpr bool operator==(const Pocket&, const Pocket&) = default;
};

// Per-kind pocket capacity in any reachable game.
constexpr std::array<int, kDroppableKinds> kPocketMax = {16, 4, 4, 4, 2};

}  // namespace zh
