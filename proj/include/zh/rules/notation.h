#pragma once

#include <string>
#include <string_view>

#include "zh/rules/position.h"

namespace zh {

// Crazyhouse-extended FEN: pocket letters in brackets appended to the board
// field (uppercase = P1), promoted pieces marked with a trailing '~'.
// Example start: rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR[] w KQkq - 0 1
Position parse_fen(std::string_view text);
std::string to_fen(const Position& pos);

// SAN extended with drops ("P@e4", "N@f5"). Throws ParseError / AmbiguousMove.
Move parse_san(const Position& pos, std::string_view text);
std::string to_san(const Position& pos, const Move& m);  // IllegalMove if m illegal

// Long algebraic: "e2e4", "e7e8q", drops as "N@f5" (parse accepts either case).
Move parse_uci_move(const Position& pos, std::string_view text);
std::string to_uci(const Move& m);

}  // namespace zh
