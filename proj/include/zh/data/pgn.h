#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zh/data/selfplay.h"

namespace zh::data {

// Standard PGN with Variant "Crazyhouse" and SAN drop notation.
void export_pgn(const std::vector<GameRecord>& games, const std::string& path);
void write_pgn(const std::vector<GameRecord>& games, std::ostream& out);

// Reads back what export_pgn writes (tags, comments, results). Also suitable
// for plain movetext corpora.
std::vector<GameRecord> parse_pgn(std::istream& in);

// Replays numbered SAN movetext (move numbers, {comments} and a result token
// allowed); returns the moves and the result token, if any.
struct MovetextReplay {
    std::vector<Move> moves;
    std::string result;  // "1-0", "0-1", "1/2-1/2" or "" if absent
    Position final_position;
};
MovetextReplay replay_movetext(const std::string& text);

}  // namespace zh::data
