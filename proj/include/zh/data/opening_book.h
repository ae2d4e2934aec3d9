#pragma once

#include <string>
#include <vector>

#include "zh/rules/position.h"

namespace zh::data {

struct OpeningLine {
    std::string text;         // original space-separated UCI moves
    std::vector<Move> moves;  // validated from the start position
};

struct OpeningBook {
    std::vector<OpeningLine> lines;
    bool empty() const { return lines.empty(); }
    size_t size() const { return lines.size(); }
};

// One opening per line, space-separated UCI moves, '#' comments. Illegal
// lines raise ParseError with the line number.
OpeningBook load_opening_book(const std::string& path);
OpeningBook parse_opening_book(std::istream& in);

}  // namespace zh::data
