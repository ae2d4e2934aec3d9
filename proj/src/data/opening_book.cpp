#include "zh/data/opening_book.h"

#include <fstream>
#include <sstream>

#include "zh/errors.h"
#include "zh/rules/notation.h"

namespace zh::data {

OpeningBook parse_opening_book(std::istream& in) {
    OpeningBook book;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        OpeningLine opening;
        Position pos = initial_position();
        std::string tok;
        while (tokens >> tok) {
            try {
                Move m = parse_uci_move(pos, tok);
                pos = apply_move(pos, m);
                opening.moves.push_back(m);
            } catch (const std::exception& e) {
                throw ParseError("opening book line " + std::to_string(line_number) +
                                     ": " + e.what(),
                                 line_number);
            }
            if (!opening.text.empty()) opening.text += ' ';
            opening.text += tok;
        }
        if (!opening.moves.empty()) book.lines.push_back(std::move(opening));
    }
    return book;
}

OpeningBook load_opening_book(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open opening book: " + path, 0);
    return parse_opening_book(in);
}

}  // namespace zh::data
