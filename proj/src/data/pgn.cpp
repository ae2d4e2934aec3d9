#include "zh/data/pgn.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "zh/errors.h"
#include "zh/rules/notation.h"

namespace zh::data {

namespace {

const char* result_token(GameResult r) {
    switch (r) {
        case GameResult::P1Win: return "1-0";
        case GameResult::P2Win: return "0-1";
        default: return "1/2-1/2";
    }
}

bool is_result_token(const std::string& tok) {
    return tok == "1-0" || tok == "0-1" || tok == "1/2-1/2" || tok == "*";
}

bool is_move_number(const std::string& tok) {
    size_t i = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == 0) return false;
    while (i < tok.size() && tok[i] == '.') ++i;
    return i == tok.size();
}

// strips {...} comments; returns remaining whitespace-separated tokens
std::vector<std::string> movetext_tokens(const std::string& text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    int depth = 0;
    for (char c : text) {
        if (c == '{') ++depth;
        else if (c == '}') depth = std::max(0, depth - 1);
        else if (depth == 0) cleaned += c;
    }
    std::istringstream in(cleaned);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

MovetextReplay replay_movetext(const std::string& text) {
    MovetextReplay replay;
    Position pos = initial_position();
    for (const std::string& tok : movetext_tokens(text)) {
        if (is_move_number(tok)) continue;
        if (is_result_token(tok)) {
            replay.result = tok;
            break;
        }
        if (!tok.empty() && tok[0] == '$') continue;  // NAG
        Move m = parse_san(pos, tok);
        pos = apply_move(pos, m);
        replay.moves.push_back(m);
    }
    replay.final_position = std::move(pos);
    return replay;
}

void write_pgn(const std::vector<GameRecord>& games, std::ostream& out) {
    int round = 0;
    for (const GameRecord& game : games) {
        ++round;
        out << "[Event \"zh-engine self-play\"]\n";
        out << "[Site \"local\"]\n";
        out << "[Round \"" << round << "\"]\n";
        out << "[White \"zh-engine\"]\n";
        out << "[Black \"zh-engine\"]\n";
        out << "[Variant \"Crazyhouse\"]\n";
        out << "[Opening \"" << game.opening << "\"]\n";
        out << "[Result \"" << result_token(game.result) << "\"]\n\n";

        Position pos = initial_position();
        std::string line;
        size_t ply = 0;
        for (const Move& m : game.moves) {
            std::string token;
            if (ply % 2 == 0) token += std::to_string(ply / 2 + 1) + ". ";
            token += to_san(pos, m);
            if (line.size() + token.size() + 1 > 80) {
                out << line << '\n';
                line.clear();
            }
            if (!line.empty()) line += ' ';
            line += token;
            pos = apply_move(pos, m);
            ++ply;
        }
        if (!line.empty()) line += ' ';
        line += result_token(game.result);
        out << line << "\n\n";
    }
}

void export_pgn(const std::vector<GameRecord>& games, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open PGN file for writing: " + path);
    write_pgn(games, out);
    if (!out) throw FormatError("failed writing PGN file: " + path);
}

std::vector<GameRecord> parse_pgn(std::istream& in) {
    std::vector<GameRecord> games;
    std::string line;
    std::string movetext;
    std::string opening;
    bool in_game = false;

    auto flush = [&] {
        if (movetext.find_first_not_of(" \t\r\n") == std::string::npos) {
            movetext.clear();
            return;
        }
        MovetextReplay replay = replay_movetext(movetext);
        GameRecord record;
        record.moves = std::move(replay.moves);
        record.opening = opening.empty() ? "startpos" : opening;
        if (replay.result == "1-0") record.result = GameResult::P1Win;
        else if (replay.result == "0-1") record.result = GameResult::P2Win;
        else record.result = GameResult::Draw;
        games.push_back(std::move(record));
        movetext.clear();
        opening.clear();
        in_game = false;
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '[') {
            if (in_game) flush();
            if (line.rfind("[Opening \"", 0) == 0) {
                opening = line.substr(10);
                if (auto q = opening.find('"'); q != std::string::npos)
                    opening.resize(q);
            }
            continue;
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            in_game = true;
            movetext += line + ' ';
        }
    }
    flush();
    return games;
}

}  // namespace zh::data
