#include "zh/data/selfplay.h"

#include <random>

#include "zh/engine/engine.h"

namespace zh::data {

std::vector<GameRecord> selfplay(int n_games, nn::Evaluator& evaluator,
                                 const SelfplayParams& params,
                                 const OpeningBook& book, uint64_t seed) {
    std::vector<GameRecord> games;
    games.reserve(n_games);

    for (int g = 0; g < n_games; ++g) {
        std::mt19937_64 rng(seed + static_cast<uint64_t>(g));
        GameRecord record;
        Position pos = initial_position();

        if (!book.empty()) {
            const auto& line = book.lines[std::uniform_int_distribution<size_t>(
                0, book.size() - 1)(rng)];
            record.opening = line.text;
            record.opening_plies = line.moves.size();
            for (const Move& m : line.moves) {
                pos = apply_move(pos, m);
                record.moves.push_back(m);
            }
        } else {
            record.opening = "startpos";
        }

        while (true) {
            if (auto result = game_result(pos)) {
                record.result = *result;
                break;
            }
            if (static_cast<int>(record.moves.size()) >= params.max_plies) {
                record.result = GameResult::Draw;
                record.adjudicated = true;
                break;
            }
            search::SearchParams sp = params.search;
            sp.seed = rng();
            const Move m = engine::choose_move(pos, evaluator, sp);
            pos = apply_move(pos, m);
            record.moves.push_back(m);
        }
        games.push_back(std::move(record));
    }
    return games;
}

std::vector<Position> replay_positions(const GameRecord& game) {
    std::vector<Position> positions;
    positions.reserve(game.moves.size() + 1);
    Position pos = initial_position();
    positions.push_back(pos);
    for (const Move& m : game.moves) {
        pos = apply_move(pos, m);
        positions.push_back(pos);
    }
    return positions;
}

}  // namespace zh::data
