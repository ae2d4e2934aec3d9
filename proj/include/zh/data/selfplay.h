#pragma once

#include <string>
#include <vector>

#include "zh/data/opening_book.h"
#include "zh/nn/evaluator.h"
#include "zh/search/mcts.h"

namespace zh::data {

struct GameRecord {
    std::string opening;       // book line text, or "startpos"
    size_t opening_plies = 0;  // leading moves taken from the book
    std::vector<Move> moves;   // full game from the initial position
    GameResult result = GameResult::Draw;
    bool adjudicated = false;  // true when the max-plies cap was hit

    Color side_at(size_t ply) const {
        return ply % 2 == 0 ? Color::P1 : Color::P2;
    }
};

struct SelfplayParams {
    search::SearchParams search;  // per-move playout budget lives here
    int max_plies = 300;          // adjudicated Draw at the cap
};

// Each game starts from a book line chosen uniformly by a seeded RNG; both
// sides play search-chosen moves. Game i uses seed base_seed + i, so batches
// are reproducible move for move.
std::vector<GameRecord> selfplay(int n_games, nn::Evaluator& evaluator,
                                 const SelfplayParams& params,
                                 const OpeningBook& book, uint64_t seed);

// Positions along a replayed game, in order.
std::vector<Position> replay_positions(const GameRecord& game);

}  // namespace zh::data
