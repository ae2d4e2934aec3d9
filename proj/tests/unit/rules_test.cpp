#include <algorithm>
#include <set>

#include "doctest.h"
#include "naive_rules.h"
#include "random_games.h"
#include "zh/errors.h"
#include "zh/rules/notation.h"
#include "zh/rules/position.h"

using namespace zh;

namespace {

std::set<std::string> move_set(const std::vector<Move>& moves) {
    std::set<std::string> out;
    for (const Move& m : moves) out.insert(to_uci(m));
    return out;
}

int count_drops(const std::vector<Move>& moves) {
    return static_cast<int>(
        std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.is_drop(); }));
}

}  // namespace

TEST_CASE("initial position basics") {
    const Position pos = initial_position();
    CHECK(popcount(pos.occupied()) == 32);
    CHECK(pos.pocket(Color::P1).empty());
    CHECK(pos.pocket(Color::P2).empty());
    CHECK(pos.side_to_move() == Color::P1);
    CHECK(pos.castling_rights() == (kCastleP1King | kCastleP1Queen | kCastleP2King | kCastleP2Queen));
    CHECK(legal_moves(pos).size() == 20);
    CHECK(count_drops(legal_moves(pos)) == 0);
}

TEST_CASE("perft from the start position") {
    const Position pos = initial_position();
    CHECK(perft(pos, 0) == 1);
    CHECK(perft(pos, 1) == 20);
    CHECK(perft(pos, 2) == 400);
    CHECK(perft(pos, 3) == 8902);
}

TEST_CASE("naive oracle agrees on shallow perft") {
    const Position pos = initial_position();
    const auto naive = oracle::from_position(pos);
    CHECK(oracle::naive_perft(naive, 1) == 20);
    CHECK(oracle::naive_perft(naive, 2) == 400);
    CHECK(oracle::naive_perft(naive, 3) == 8902);
}

TEST_CASE("drop counting: one knight in pocket") {
    // P1 holds one knight; every empty square is a drop target
    const Position pos = parse_fen("k7/8/8/8/8/8/8/K7[N] w - - 0 1");
    const auto moves = legal_moves(pos);
    const int empties = 64 - popcount(pos.occupied());
    CHECK(count_drops(moves) == empties);
}

TEST_CASE("pawn drops exclude first and last rank") {
    const Position pos = parse_fen("k7/8/8/8/8/8/8/K7[P] w - - 0 1");
    const auto moves = legal_moves(pos);
    for (const Move& m : moves) {
        if (!m.is_drop()) continue;
        CHECK(m.to().rank() != 0);
        CHECK(m.to().rank() != 7);
    }
    // both kings sit on terminal ranks, so all 48 middle squares are free
    CHECK(count_drops(moves) == 48);
}

TEST_CASE("double check cannot be blocked by drops") {
    // P2 king on e8 is double-checked by Re1 and Bb5, with a full pocket
    const Position pos = parse_fen("4k3/8/8/1B6/8/8/8/4R2K[nbrq] b - - 0 1");
    REQUIRE(pos.in_check());
    const auto moves = legal_moves(pos);
    CHECK(!moves.empty());
    for (const Move& m : moves) {
        CHECK(!m.is_drop());
        CHECK(pos.piece_at(m.from())->second == PieceKind::King);
    }
    // agreement with the brute-force oracle
    const auto naive = oracle::naive_legal_moves(oracle::from_position(pos));
    CHECK(move_set(moves) == move_set(naive));
}

TEST_CASE("drops can block a single check") {
    const Position pos = parse_fen("4k3/8/8/8/8/8/8/4R2K[n] b - - 0 1");
    REQUIRE(pos.in_check());
    bool has_blocking_drop = false;
    for (const Move& m : legal_moves(pos))
        if (m.is_drop() && m.to().file() == 4) has_blocking_drop = true;
    CHECK(has_blocking_drop);
}

TEST_CASE("capture pocketing rules") {
    // plain knight capture: pocket gains a knight
    {
        const Position pos = parse_fen("4k3/8/8/8/4n3/3P4/8/4K3[] w - - 0 1");
        const Move m = parse_uci_move(pos, "d3e4");
        const Position after = apply_move(pos, m);
        CHECK(after.pocket(Color::P1).count(PieceKind::Knight) == 1);
        CHECK(after.pocket(Color::P1).total() == 1);
    }
    // capturing a promoted queen pockets a pawn
    {
        const Position pos = parse_fen("4k3/8/8/8/4q~3/3P4/8/4K3[] w - - 0 1");
        const Move m = parse_uci_move(pos, "d3e4");
        const Position after = apply_move(pos, m);
        CHECK(after.pocket(Color::P1).count(PieceKind::Pawn) == 1);
        CHECK(after.pocket(Color::P1).count(PieceKind::Queen) == 0);
        CHECK(!after.is_promoted(Square::of(4, 3)));
    }
    // dropping never marks promoted and decrements the pocket
    {
        const Position pos = parse_fen("4k3/8/8/8/8/8/8/4K3[N] w - - 0 1");
        const Move m = parse_uci_move(pos, "N@e4");
        const Position after = apply_move(pos, m);
        CHECK(after.pocket(Color::P1).count(PieceKind::Knight) == 0);
        CHECK(after.piece_at(Square::of(4, 3)) ==
              std::pair{Color::P1, PieceKind::Knight});
        CHECK(!after.is_promoted(Square::of(4, 3)));
    }
}

TEST_CASE("en passant capture pockets the pawn") {
    const Position pos = parse_fen("4k3/8/8/8/4pP2/8/8/4K3[] b - f3 0 1");
    const Move m = parse_uci_move(pos, "e4f3");
    const Position after = apply_move(pos, m);
    CHECK(after.pocket(Color::P2).count(PieceKind::Pawn) == 1);
    CHECK(!after.piece_at(Square::of(5, 3)).has_value());
}

TEST_CASE("promotion marks the promoted set; capture reverts to pawn") {
    const Position pos = parse_fen("4k3/6P1/8/8/8/8/8/4K3[] w - - 0 1");
    const Move m = parse_uci_move(pos, "g7g8q");
    const Position after = apply_move(pos, m);
    CHECK(after.piece_at(Square::of(6, 7)) == std::pair{Color::P1, PieceKind::Queen});
    CHECK(after.is_promoted(Square::of(6, 7)));
    // moving the promoted piece carries the mark
    const Position after2 = apply_move(after, parse_uci_move(after, "e8d7"));
    const Position after3 = apply_move(after2, parse_uci_move(after2, "g8g4"));
    CHECK(after3.is_promoted(Square::of(6, 3)));
    CHECK(!after3.is_promoted(Square::of(6, 7)));
}

TEST_CASE("apply_move rejects illegal moves") {
    const Position pos = initial_position();
    CHECK_THROWS_AS(apply_move(pos, Move::board(Square::of(0, 0), Square::of(0, 4))),
                    IllegalMove);
    CHECK_THROWS_AS(apply_move(pos, Move::drop(PieceKind::Knight, Square::of(4, 3))),
                    IllegalMove);
}

TEST_CASE("checkmate, stalemate and threefold results") {
    // fool's mate
    Position pos = initial_position();
    for (const char* uci : {"f2f3", "e7e5", "g2g4", "d8h4"})
        pos = apply_move(pos, parse_uci_move(pos, uci));
    CHECK(game_result(pos) == GameResult::P2Win);
    CHECK(legal_moves(pos).empty());

    // stalemate is a draw
    const Position stale = parse_fen("k7/8/1Q6/8/8/8/8/4K3[] b - - 0 1");
    CHECK(game_result(stale) == GameResult::Draw);

    // threefold repetition of the full state key
    Position rep = initial_position();
    for (int cycle = 0; cycle < 2; ++cycle) {
        for (const char* uci : {"g1f3", "g8f6", "f3g1", "f6g8"})
            rep = apply_move(rep, parse_uci_move(rep, uci));
        if (cycle == 0) CHECK(!game_result(rep));
    }
    CHECK(repetition_count(rep) == 2);
    CHECK(game_result(rep) == GameResult::Draw);
    // adjudication does not gate move generation: recorded games may legally
    // continue through a repeated position
    CHECK(!legal_moves(rep).empty());
}

TEST_CASE("state keys: pocket, side to move and placement all matter") {
    const Position a = parse_fen("4k3/8/8/8/8/8/8/4K3[N] w - - 0 1");
    const Position b = parse_fen("4k3/8/8/8/8/8/8/4K3[NN] w - - 0 1");
    const Position c = parse_fen("4k3/8/8/8/8/8/8/4K3[N] b - - 0 1");
    CHECK(state_key(a) != state_key(b));
    CHECK(state_key(a) != state_key(c));
    CHECK(state_key(a) == state_key(parse_fen("4k3/8/8/8/8/8/8/4K3[N] w - - 7 31")));

    // shuffle and return: same key, repetition count grows
    Position pos = initial_position();
    const StateKey start_key = state_key(pos);
    CHECK(repetition_count(pos) == 0);
    for (const char* uci : {"g1f3", "g8f6", "f3g1", "f6g8"})
        pos = apply_move(pos, parse_uci_move(pos, uci));
    CHECK(state_key(pos) == start_key);
    CHECK(repetition_count(pos) == 1);
}

TEST_CASE("fast and naive movegen agree on random positions to depth 2") {
    const auto positions = zh::testing::random_positions(60, /*seed=*/7);
    for (const Position& pos : positions) {
        const auto fast = legal_moves(pos);
        const auto naive = oracle::naive_legal_moves(oracle::from_position(pos));
        REQUIRE(move_set(fast) == move_set(naive));
        // one ply deeper on a few children
        size_t step = std::max<size_t>(1, fast.size() / 4);
        for (size_t i = 0; i < fast.size(); i += step) {
            const Position child = apply_move(pos, fast[i]);
            if (game_result(child)) continue;
            const auto fast2 = legal_moves(child);
            const auto naive2 =
                oracle::naive_legal_moves(oracle::from_position(child));
            REQUIRE(move_set(fast2) == move_set(naive2));
        }
    }
}

TEST_CASE("piece conservation along random games") {
    std::mt19937_64 rng(11);
    for (int game = 0; game < 10; ++game) {
        Position pos = initial_position();
        for (int ply = 0; ply < 200; ++ply) {
            const auto moves = legal_moves(pos);
            if (moves.empty()) break;
            pos = apply_move(pos, zh::testing::random_move(moves, rng));

            // pawn-origin census: pawns on board + pocketed pawns + promoted
            // pieces equals 16
            int pawn_census = 0;
            for (int c = 0; c < 2; ++c) {
                pawn_census += popcount(pos.pieces(static_cast<Color>(c), PieceKind::Pawn));
                pawn_census += pos.pocket(static_cast<Color>(c)).count(PieceKind::Pawn);
            }
            pawn_census += popcount(pos.promoted_squares());
            CHECK(pawn_census == 16);

            // unpromoted piece census per kind matches the standard set
            constexpr PieceKind kinds[] = {PieceKind::Knight, PieceKind::Bishop,
                                           PieceKind::Rook, PieceKind::Queen};
            constexpr int totals[] = {4, 4, 4, 2};
            for (int k = 0; k < 4; ++k) {
                int census = 0;
                for (int c = 0; c < 2; ++c) {
                    census += popcount(pos.pieces(static_cast<Color>(c), kinds[k]) &
                                       ~pos.promoted_squares());
                    census += pos.pocket(static_cast<Color>(c)).count(kinds[k]);
                }
                CHECK(census == totals[k]);
            }

            // pocket bounds
            for (int c = 0; c < 2; ++c)
                for (int k = 0; k < kDroppableKinds; ++k)
                    CHECK(pos.pocket(static_cast<Color>(c)).counts[k] <= kPocketMax[k]);

            // the mover never leaves their own king in check
            CHECK(!detail::attacked(pos.core(),
                                    pos.king_square(opponent(pos.side_to_move())),
                                    pos.side_to_move(), pos.occupied()));
        }
    }
}

TEST_CASE("perft on a terminal position is zero") {
    Position pos = initial_position();
    for (const char* uci : {"f2f3", "e7e5", "g2g4", "d8h4"})
        pos = apply_move(pos, parse_uci_move(pos, uci));
    CHECK(perft(pos, 1) == 0);
    CHECK(perft(pos, 3) == 0);
}
