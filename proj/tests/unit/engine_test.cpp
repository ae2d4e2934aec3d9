#include <sstream>
#include <thread>

#include "doctest.h"
#include "zh/engine/engine.h"
#include "zh/engine/protocol.h"
#include "zh/engine/time_manager.h"
#include "zh/rules/notation.h"

using namespace zh;
using engine::ClockState;

namespace {

ClockState clock_with(int64_t ms, int ply) {
    ClockState clock;
    clock.remaining_ms = {ms, ms};
    clock.ply_number = ply;
    return clock;
}

std::vector<std::string> run_session(const std::string& script,
                                     engine::EngineConfig config = {}) {
    std::istringstream in(script);
    std::ostringstream out;
    engine::protocol_loop(in, out, config);
    std::vector<std::string> lines;
    std::istringstream split(out.str());
    std::string line;
    while (std::getline(split, line)) lines.push_back(line);
    return lines;
}

bool contains(const std::vector<std::string>& lines, const std::string& needle) {
    for (const auto& line : lines)
        if (line.find(needle) != std::string::npos) return true;
    return false;
}

std::vector<std::string> bestmoves(const std::vector<std::string>& lines) {
    std::vector<std::string> out;
    for (const auto& line : lines)
        if (line.rfind("bestmove ", 0) == 0) out.push_back(line.substr(9));
    return out;
}

}  // namespace

TEST_CASE("time allocation percentages") {
    // before the safety margin
    CHECK(engine::time_allocation(clock_with(300000, 10), Color::P1, 0) == 30000);
    CHECK(engine::time_allocation(clock_with(300000, 15), Color::P1, 0) == 30000);
    CHECK(engine::time_allocation(clock_with(300000, 16), Color::P1, 0) == 40000);
    CHECK(engine::time_allocation(clock_with(300000, 20), Color::P1, 0) == 40000);
    CHECK(engine::time_allocation(clock_with(0, 10), Color::P1, 0) == 0);
    // margin applies and floors at zero
    CHECK(engine::time_allocation(clock_with(300000, 10), Color::P1) == 29950);
    CHECK(engine::time_allocation(clock_with(100, 10), Color::P1) == 0);
}

TEST_CASE("depth schedule with upward boundaries") {
    CHECK(engine::depth_for_time(800) == 20);
    CHECK(engine::depth_for_time(750) == 20);
    CHECK(engine::depth_for_time(749.999) == 15);
    CHECK(engine::depth_for_time(300) == 15);
    CHECK(engine::depth_for_time(299.999) == 12);
    CHECK(engine::depth_for_time(120) == 12);
    CHECK(engine::depth_for_time(119.999) == 10);
    CHECK(engine::depth_for_time(90) == 10);
    CHECK(engine::depth_for_time(60) == 10);
    CHECK(engine::depth_for_time(59.999) == 4);
    CHECK(engine::depth_for_time(10) == 4);
    CHECK(engine::depth_for_time(9.999) == 0);
    CHECK(engine::depth_for_time(5) == 0);
    CHECK(engine::depth_for_time(0) == 0);
}

TEST_CASE("under ten seconds the raw policy decides") {
    nn::UniformEvaluator evaluator;
    search::SearchParams params;

    const Position pos = initial_position();
    const Move m = engine::choose_move(pos, clock_with(5000, 1), evaluator, params);
    // uniform policy: the argmax tie-break picks the lowest action index
    const auto& table = action_table();
    int lowest = kNumActions;
    Move lowest_move{};
    for (const Move& lm : legal_moves(pos)) {
        const int index = table.move_to_index(pos, lm).value();
        if (index < lowest) {
            lowest = index;
            lowest_move = lm;
        }
    }
    CHECK(m == lowest_move);
}

TEST_CASE("with clock time the search runs at the scheduled depth") {
    nn::UniformEvaluator evaluator;
    search::SearchParams params;
    params.playout_budget = 40;  // keep the unit test fast
    params.seed = 8;
    const Move m = engine::choose_move(initial_position(), clock_with(800000, 1),
                                       evaluator, params);
    CHECK(is_legal(initial_position(), m));
}

TEST_CASE("protocol handshake and variant declaration") {
    const auto lines = run_session("uci\nisready\nquit\n");
    CHECK(contains(lines, "id name"));
    CHECK(contains(lines, "id author"));
    CHECK(contains(lines, "UCI_Variant"));
    CHECK(contains(lines, "crazyhouse"));
    CHECK(contains(lines, "uciok"));
    CHECK(contains(lines, "readyok"));
}

TEST_CASE("protocol position and go produce a legal bestmove") {
    const auto lines = run_session(
        "position startpos moves e2e4 e7e5\n"
        "go nodes 24\n"
        "quit\n");
    const auto moves = bestmoves(lines);
    REQUIRE(moves.size() == 1);
    Position pos = initial_position();
    pos = apply_move(pos, parse_uci_move(pos, "e2e4"));
    pos = apply_move(pos, parse_uci_move(pos, "e7e5"));
    CHECK_NOTHROW(parse_uci_move(pos, moves[0]));
}

TEST_CASE("protocol accepts crazyhouse FENs and drop moves") {
    const auto lines = run_session(
        "position fen 4k3/8/8/8/8/8/8/4K3[Nn] w - - 0 1 moves N@f5\n"
        "go nodes 16\n"
        "quit\n");
    const auto moves = bestmoves(lines);
    REQUIRE(moves.size() == 1);
    Position pos = parse_fen("4k3/8/8/8/8/8/8/4K3[Nn] w - - 0 1");
    pos = apply_move(pos, parse_uci_move(pos, "N@f5"));
    CHECK_NOTHROW(parse_uci_move(pos, moves[0]));
}

TEST_CASE("protocol survives malformed input") {
    const auto lines = run_session(
        "banana\n"
        "position fen not a fen\n"
        "position startpos moves e2e5\n"
        "go nodes notanumber\n"
        "setoption name Nonsense value 1\n"
        "go nodes 8\n"
        "quit\n");
    CHECK(contains(lines, "info string"));
    // the last go still answers on the unchanged start position
    const auto moves = bestmoves(lines);
    REQUIRE(!moves.empty());
    CHECK_NOTHROW(parse_uci_move(initial_position(), moves.back()));
}

TEST_CASE("go with clock fields uses the schedule; terminal answers 0000") {
    const auto lines = run_session(
        "position startpos\n"
        "go wtime 5000 btime 5000\n"  // under ten seconds: raw policy move
        "quit\n");
    REQUIRE(bestmoves(lines).size() == 1);

    const auto mate_lines = run_session(
        "position startpos moves f2f3 e7e5 g2g4 d8h4\n"
        "go nodes 4\n"
        "quit\n");
    const auto mate_moves = bestmoves(mate_lines);
    REQUIRE(mate_moves.size() == 1);
    CHECK(mate_moves[0] == "0000");
}

TEST_CASE("stop interrupts an infinite search promptly") {
    std::istringstream in("position startpos\ngo infinite\nstop\nquit\n");
    std::ostringstream out;
    const auto start = std::chrono::steady_clock::now();
    engine::protocol_loop(in, out, {});
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    CHECK(out.str().find("bestmove") != std::string::npos);
    // the whole session, including the stop, must settle quickly
    CHECK(elapsed.count() < 2000);
}
