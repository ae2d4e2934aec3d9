#include "zh/engine/protocol.h"

#include <atomic>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "zh/errors.h"
#include "zh/rules/notation.h"

namespace zh::engine {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

class Session {
public:
    Session(std::istream& in, std::ostream& out, const EngineConfig& config)
        : in_(in), out_(out), config_(config) {}

    void run() {
        evaluator_ = nn::make_evaluator(config_.evaluator, config_.weights_path);
        std::string line;
        while (std::getline(in_, line)) {
            auto tokens = tokenize(line);
            if (tokens.empty()) continue;
            try {
                if (!dispatch(tokens)) break;
            } catch (const std::exception& e) {
                writeln(std::string("info string error: ") + e.what());
            }
        }
        stop_search();
    }

private:
    void writeln(const std::string& s) {
        std::lock_guard lock(out_mutex_);
        out_ << s << '\n';
        out_.flush();
    }

    void stop_search() {
        stop_.store(true, std::memory_order_relaxed);
        if (worker_.joinable()) worker_.join();
    }

    bool dispatch(const std::vector<std::string>& tokens) {
        const std::string& cmd = tokens[0];
        if (cmd == "quit") return false;
        if (cmd == "uci") {
            writeln("id name zh-engine 0.1.0");
            writeln("id author the zh-engine developers");
            writeln("option name UCI_Variant type combo default crazyhouse var crazyhouse");
            writeln("uciok");
        } else if (cmd == "isready") {
            writeln("readyok");
        } else if (cmd == "setoption") {
            // only UCI_Variant=crazyhouse exists; accept it, flag the rest
            std::string text;
            for (size_t i = 1; i < tokens.size(); ++i) text += tokens[i] + " ";
            if (text.find("UCI_Variant") == std::string::npos)
                writeln("info string unsupported option ignored");
        } else if (cmd == "ucinewgame") {
            stop_search();
            position_ = initial_position();
        } else if (cmd == "position") {
            cmd_position(tokens);
        } else if (cmd == "go") {
            cmd_go(tokens);
        } else if (cmd == "stop") {
            stop_search();
        } else {
            writeln("info string unknown command: " + cmd);
        }
        return true;
    }

    void cmd_position(const std::vector<std::string>& tokens) {
        size_t i = 1;
        if (i >= tokens.size()) throw ParseError("position: missing arguments");
        Position pos;
        if (tokens[i] == "startpos") {
            pos = initial_position();
            ++i;
        } else if (tokens[i] == "fen") {
            ++i;
            std::string fen;
            while (i < tokens.size() && tokens[i] != "moves") {
                if (!fen.empty()) fen += ' ';
                fen += tokens[i++];
            }
            pos = parse_fen(fen);
        } else {
            throw ParseError("position: expected 'startpos' or 'fen'");
        }
        if (i < tokens.size()) {
            if (tokens[i] != "moves") throw ParseError("position: expected 'moves'");
            for (++i; i < tokens.size(); ++i)
                pos = apply_move(pos, parse_uci_move(pos, tokens[i]));
        }
        stop_search();
        position_ = std::move(pos);
    }

    void cmd_go(const std::vector<std::string>& tokens) {
        stop_search();

        ClockState clock;
        bool has_clock = false;
        search::SearchParams params = config_.search;
        params.time_budget_ms.reset();
        bool has_budget = false;

        auto next_int = [&](size_t& i) {
            if (i + 1 >= tokens.size()) throw ParseError("go: missing value");
            return std::stoll(tokens[++i]);
        };
        for (size_t i = 1; i < tokens.size(); ++i) {
            const std::string& t = tokens[i];
            if (t == "wtime") {
                clock.remaining_ms[0] = next_int(i);
                has_clock = true;
            } else if (t == "btime") {
                clock.remaining_ms[1] = next_int(i);
                has_clock = true;
            } else if (t == "winc") {
                clock.increment_ms[0] = next_int(i);
            } else if (t == "binc") {
                clock.increment_ms[1] = next_int(i);
            } else if (t == "movetime") {
                params.time_budget_ms = next_int(i);
                params.playout_budget.reset();
                has_budget = true;
            } else if (t == "nodes") {
                params.playout_budget = static_cast<uint64_t>(next_int(i));
                has_budget = true;
            } else if (t == "depth") {
                params.playout_depth = static_cast<int>(next_int(i));
            } else if (t == "infinite") {
                params.playout_budget.reset();
                params.time_budget_ms.reset();
                has_budget = true;
            } else if (t == "movestogo" || t == "ponder") {
                if (t == "movestogo") next_int(i);
            } else {
                writeln("info string go: ignoring token " + t);
            }
        }
        clock.ply_number = position_.plies_played() + 1;

        stop_.store(false, std::memory_order_relaxed);
        Position pos = position_;
        worker_ = std::thread([this, pos = std::move(pos), clock, params, has_clock,
                               has_budget] {
            std::string best = "0000";
            try {
                Move m = has_clock && !has_budget
                             ? choose_move(pos, clock, *evaluator_, params,
                                           config_.safety_margin_ms, &stop_)
                             : choose_move(pos, *evaluator_, params, &stop_);
                best = to_uci(m);
            } catch (const std::exception& e) {
                writeln(std::string("info string error: ") + e.what());
            }
            writeln("bestmove " + best);
        });
    }

    std::istream& in_;
    std::ostream& out_;
    EngineConfig config_;
    std::unique_ptr<nn::Evaluator> evaluator_;
    Position position_ = initial_position();
    std::atomic<bool> stop_{false};
    std::thread worker_;
    std::mutex out_mutex_;
};

}  // namespace

void protocol_loop(std::istream& in, std::ostream& out, const EngineConfig& config) {
    Session(in, out, config).run();
}

}  // namespace zh::engine
