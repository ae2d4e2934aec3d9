#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "zh/data/dataset.h"
#include "zh/errors.h"
#include "zh/data/metrics.h"
#include "zh/data/opening_book.h"
#include "zh/data/pgn.h"
#include "zh/data/selfplay.h"
#include "zh/engine/protocol.h"
#include "zh/rules/notation.h"

namespace {

struct CommonOptions {
    std::string weights;
    std::string evaluator = "uniform";
    uint64_t seed = 0;
    double alpha = 0.3;
    double beta = 6.0;
    double gamma = 0.5;
    int depth = 20;
};

void add_common(CLI::App* app, CommonOptions& opts) {
    app->add_option("--weights", opts.weights, "weights file (ZHNN format)");
    app->add_option("--evaluator", opts.evaluator,
                    "evaluator: uniform, material or network");
    app->add_option("--seed", opts.seed, "RNG seed");
    app->add_option("--alpha", opts.alpha, "noise constant");
    app->add_option("--beta", opts.beta, "noise decay value");
    app->add_option("--gamma", opts.gamma, "exploration constant");
    app->add_option("--depth", opts.depth, "playout depth in plies");
}

zh::search::SearchParams search_params(const CommonOptions& opts) {
    zh::search::SearchParams params;
    params.alpha = opts.alpha;
    params.beta = opts.beta;
    params.gamma = opts.gamma;
    params.playout_depth = opts.depth;
    params.seed = opts.seed;
    return params;
}

zh::engine::EngineConfig engine_config(const CommonOptions& opts) {
    zh::engine::EngineConfig config;
    config.weights_path = opts.weights;
    config.evaluator = opts.evaluator;
    if (opts.evaluator == "network" && opts.weights.empty())
        throw zh::DomainError("--evaluator network requires --weights");
    config.search = search_params(opts);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zh-engine: a Crazyhouse chess engine"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* serve = app.add_subcommand("serve", "run the UCI-style protocol on stdio");
    add_common(serve, opts);

    auto* bestmove = app.add_subcommand("bestmove", "print the best move for a position");
    std::string bestmove_fen;
    int64_t movetime_ms = 1000;
    uint64_t playouts = 0;
    bestmove->add_option("--fen", bestmove_fen, "position (defaults to startpos)");
    bestmove->add_option("--movetime", movetime_ms, "time budget in ms");
    bestmove->add_option("--playouts", playouts, "playout budget (overrides movetime)");
    add_common(bestmove, opts);

    auto* perft_cmd = app.add_subcommand("perft", "count legal move sequences");
    int perft_depth = 1;
    std::string perft_fen;
    perft_cmd->add_option("--depth", perft_depth, "search depth in plies")->required();
    perft_cmd->add_option("--fen", perft_fen, "position (defaults to startpos)");

    auto* dump = app.add_subcommand("dump-actions", "print the action table");

    auto* selfplay_cmd = app.add_subcommand("selfplay", "generate self-play games");
    int n_games = 1;
    std::string book_path, out_path, pgn_path;
    int selfplay_playouts = 64;
    int max_plies = 300;
    selfplay_cmd->add_option("--games", n_games, "number of games")->required();
    selfplay_cmd->add_option("--book", book_path, "opening book file");
    selfplay_cmd->add_option("--out", out_path, "dataset output path (ZHDS)");
    selfplay_cmd->add_option("--pgn", pgn_path, "PGN output path");
    selfplay_cmd->add_option("--playouts", selfplay_playouts, "playouts per move");
    selfplay_cmd->add_option("--max-plies", max_plies, "adjudication cap");
    add_common(selfplay_cmd, opts);

    auto* accuracy = app.add_subcommand("eval-accuracy",
                                        "top-1 policy accuracy over a dataset");
    std::string data_path;
    bool with_losses = false;
    accuracy->add_option("--data", data_path, "dataset file (ZHDS)")->required();
    accuracy->add_flag("--losses", with_losses, "also print policy/value losses");
    add_common(accuracy, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (serve->parsed()) {
            zh::engine::protocol_loop(std::cin, std::cout, engine_config(opts));
        } else if (bestmove->parsed()) {
            auto evaluator = zh::nn::make_evaluator(opts.evaluator, opts.weights);
            zh::Position pos = bestmove_fen.empty() ? zh::initial_position()
                                                    : zh::parse_fen(bestmove_fen);
            zh::search::SearchParams params = search_params(opts);
            if (playouts > 0) {
                params.playout_budget = playouts;
            } else {
                params.playout_budget.reset();
                params.time_budget_ms = movetime_ms;
            }
            const auto result = zh::search::search(pos, *evaluator, params);
            std::cout << "bestmove " << zh::to_uci(result.best_move) << " value "
                      << result.root_value << " playouts " << result.playouts
                      << '\n';
        } else if (perft_cmd->parsed()) {
            zh::Position pos = perft_fen.empty() ? zh::initial_position()
                                                 : zh::parse_fen(perft_fen);
            const auto start = std::chrono::steady_clock::now();
            const uint64_t nodes = zh::perft(pos, perft_depth);
            const auto elapsed = std::chrono::duration<double>(
                std::chrono::steady_clock::now() - start);
            std::cout << "perft(" << perft_depth << ") = " << nodes << " ("
                      << elapsed.count() << " s)\n";
        } else if (dump->parsed()) {
            std::cout << zh::action_table().dump();
        } else if (selfplay_cmd->parsed()) {
            auto evaluator = zh::nn::make_evaluator(opts.evaluator, opts.weights);
            zh::data::OpeningBook book;
            if (!book_path.empty()) book = zh::data::load_opening_book(book_path);
            zh::data::SelfplayParams params;
            params.search = search_params(opts);
            params.search.playout_budget = static_cast<uint64_t>(selfplay_playouts);
            params.max_plies = max_plies;
            const auto games =
                zh::data::selfplay(n_games, *evaluator, params, book, opts.seed);
            std::cout << "games " << games.size() << " mean plies "
                      << zh::data::mean_game_plies(games) << '\n';
            if (!out_path.empty()) {
                zh::data::export_dataset(games, out_path);
                std::cout << "dataset written to " << out_path << '\n';
            }
            if (!pgn_path.empty()) {
                zh::data::export_pgn(games, pgn_path);
                std::cout << "pgn written to " << pgn_path << '\n';
            }
        } else if (accuracy->parsed()) {
            auto evaluator = zh::nn::make_evaluator(opts.evaluator, opts.weights);
            const auto examples = zh::data::load_dataset(data_path);
            const auto labeled = zh::data::label_dataset(examples);
            std::cout << "examples " << labeled.size() << '\n';
            std::cout << "top1-accuracy "
                      << zh::data::evaluate_policy_accuracy(*evaluator, labeled)
                      << '\n';
            if (with_losses) {
                const auto losses = zh::data::evaluate_losses(*evaluator, labeled);
                std::cout << "policy-loss " << losses.policy << " value-loss "
                          << losses.value << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
