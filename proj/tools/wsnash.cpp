// Command-line surface for the well-supported-equilibrium toolkit.
//
// Results go to stdout as deterministic key=value lines (exact rationals by
// default, --decimal for 12-significant-digit approximations); diagnostics
// go to stderr. Exit codes: 0 success, 1 infeasible/exhausted/threshold
// failure, 2 usage or parse error, 3 budget abort, 4 guarantee violation.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wsnash/algorithm.hpp"
#include "wsnash/errors.hpp"
#include "wsnash/game_io.hpp"
#include "wsnash/oracle.hpp"
#include "wsnash/prevent_exceed.hpp"
#include "wsnash/sampling.hpp"
#include "wsnash/well_support.hpp"

namespace {

using namespace wsnash;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Printer {
    bool decimal = false;

    std::string num(const Rational& value) const {
        return decimal ? to_decimal_string(value) : to_string(value);
    }

    std::string strategy(const MixedStrategy& s) const {
        std::string out;
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            if (i) out += ' ';
            out += num(s.weight(i));
        }
        return out;
    }

    std::string multiset(const Multiset& ms) const {
        std::string out;
        for (std::size_t i = 0; i < ms.counts.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(ms.counts[i]);
        }
        return out;
    }
};

std::string real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

// Loads a game and maps it into [0,1] when entries stray outside; games
// already in range run untouched so thresholds keep their meaning.
BimatrixGame load_unit_game(const std::string& path, const Printer& printer) {
    BimatrixGame game = parse_game(read_file(path));
    if (game.entries_within_unit()) return game;
    NormalizedGame normalized = normalize(game);
    std::cerr << "note: payoffs fall outside [0,1]; solving the normalized game\n";
    std::cout << "normalized=1\n"
              << "shift=" << printer.num(normalized.shift) << '\n'
              << "scale=" << printer.num(normalized.scale) << '\n';
    return std::move(normalized.game);
}

struct CommonArgs {
    std::string game_path;
    std::string delta;
    unsigned jobs = 1;
    std::uint64_t budget = 100'000'000;
    bool decimal = false;
};

int run_kappa(const std::string& delta_text) {
    std::cout << kappa_exact(parse_rational(delta_text)).get_str() << '\n';
    return 0;
}

int run_solve(const CommonArgs& args) {
    Printer printer{args.decimal};
    BimatrixGame game = load_unit_game(args.game_path, printer);
    if (!is_symmetric(game)) {
        std::cerr << "error: solve requires a symmetric game\n";
        return 2;
    }
    SearchOptions options;
    options.jobs = args.jobs;
    options.pair_budget = args.budget;
    Solution solution = half_wsne(game, parse_rational(args.delta), options);
    if (!solution.warning.empty()) std::cerr << "warning: " << solution.warning << '\n';
    std::cout << "path=" << (solution.path == SolutionPath::PE ? "PE" : "WS") << '\n'
              << "x=" << printer.strategy(solution.profile.row) << '\n'
              << "y=" << printer.strategy(solution.profile.col) << '\n'
              << "epsilon_wsne=" << printer.num(solution.certificate.epsilon_wsne) << '\n'
              << "pairs_examined=" << solution.pairs_examined << '\n';
    if (solution.path == SolutionPath::WS) std::cout << "kappa=" << solution.kappa << '\n';
    return 0;
}

int run_verify(const std::string& game_path, const std::string& profile_path,
               const std::string& epsilon_text, bool decimal) {
    Printer printer{decimal};
    BimatrixGame game = parse_game(read_file(game_path));
    StrategyProfile profile = parse_profile(read_file(profile_path), game.size());
    Rational epsilon = parse_rational(epsilon_text);
    RegretReport report = wsne_epsilon(game, profile);
    std::cout << "row_payoff=" << printer.num(report.row_payoff) << '\n'
              << "col_payoff=" << printer.num(report.col_payoff) << '\n'
              << "row_wsne_regret=" << printer.num(report.row_wsne_regret) << '\n'
              << "col_wsne_regret=" << printer.num(report.col_wsne_regret) << '\n'
              << "epsilon_wsne=" << printer.num(report.epsilon_wsne) << '\n'
              << "epsilon_ne=" << printer.num(report.epsilon_ne) << '\n';
    return report.epsilon_wsne <= epsilon ? 0 : 1;
}

int run_pe(const std::string& game_path, const std::string& u_text, bool two_sided,
           const std::string& v_text, bool decimal) {
    Printer printer{decimal};
    BimatrixGame game = load_unit_game(game_path, printer);
    Rational u = parse_rational(u_text);
    if (two_sided) {
        Rational v = parse_rational(v_text);
        auto profile = solve_pe(game, PeParams{v, u});
        if (!profile) {
            std::cout << "feasible=0\n";
            return 1;
        }
        std::cout << "feasible=1\n"
                  << "x=" << printer.strategy(profile->row) << '\n'
                  << "y=" << printer.strategy(profile->col) << '\n';
        return 0;
    }
    if (!is_symmetric(game)) {
        std::cerr << "error: one-sided pe requires a symmetric game (use --two-sided)\n";
        return 2;
    }
    auto x = symmetric_pe(game, u);
    if (!x) {
        std::cout << "feasible=0\n";
        return 1;
    }
    std::cout << "feasible=1\n"
              << "x=" << printer.strategy(*x) << '\n';
    return 0;
}

int run_ws_search(const CommonArgs& args, const std::string& v_text,
                  const std::string& u_text) {
    Printer printer{args.decimal};
    BimatrixGame game = load_unit_game(args.game_path, printer);
    WsParams params =
        WsParams::make(parse_rational(v_text), parse_rational(u_text), parse_rational(args.delta));
    SearchOptions options;
    options.jobs = args.jobs;
    options.pair_budget = args.budget;
    WsSearchResult result = search_ws(game, params, options);
    std::cout << "kappa=" << params.kappa << '\n'
              << "total_pairs=" << result.total_pairs.get_str() << '\n';
    if (!result.profile) {
        std::cout << "found=0\n"
                  << "pairs_examined=" << result.pairs_examined << '\n';
        return 1;
    }
    RegretReport report = wsne_epsilon(game, *result.profile);
    std::cout << "found=1\n"
              << "I=" << printer.multiset(result.row_multiset) << '\n'
              << "J=" << printer.multiset(result.col_multiset) << '\n'
              << "x=" << printer.strategy(result.profile->row) << '\n'
              << "y=" << printer.strategy(result.profile->col) << '\n'
              << "pairs_examined=" << result.pairs_examined << '\n'
              << "epsilon_wsne=" << printer.num(report.epsilon_wsne) << '\n';
    return 0;
}

int run_sample(const std::string& game_path, const std::string& delta_text,
               std::uint64_t trials, std::uint64_t seed, bool decimal) {
    Printer printer{decimal};
    BimatrixGame game = load_unit_game(game_path, printer);

    // Ground truth from the oracle: prefer a symmetric equilibrium when the
    // game is symmetric, otherwise take the first record.
    std::vector<NeRecord> records =
        is_symmetric(game) ? symmetric_ne(game) : support_enumeration_ne(game);
    if (records.empty()) {
        std::cerr << "error: oracle found no exact equilibrium to sample from\n";
        return 1;
    }
    const NeRecord& ne = records.front();

    SampleConfig config;
    config.delta = parse_rational(delta_text);
    config.trials = trials;
    config.seed = seed;
    SampleOutcome outcome = demonstrate_existence(game, ne.profile, config);
    std::cout << "kappa=" << outcome.kappa << '\n'
              << "v_star=" << printer.num(outcome.row_value) << '\n'
              << "u_star=" << printer.num(outcome.col_value) << '\n'
              << "trials=" << outcome.trials << '\n'
              << "successes=" << outcome.successes << '\n'
              << "empirical_failure_rate=" << printer.num(outcome.empirical_failure_rate)
              << '\n'
              << "per_side_bound=" << real(outcome.per_side_bound) << '\n'
              << "union_bound=" << real(outcome.union_bound) << '\n';
    if (outcome.first_success) {
        std::cout << "first_success_x=" << printer.strategy(outcome.first_success->row) << '\n'
                  << "first_success_y=" << printer.strategy(outcome.first_success->col) << '\n';
    }
    return 0;
}

int run_oracle(const std::string& game_path, bool decimal) {
    Printer printer{decimal};
    BimatrixGame game = parse_game(read_file(game_path));
    std::vector<NeRecord> records = support_enumeration_ne(game);
    std::cout << "count=" << records.size() << '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const NeRecord& r = records[i];
        std::string prefix = "ne" + std::to_string(i);
        std::cout << prefix << ".x=" << printer.strategy(r.profile.row) << '\n'
                  << prefix << ".y=" << printer.strategy(r.profile.col) << '\n'
                  << prefix << ".v=" << printer.num(r.row_value) << '\n'
                  << prefix << ".u=" << printer.num(r.col_value) << '\n'
                  << prefix << ".symmetric=" << (r.symmetric ? 1 : 0) << '\n';
    }
    return 0;
}

int run_gen(const std::string& kind_text, std::size_t n, std::uint64_t seed, bool symmetric) {
    GameKind kind = kind_text == "win-lose" ? GameKind::WinLose : GameKind::Uniform;
    std::cout << render_game(generate_game(kind, n, seed, symmetric));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(1/2+delta)-well-supported equilibrium toolkit for symmetric games"};
    app.require_subcommand(1);

    std::string delta_text, v_text = "1/2", u_text, epsilon_text = "1", profile_path;
    std::string kind_text = "uniform";
    CommonArgs common;
    bool two_sided = false, symmetric = false;
    std::size_t gen_n = 2;
    std::uint64_t trials = 1000, seed = 0;

    CLI::App* kappa_cmd = app.add_subcommand("kappa", "print the support bound kappa(delta)");
    kappa_cmd->add_option("--delta", delta_text, "delta in (0,1)")->required();

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "compute a (1/2+delta)-WSNE of a symmetric game");
    solve_cmd->add_option("game", common.game_path, "game file")->required();
    solve_cmd->add_option("--delta", delta_text, "delta in (0,1)")->required();
    solve_cmd->add_option("--jobs", common.jobs, "worker threads for the pair scan");
    solve_cmd->add_option("--budget", common.budget, "maximum multiset pairs");
    solve_cmd->add_flag("--decimal", common.decimal, "print decimal approximations");

    CLI::App* verify_cmd = app.add_subcommand("verify", "report exact regrets of a profile");
    verify_cmd->add_option("game", common.game_path, "game file")->required();
    verify_cmd->add_option("--profile", profile_path, "profile file")->required();
    verify_cmd->add_option("--epsilon", epsilon_text, "pass threshold on epsilon_wsne");
    verify_cmd->add_flag("--decimal", common.decimal, "print decimal approximations");

    CLI::App* pe_cmd = app.add_subcommand("pe", "feasibility of the prevents-exceeding system");
    pe_cmd->add_option("game", common.game_path, "game file")->required();
    pe_cmd->add_option("--u", u_text, "column payoff cap")->required();
    CLI::Option* two_sided_flag = pe_cmd->add_flag("--two-sided", two_sided, "solve over (x, y)");
    pe_cmd->add_option("--v", v_text, "row payoff cap (with --two-sided)")
        ->needs(two_sided_flag);
    pe_cmd->add_flag("--decimal", common.decimal, "print decimal approximations");

    CLI::App* ws_cmd = app.add_subcommand("ws-search", "exhaustive well-support search");
    ws_cmd->add_option("game", common.game_path, "game file")->required();
    ws_cmd->add_option("--v", v_text, "row threshold")->required();
    ws_cmd->add_option("--u", u_text, "column threshold")->required();
    ws_cmd->add_option("--delta", delta_text, "delta in (0,1)")->required();
    ws_cmd->add_option("--jobs", common.jobs, "worker threads for the pair scan");
    ws_cmd->add_option("--budget", common.budget, "maximum multiset pairs");
    ws_cmd->add_flag("--decimal", common.decimal, "print decimal approximations");

    CLI::App* sample_cmd =
        app.add_subcommand("sample", "sample kappa-uniform strategies from an oracle equilibrium");
    sample_cmd->add_option("game", common.game_path, "game file")->required();
    sample_cmd->add_option("--delta", delta_text, "delta in (0,1)")->required();
    sample_cmd->add_option("--trials", trials, "number of sampled profiles");
    sample_cmd->add_option("--seed", seed, "master RNG seed");
    sample_cmd->add_flag("--decimal", common.decimal, "print decimal approximations");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact equilibria of a small game");
    oracle_cmd->add_option("game", common.game_path, "game file")->required();
    oracle_cmd->add_flag("--decimal", common.decimal, "print decimal approximations");

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a seeded random game file");
    gen_cmd->add_option("--kind", kind_text, "uniform or win-lose")
        ->check(CLI::IsMember({"uniform", "win-lose"}));
    gen_cmd->add_option("--n", gen_n, "dimension")->required();
    gen_cmd->add_option("--seed", seed, "RNG seed")->required();
    gen_cmd->add_flag("--symmetric", symmetric, "emit C = R^T");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kappa_cmd->parsed()) return run_kappa(delta_text);
        if (solve_cmd->parsed()) {
            common.delta = delta_text;
            return run_solve(common);
        }
        if (verify_cmd->parsed())
            return run_verify(common.game_path, profile_path, epsilon_text, common.decimal);
        if (pe_cmd->parsed())
            return run_pe(common.game_path, u_text, two_sided, v_text, common.decimal);
        if (ws_cmd->parsed()) {
            common.delta = delta_text;
            return run_ws_search(common, v_text, u_text);
        }
        if (sample_cmd->parsed())
            return run_sample(common.game_path, delta_text, trials, seed, common.decimal);
        if (oracle_cmd->parsed()) return run_oracle(common.game_path, common.decimal);
        if (gen_cmd->parsed()) return run_gen(kind_text, gen_n, seed, symmetric);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const GuaranteeError& e) {
        std::cerr << "guarantee violated: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
