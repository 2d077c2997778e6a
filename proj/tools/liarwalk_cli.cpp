// liarwalk: batch front-end for the liar machine and the pathological liar
// game.  Subcommands: simulate, discrepancy, force-parity, game (solve,
// odd-run, play), bounds.  Exit codes: 0 ok, 2 input error, 3 resource cap,
// 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "liarwalk/arith.hpp"
#include "liarwalk/chip_config.hpp"
#include "liarwalk/combinatorics.hpp"
#include "liarwalk/discrepancy.hpp"
#include "liarwalk/errors.hpp"
#include "liarwalk/io.hpp"
#include "liarwalk/liar_game.hpp"
#include "liarwalk/limits.hpp"
#include "liarwalk/parity_forge.hpp"
#include "liarwalk/random_config.hpp"

namespace {

using namespace liarwalk;

mpz_class parse_big(const std::string& text, const char* what) {
    mpz_class value;
    require_input(!text.empty() && mpz_set_str(value.get_mpz_t(), text.c_str(), 10) == 0,
                  std::string("cannot parse ") + what + " from '" + text + "'");
    return value;
}

// "p/q", an integer, or a plain decimal such as 0.25, all parsed exactly.
mpq_class parse_rational(const std::string& text, const char* what) {
    std::string s = text;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        require_input(s.find('/') == std::string::npos,
                      std::string(what) + " cannot mix '.' and '/'");
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        mpz_class num = parse_big(digits, what);
        mpz_class den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q;
    require_input(!s.empty() && mpq_set_str(q.get_mpq_t(), s.c_str(), 10) == 0,
                  std::string("cannot parse ") + what + " from '" + text + "'");
    require_input(sgn(mpq_class(q.get_den())) > 0, std::string(what) + " has zero denominator");
    q.canonicalize();
    return q;
}

std::vector<mpz_class> parse_vector(const std::string& text, const char* what) {
    std::vector<mpz_class> values;
    std::istringstream parts(text);
    std::string entry;
    while (std::getline(parts, entry, ',')) values.push_back(parse_big(entry, what));
    require_input(!values.empty(), std::string(what) + " must be a nonempty comma list");
    return values;
}

interval_spec parse_interval(const std::string& text) {
    auto colon = text.find(':');
    require_input(colon != std::string::npos, "interval must be 'a:b'");
    interval_spec spec;
    spec.a = static_cast<long>(parse_big(text.substr(0, colon), "interval endpoint").get_si());
    spec.b = static_cast<long>(parse_big(text.substr(colon + 1), "interval endpoint").get_si());
    require_input(spec.a <= spec.b, "interval needs a <= b");
    return spec;
}

struct sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        require_input(static_cast<bool>(file), "cannot open output file " + path);
        os = &file;
    }
    std::ostream& out() { return *os; }
};

struct options {
    std::string config;
    std::string out;
    std::string interval;
    std::string x0;
    std::string m;
    std::string f = "1/4";
    std::string cprime = "1";
    unsigned long steps = 0;
    unsigned long rounds = 0;
    long e = 0;
    std::vector<unsigned long> n_values;
    unsigned long long seed = 0;
    bool seed_given = false;
    unsigned long max_window = default_max_window;
    unsigned long max_nodes = default_max_nodes;
};

state_vector game_start(const options& opt) {
    state_vector x0;
    if (!opt.x0.empty()) {
        require_input(opt.m.empty(), "give either --x0 or --m, not both");
        x0.x = parse_vector(opt.x0, "state entry");
    } else {
        require_input(!opt.m.empty(), "game needs --x0 or --m");
        require_input(opt.e >= 0, "--m needs --e >= 0");
        x0.x.assign(static_cast<std::size_t>(opt.e) + 1, mpz_class(0));
        x0.x[0] = parse_big(opt.m, "element count");
    }
    x0.validate();
    return x0;
}

int run_simulate(const options& opt) {
    chip_configuration f = load_config(opt.config);
    sink output(opt.out);
    write_config(output.out(), f);
    for (unsigned long s = 0; s < opt.steps; ++s) {
        f = liar_run(f, 1, opt.max_window);
        write_config(output.out(), f);
    }
    return 0;
}

int run_discrepancy(const options& opt) {
    chip_configuration f0;
    if (!opt.config.empty())
        f0 = load_config(opt.config);
    else if (opt.seed_given)
        f0 = random_configuration(opt.seed);
    else
        throw input_error("discrepancy needs --config or --seed");
    require_input(opt.steps >= 2, "discrepancy sweep needs --steps >= 2");

    std::optional<interval_spec> interval;
    if (!opt.interval.empty()) interval = parse_interval(opt.interval);

    std::vector<unsigned long> grid;
    for (unsigned long t = 2; t < opt.steps; t *= 2) grid.push_back(t);
    grid.push_back(opt.steps);

    sink output(opt.out);
    write_discrepancy_header(output.out());
    double max_ratio = 0;
    for (unsigned long t : grid) {
        discrepancy_report report =
            interval ? interval_discrepancy(f0, t, *interval, opt.max_window)
                     : pointwise_discrepancy(f0, t, opt.max_window);
        write_discrepancy_row(output.out(), report);
        max_ratio = std::max(max_ratio, report.ratio);
    }
    std::cerr << "rows=" << grid.size() << " max_ratio=" << format_sig17(max_ratio)
              << (max_ratio < 1 ? " (all below bound)" : "") << "\n";
    return 0;
}

int run_force_parity(const options& opt) {
    std::ifstream in(opt.config);
    require_input(static_cast<bool>(in), "cannot open grid file " + opt.config);
    parity_grid grid = read_grid(in);
    chip_configuration f0 = force_parity(grid);
    sink output(opt.out);
    write_config(output.out(), f0);
    return 0;
}

int run_bounds(const options& opt) {
    require_input(!opt.n_values.empty(), "bounds needs --n");
    mpq_class f = parse_rational(opt.f, "lie fraction");
    mpq_class cprime = parse_rational(opt.cprime, "c'");
    sink output(opt.out);
    write_bounds_header(output.out());
    for (unsigned long n : opt.n_values) write_bounds_row(output.out(), n, f, cprime);
    return 0;
}

int run_game_solve(const options& opt) {
    state_vector x0 = game_start(opt);
    solve_result result = solve_game(x0, opt.rounds, x0.e(), opt.max_nodes);
    sink output(opt.out);
    output.out() << solver_json(result) << "\n";
    return 0;
}

int run_game_odd_run(const options& opt) {
    state_vector x0 = game_start(opt);
    std::vector<state_vector> states = odd_strategy_run(x0, opt.rounds);
    sink output(opt.out);
    for (unsigned long s = 1; s < states.size(); ++s) {
        question_vector q = alternating_question(states[s - 1]);
        output.out() << game_round_json(s, q, answer_t::yes, states[s]) << "\n";
    }
    return 0;
}

int run_game_play(const options& opt) {
    state_vector x = game_start(opt);
    sink output(opt.out);
    for (unsigned long s = 1; s <= opt.rounds; ++s) {
        question_vector q = alternating_question(x);
        std::cerr << "round " << s << " question (";
        for (std::size_t i = 0; i < q.a.size(); ++i)
            std::cerr << (i ? "," : "") << q.a[i];
        std::cerr << ") - answer y/n: ";
        std::string reply;
        require_input(static_cast<bool>(std::getline(std::cin, reply)),
                      "ran out of answers on standard input");
        answer_t answer;
        if (reply == "y" || reply == "yes")
            answer = answer_t::yes;
        else if (reply == "n" || reply == "no")
            answer = answer_t::no;
        else
            throw input_error("answer must be y or n, got '" + reply + "'");
        x = apply_question(x, q, answer);
        output.out() << game_round_json(s, q, answer, x) << "\n";
    }
    bool paul_wins = x.total() >= 1;
    output.out() << "{\"paul_wins\":" << (paul_wins ? "true" : "false") << "}\n";
    std::cerr << (paul_wins ? "Paul wins" : "Paul loses") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    options opt;
    CLI::App app{"liar machine / pathological liar game toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "output path (default: stdout)");
        sub->add_option("--max-window", opt.max_window, "site-window cap for simulations");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "run the liar machine");
    simulate->add_option("--config", opt.config, "initial configuration (path or {site:count,...})")
        ->required();
    simulate->add_option("--steps", opt.steps, "number of steps")->required();
    add_common(simulate);

    CLI::App* discrepancy =
        app.add_subcommand("discrepancy", "exact f-vs-linearization discrepancy sweep");
    discrepancy->add_option("--config", opt.config, "initial configuration (path or inline)");
    discrepancy->add_option("--seed", opt.seed, "generate the configuration from this seed");
    discrepancy->add_option("--steps", opt.steps, "sweep horizon (rows at powers of 2 and the horizon)")
        ->required();
    discrepancy->add_option("--interval", opt.interval, "interval a:b (default: pointwise)");
    add_common(discrepancy);

    CLI::App* force = app.add_subcommand("force-parity", "realize a parity grid");
    force->add_option("--config", opt.config, "grid file ('N T parity' header)")->required();
    add_common(force);

    CLI::App* game = app.add_subcommand("game", "pathological liar game");
    game->require_subcommand(1);
    auto add_game_common = [&](CLI::App* sub) {
        sub->add_option("--x0", opt.x0, "initial state, e.g. 1,11");
        sub->add_option("--m", opt.m, "start from (M,0,...,0)");
        sub->add_option("--e", opt.e, "maximum lies (with --m)");
        sub->add_option("--n", opt.rounds, "rounds")->required();
        sub->add_option("--out", opt.out, "output path (default: stdout)");
    };
    CLI::App* solve = game->add_subcommand("solve", "exact minimax solver");
    add_game_common(solve);
    solve->add_option("--max-nodes", opt.max_nodes, "solver position cap");
    CLI::App* odd = game->add_subcommand("odd-run", "Carole's odd strategy trajectory");
    add_game_common(odd);
    CLI::App* play = game->add_subcommand("play", "interactive: you answer as Carole");
    add_game_common(play);

    CLI::App* bounds = app.add_subcommand("bounds", "two-stage bounds table");
    bounds->add_option("--n", opt.n_values, "code lengths")->required()->delimiter(',');
    bounds->add_option("--f", opt.f, "lie fraction (rational, default 1/4)");
    bounds->add_option("--cprime", opt.cprime, "fitted interval constant (default 1)");
    bounds->add_option("--out", opt.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    opt.seed_given = discrepancy->count("--seed") > 0;

    try {
        if (app.got_subcommand(simulate)) return run_simulate(opt);
        if (app.got_subcommand(discrepancy)) return run_discrepancy(opt);
        if (app.got_subcommand(force)) return run_force_parity(opt);
        if (app.got_subcommand(bounds)) return run_bounds(opt);
        if (game->got_subcommand(solve)) return run_game_solve(opt);
        if (game->got_subcommand(odd)) return run_game_odd_run(opt);
        if (game->got_subcommand(play)) return run_game_play(opt);
        throw internal_error("no subcommand dispatched");
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
