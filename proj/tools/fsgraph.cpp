// fsgraph: friends-and-strangers graph engine CLI.
//
// Subcommands: explore, diameter, girth, orient, sort, route, construct,
// girth-probe, chain, repro. Graphs are given as files (text or JSON) or as
// family:n shorthands (path:4, cycle:5, star:4, complete:4,
// complete_bipartite:2:3).
//
// Exit codes: 0 ok, 1 failed check, 2 usage, 3 bad input, 4 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsgraph/acceptance.hpp"
#include "fsgraph/construction.hpp"
#include "fsgraph/explorer.hpp"
#include "fsgraph/girth_probe.hpp"
#include "fsgraph/graph_io.hpp"
#include "fsgraph/markov.hpp"
#include "fsgraph/orientations.hpp"
#include "fsgraph/solvers.hpp"

namespace {

struct GlobalConfig {
    int budget = 10;        // explorer max n
    int threads = 0;
    std::string config_file;
};

// key=value lines; '#' comments. Recognized keys: budget, threads.
void load_config_file(GlobalConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fsg::input_error("cannot open config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "budget") cfg.budget = std::stoi(value);
        if (key == "threads") cfg.threads = std::stoi(value);
    }
}

fsg::ExplorerOptions explorer_options(const GlobalConfig& cfg) {
    fsg::ExplorerOptions opts;
    opts.max_n = cfg.budget;
    opts.threads = cfg.threads;
    return opts;
}

fsg::Configuration parse_config_arg(const std::string& word, int n) {
    if (word == "identity") return fsg::identity_configuration(n);
    if (word == "reverse") {
        auto c = fsg::identity_configuration(n);
        std::reverse(c.map.begin(), c.map.end());
        return c;
    }
    return fsg::configuration_from_word(word);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"friends-and-strangers graph engine"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalConfig cfg;
    if (const char* env = std::getenv("FSGRAPH_BUDGET")) cfg.budget = std::atoi(env);
    app.add_option("--config", cfg.config_file, "key=value config file (budget, threads)");
    app.add_option("--budget", cfg.budget, "explorer budget: max vertex count for BFS");
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");

    std::string x_spec, y_spec, graph_spec;
    bool as_json = false;

    auto* explore = app.add_subcommand("explore", "components, diameters, girth of FS(X,Y)");
    explore->add_option("--x", x_spec, "graph X")->required();
    explore->add_option("--y", y_spec, "graph Y")->required();
    explore->add_flag("--json", as_json, "machine-readable output");

    auto* diameter = app.add_subcommand("diameter", "max component diameter of FS(X,Y)");
    diameter->add_option("--x", x_spec)->required();
    diameter->add_option("--y", y_spec)->required();
    bool two_sweep = false;
    diameter->add_flag("--two-sweep", two_sweep,
                       "fast double-sweep lower bound (not exact)");
    diameter->add_flag("--json", as_json);

    auto* girth_cmd = app.add_subcommand("girth", "FS-girth of FS(X,Y)");
    girth_cmd->add_option("--x", x_spec)->required();
    girth_cmd->add_option("--y", y_spec)->required();
    girth_cmd->add_flag("--json", as_json);

    auto* orient = app.add_subcommand("orient", "double-flip classes of Acyc(complement(Y))");
    orient->add_option("--y", y_spec, "graph Y; classes of Acyc(complement(Y))")->required();
    orient->add_flag("--json", as_json);

    std::string sigma_word, tau_word;
    auto* sort_cmd = app.add_subcommand("sort", "path_sort: X=Path_n bubble route");
    sort_cmd->add_option("--y", y_spec)->required();
    sort_cmd->add_option("--sigma", sigma_word, "word, 'identity' or 'reverse'")->required();
    sort_cmd->add_option("--tau", tau_word)->required();
    bool trace = false;
    sort_cmd->add_flag("--trace", trace, "log per-step inversion counts");
    sort_cmd->add_flag("--json", as_json);

    auto* route = app.add_subcommand("route", "cycle_route: X=Cycle_n double-flip route");
    route->add_option("--y", y_spec)->required();
    route->add_option("--sigma", sigma_word)->required();
    route->add_option("--tau", tau_word)->required();
    route->add_flag("--trace", trace, "log double-flip skeleton steps");
    route->add_flag("--json", as_json);

    int levels = 1, level = 0, eta = 1;
    std::string emit = "graphs";
    auto* construct = app.add_subcommand("construct", "exponential-diameter witness");
    construct->add_option("--L", levels, "layer count")->required();
    construct->add_option("--emit", emit, "graphs | sigma-s | program | sigma-f | bound");
    construct->add_option("--level", level, "program level (default L)");
    construct->add_option("--eta", eta, "extraction count");

    auto* probe = app.add_subcommand("girth-probe", "notes' girth formulas vs BFS oracle");
    probe->add_option("--graph", graph_spec, "graph X for FS(X, Star_n)")->required();

    uint64_t steps = 10, seed = 1;
    double epsilon = 0.25;
    auto* chain = app.add_subcommand("chain", "lazy FS Markov chain diagnostics");
    chain->add_option("--graph-x", x_spec)->required();
    chain->add_option("--graph-y", y_spec)->required();
    chain->add_option("--steps", steps, "trajectory length");
    chain->add_option("--seed", seed, "RNG seed (mt19937_64)");
    chain->add_option("--epsilon", epsilon, "mixing threshold");

    std::string suite = "acceptance";
    bool slow = false;
    auto* repro = app.add_subcommand("repro", "re-run the acceptance table");
    repro->add_option("--suite", suite, "acceptance");
    repro->add_flag("--slow", slow, "include the minutes-scale girth check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cfg.config_file.empty()) load_config_file(cfg, cfg.config_file);
        auto eopts = explorer_options(cfg);

        if (*explore) {
            fsg::FsContext ctx(fsg::load_graph_spec(x_spec), fsg::load_graph_spec(y_spec));
            auto report = fsg::explore(ctx, eopts);
            if (as_json) {
                std::cout << fsg::explore_report_json(report) << "\n";
            } else {
                for (const auto& comp : report.components)
                    std::cout << "component size=" << comp.size << " diameter=" << comp.diameter
                              << " is_cycle=" << (comp.is_cycle ? "true" : "false") << "\n";
                std::cout << "girth=";
                if (report.girth)
                    std::cout << *report.girth;
                else
                    std::cout << "infinity";
                std::cout << " connected=" << (report.connected ? "true" : "false") << "\n";
            }
        } else if (*diameter) {
            fsg::FsContext ctx(fsg::load_graph_spec(x_spec), fsg::load_graph_spec(y_spec));
            uint64_t d;
            if (two_sweep) {
                auto comp = fsg::materialize_component(
                    ctx, fsg::identity_configuration(ctx.n()), eopts);
                d = fsg::diameter_lower_bound_two_sweep(comp);
                std::cerr << "note: double-sweep lower bound, not exact\n";
            } else {
                d = fsg::max_component_diameter(ctx, eopts);
            }
            if (as_json)
                std::cout << "{\"diameter\":" << d << ",\"exact\":" << (two_sweep ? "false" : "true")
                          << "}\n";
            else
                std::cout << d << "\n";
        } else if (*girth_cmd) {
            fsg::FsContext ctx(fsg::load_graph_spec(x_spec), fsg::load_graph_spec(y_spec));
            auto g = fsg::fs_girth(ctx, eopts);
            if (as_json) {
                if (g)
                    std::cout << "{\"girth\":" << *g << "}\n";
                else
                    std::cout << "{\"girth\":null}\n";
            } else if (g)
                std::cout << *g << "\n";
            else
                std::cout << "infinity\n";
        } else if (*orient) {
            auto y = fsg::load_graph_spec(y_spec);
            auto classes = fsg::double_flip_classes(fsg::complement(y));
            if (as_json) {
                std::cout << fsg::class_report_json(classes) << "\n";
            } else {
                std::cout << classes.size() << " double-flip classes, sizes:";
                for (const auto& c : classes) std::cout << " " << c.size();
                std::cout << "\n";
            }
        } else if (*sort_cmd) {
            auto y = fsg::load_graph_spec(y_spec);
            auto sigma = parse_config_arg(sigma_word, y.n());
            auto tau = parse_config_arg(tau_word, y.n());
            auto seq = fsg::path_sort(y, sigma, tau);
            if (trace) {
                fsg::Configuration cur = sigma;
                for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
                    auto [a, b] = seq.swaps[i];
                    std::swap(cur.map[a], cur.map[b]);
                    std::cerr << "step " << i << " edge {" << a << "," << b << "} inversions "
                              << fsg::inversions(cur, tau).count << "\n";
                }
            }
            if (as_json)
                std::cout << fsg::swap_sequence_json(seq) << "\n";
            else
                std::cout << seq.length() << " swaps\n";
        } else if (*route) {
            auto y = fsg::load_graph_spec(y_spec);
            auto sigma = parse_config_arg(sigma_word, y.n());
            auto tau = parse_config_arg(tau_word, y.n());
            auto seq = fsg::cycle_route(y, sigma, tau);
            if (trace) {
                auto skeleton = fsg::recover_double_flip_skeleton(y, seq, true);
                for (const auto& s : skeleton)
                    std::cerr << "double-flip at swap " << s.swap_index << ": source " << s.source
                              << " sink " << s.sink << "\n";
            }
            if (as_json)
                std::cout << fsg::swap_sequence_json(seq) << "\n";
            else
                std::cout << seq.length() << " swaps\n";
        } else if (*construct) {
            auto lc = fsg::build_construction(levels);
            if (emit == "graphs") {
                std::cout << fsg::write_graph_json(lc.X) << "\n"
                          << fsg::write_graph_json(lc.Y) << "\n";
            } else if (emit == "sigma-s") {
                std::cout << fsg::configuration_word(lc.sigma_s) << "\n";
            } else if (emit == "sigma-f") {
                std::cout << fsg::configuration_word(fsg::sigma_f(lc)) << "\n";
            } else if (emit == "bound") {
                std::cout << fsg::lower_bound_for(levels) << "\n";
            } else if (emit == "program") {
                int lvl = level > 0 ? level : levels;
                // newline-delimited swap edges, streamed
                auto checkpoints = fsg::stream_l_extraction_program(
                    lc, lvl, eta, [](std::size_t, fsg::Edge e) {
                        std::cout << e.first << " " << e.second << "\n";
                    });
                std::cerr << "checkpoints:";
                for (auto c : checkpoints) std::cerr << " " << c;
                std::cerr << "\n";
            } else {
                std::cerr << "unknown --emit value '" << emit << "'\n";
                return 2;
            }
        } else if (*probe) {
            auto x = fsg::load_graph_spec(graph_spec);
            auto report = fsg::conjecture_probe(x, eopts);
            std::cout << fsg::probe_report_json(report) << "\n";
        } else if (*chain) {
            fsg::FsContext ctx(fsg::load_graph_spec(x_spec), fsg::load_graph_spec(y_spec));
            fsg::ChainState state(ctx, fsg::identity_configuration(ctx.n()), seed);
            std::cout << "step,configuration\n";
            for (uint64_t i = 0; i <= steps; ++i) {
                std::cout << state.step_count << ",\"" << fsg::configuration_word(state.current)
                          << "\"\n";
                state = fsg::step(state);
            }
            auto comp = fsg::materialize_component(ctx, fsg::identity_configuration(ctx.n()),
                                                   eopts);
            auto p = fsg::transition_matrix(comp);
            auto pi = fsg::stationary_distribution(p);
            std::cout << "t,tv\n";
            for (uint64_t t = 1; t <= 32; t *= 2)
                std::cout << t << "," << fsg::tv_distance_at(p, t, pi) << "\n";
            std::cout << "mixing_estimate(eps=" << epsilon
                      << ")=" << fsg::mixing_estimate(p, epsilon) << "\n";
        } else if (*repro) {
            if (suite != "acceptance") {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            fsg::AcceptanceOptions aopts;
            aopts.slow = slow;
            aopts.threads = cfg.threads;
            auto results = fsg::run_acceptance(aopts);
            bool ok = fsg::report_acceptance(results, std::cout);
            return ok ? 0 : 1;
        }
    } catch (const fsg::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 4;
    } catch (const fsg::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
