#include "fsgraph/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "fsgraph/construction.hpp"
#include "fsgraph/explorer.hpp"
#include "fsgraph/girth_probe.hpp"
#include "fsgraph/markov.hpp"
#include "fsgraph/orientations.hpp"
#include "fsgraph/solvers.hpp"

namespace fsg {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << what << "; ";
        }
    }
};

std::vector<MaterializedComponent> all_components(const FsContext& ctx,
                                                  const ExplorerOptions& opts) {
    std::vector<MaterializedComponent> out;
    uint64_t total = factorial(ctx.n());
    std::vector<bool> visited(total, false);
    Configuration seed = identity_configuration(ctx.n());
    uint64_t seen = 0;
    while (true) {
        if (!visited[perm_rank(seed)]) {
            out.push_back(materialize_component(ctx, seed, opts));
            for (const auto& v : out.back().verts) visited[perm_rank(v)] = true;
            seen += out.back().verts.size();
            if (seen == total) break;
        }
        if (!std::next_permutation(seed.map.begin(), seed.map.end())) break;
    }
    return out;
}

std::vector<int32_t> bfs_dist(const MaterializedComponent& comp, int32_t source) {
    std::vector<int32_t> dist(comp.size(), -1);
    std::deque<int32_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int32_t u = queue.front();
        queue.pop_front();
        for (int32_t v : comp.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

SimpleGraph graph_from_mask(int n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return SimpleGraph(n, edges);
}

SimpleGraph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return SimpleGraph(n, edges);
}

Configuration random_configuration(int n, std::mt19937_64& rng) {
    Configuration c = identity_configuration(n);
    std::shuffle(c.map.begin(), c.map.end(), rng);
    return c;
}

// endpoint of a uniform friendly random walk (stays in sigma's component)
Configuration random_walk_from(const FsContext& ctx, Configuration sigma, int steps,
                               std::mt19937_64& rng) {
    for (int i = 0; i < steps; ++i) {
        auto pairs = friendly_edges(ctx, sigma);
        if (pairs.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        auto [a, b] = pairs[pick(rng)];
        std::swap(sigma.map[a], sigma.map[b]);
    }
    return sigma;
}

uint64_t gcd_of_complement_components(const SimpleGraph& y) {
    auto parts = components(complement(y));
    uint64_t g = 0;
    for (const auto& p : parts) g = std::gcd(g, static_cast<uint64_t>(p.size()));
    return g;
}

// --- criteria ----------------------------------------------------------------

Check criterion_path_complete_diameter(const ExplorerOptions& opts) {
    Check c;
    for (int n = 3; n <= 7; ++n) {
        FsContext ctx(make_named(Family::path, n), make_named(Family::complete, n));
        uint64_t diam = max_component_diameter(ctx, opts);
        uint64_t want = static_cast<uint64_t>(n) * (n - 1) / 2;
        std::ostringstream what;
        what << "diam FS(Path_" << n << ", K_" << n << ") = " << diam << " want " << want;
        c.require(diam == want, what.str());
    }
    return c;
}

Check criterion_cycle_complete_diameter(const ExplorerOptions& opts) {
    Check c;
    for (int n = 3; n <= 7; ++n) {
        FsContext ctx(make_named(Family::cycle, n), make_named(Family::complete, n));
        uint64_t diam = max_component_diameter(ctx, opts);
        uint64_t want = static_cast<uint64_t>(n) * n / 4;
        std::ostringstream what;
        what << "diam FS(Cycle_" << n << ", K_" << n << ") = " << diam << " want " << want;
        c.require(diam == want, what.str());
    }
    return c;
}

Check criterion_star_cycle_components(const ExplorerOptions& opts) {
    Check c;
    for (int n = 3; n <= 7; ++n) {
        FsContext ctx(make_named(Family::cycle, n), make_named(Family::star, n));
        auto comps = all_components(ctx, opts);
        uint64_t want_size = static_cast<uint64_t>(n) * (n - 1);
        uint64_t want_count = factorial(n) / want_size;
        std::ostringstream what;
        what << "FS(Cycle_" << n << ", Star_" << n << "): " << comps.size() << " components";
        c.require(comps.size() == want_count, what.str() + " (count)");
        for (const auto& comp : comps) {
            c.require(static_cast<uint64_t>(comp.size()) == want_size,
                      what.str() + " (component size)");
            c.require(is_cycle_component(comp), what.str() + " (not a cycle)");
        }
    }
    return c;
}

Check criterion_cycle_connectivity(const ExplorerOptions& opts) {
    Check c;
    for (int n = 4; n <= 5; ++n) {
        SimpleGraph x = make_named(Family::cycle, n);
        uint64_t graphs = 1ull << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < graphs; ++mask) {
            SimpleGraph y = graph_from_mask(n, mask);
            bool bfs = is_connected_fs(FsContext(x, y), opts);
            bool predicate = cycle_connectivity_predicate(y);
            if (bfs != predicate) {
                std::ostringstream what;
                what << "n=" << n << " mask=" << mask << " bfs=" << bfs
                     << " predicate=" << predicate;
                c.require(false, what.str());
            }
        }
    }
    return c;
}

Check criterion_path_components_distances(const ExplorerOptions& opts) {
    Check c;
    for (int n = 2; n <= 5; ++n) {
        SimpleGraph x = make_named(Family::path, n);
        uint64_t graphs = 1ull << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < graphs; ++mask) {
            SimpleGraph y = graph_from_mask(n, mask);
            SimpleGraph co = complement(y);
            FsContext ctx(x, y);
            auto comps = all_components(ctx, opts);
            auto orientations = enumerate_acyclic_orientations(co);
            if (comps.size() != orientations.size()) {
                std::ostringstream what;
                what << "n=" << n << " mask=" << mask << ": " << comps.size()
                     << " components vs " << orientations.size() << " orientations";
                c.require(false, what.str());
                continue;
            }
            for (const auto& comp : comps) {
                // component must equal the linear extensions of its orientation
                auto alpha = orientation_from(comp.verts[0], co);
                auto ext = linear_extensions(alpha);
                std::vector<std::vector<uint16_t>> lhs, rhs;
                for (const auto& v : comp.verts) lhs.push_back(v.map);
                for (const auto& v : ext) rhs.push_back(v.map);
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                if (lhs != rhs) {
                    std::ostringstream what;
                    what << "n=" << n << " mask=" << mask << ": component != L(alpha)";
                    c.require(false, what.str());
                }
                // distances = inversion counts
                for (int s = 0; s < comp.size(); ++s) {
                    auto dist = bfs_dist(comp, s);
                    for (int t = 0; t < comp.size(); ++t) {
                        int inv = inversions(comp.verts[s], comp.verts[t]).count;
                        if (dist[t] != inv) {
                            std::ostringstream what;
                            what << "n=" << n << " mask=" << mask << ": d=" << dist[t]
                                 << " inv=" << inv;
                            c.require(false, what.str());
                        }
                    }
                }
            }
        }
    }
    return c;
}

Check criterion_diameter_bounds(const ExplorerOptions& opts) {
    Check c;
    for (int n = 3; n <= 5; ++n) {
        uint64_t graphs = 1ull << (n * (n - 1) / 2);
        SimpleGraph path = make_named(Family::path, n);
        SimpleGraph cycle = make_named(Family::cycle, n);
        for (uint64_t mask = 0; mask < graphs; ++mask) {
            SimpleGraph y = graph_from_mask(n, mask);
            uint64_t ey = y.edge_count();
            for (const auto& comp : all_components(FsContext(path, y), opts)) {
                uint64_t diam = diameter_of(comp, opts.threads);
                if (diam > ey) {
                    std::ostringstream what;
                    what << "path bound: n=" << n << " mask=" << mask << " diam=" << diam
                         << " |E(Y)|=" << ey;
                    c.require(false, what.str());
                }
            }
            bool has_isolated = false;
            for (int v = 0; v < n; ++v)
                if (y.degree(v) == 0) has_isolated = true;
            bool span_star_case = has_isolated || ey + 2 <= static_cast<uint64_t>(n);
            bool gcd_one = gcd_of_complement_components(y) == 1;
            if (span_star_case || gcd_one) {
                uint64_t cycle_bound = span_star_case
                                           ? ey
                                           : 4ull * n * n * n + ey;
                for (const auto& comp : all_components(FsContext(cycle, y), opts)) {
                    uint64_t diam = diameter_of(comp, opts.threads);
                    if (diam > cycle_bound) {
                        std::ostringstream what;
                        what << "cycle bound: n=" << n << " mask=" << mask << " diam=" << diam
                             << " bound=" << cycle_bound;
                        c.require(false, what.str());
                    }
                }
            }
        }
    }
    return c;
}

Check criterion_cycle_route(uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    int done = 0;
    for (int n : {5, 6}) {
        SimpleGraph x = make_named(Family::cycle, n);
        int instances = 50;
        for (int i = 0; i < instances; ++i) {
            SimpleGraph y = random_graph(n, rng);
            while (gcd_of_complement_components(y) != 1) y = random_graph(n, rng);
            FsContext ctx(x, y);
            Configuration sigma = random_configuration(n, rng);
            std::uniform_int_distribution<int> len(0, 40);
            Configuration tau = random_walk_from(ctx, sigma, len(rng), rng);
            SwapSequence seq;
            try {
                seq = cycle_route(y, sigma, tau);
            } catch (const std::exception& e) {
                std::ostringstream what;
                what << "cycle_route threw: " << e.what();
                c.require(false, what.str());
                continue;
            }
            Configuration end = validate_sequence(ctx, seq);
            c.require(end == tau, "cycle_route endpoint mismatch");
            uint64_t bound = 4ull * n * n * n + y.edge_count();
            c.require(seq.length() <= bound, "cycle_route length bound violated");
            try {
                recover_double_flip_skeleton(y, seq, true);
            } catch (const std::exception& e) {
                std::ostringstream what;
                what << "skeleton invalid: " << e.what();
                c.require(false, what.str());
            }
            ++done;
        }
    }
    c.require(done == 100, "expected 100 instances");
    return c;
}

// replay a program, checking every invariant at every configuration
bool replay_with_checkers(const LayeredConstruction& lc, const SwapSequence& seq, Check& c,
                          const std::string& tag) {
    std::vector<uint16_t> cur = seq.start.map;
    std::vector<uint16_t> pos = seq.start.inverse();
    auto rep0 = check_invariants_pos(lc, cur, pos);
    if (!rep0.all()) {
        c.require(false, tag + ": invariant fails at start");
        return false;
    }
    for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
        auto [a, b] = seq.swaps[i];
        if (!lc.X.has_edge(a, b) || !lc.Y.has_edge(cur[a], cur[b])) {
            std::ostringstream what;
            what << tag << ": swap " << i << " not friendly";
            c.require(false, what.str());
            return false;
        }
        std::swap(pos[cur[a]], pos[cur[b]]);
        std::swap(cur[a], cur[b]);
        auto rep = check_invariants_pos(lc, cur, pos);
        if (!rep.all()) {
            std::ostringstream what;
            what << tag << ": invariant fails after swap " << i << " (rule_of_two="
                 << rep.rule_of_two << " layer_independence=" << rep.layer_independence
                 << " path_images=" << rep.path_images << " order=" << rep.order_invariance
                 << " knob_extract=" << rep.knob_extract << ")";
            c.require(false, what.str());
            return false;
        }
    }
    return true;
}

Check criterion_construction(uint64_t seed) {
    Check c;
    for (int L = 1; L <= 5; ++L) {
        auto lc = build_construction(L);
        std::ostringstream what;
        what << "build(" << L << ") has " << lc.X.n() << " vertices";
        c.require(lc.X.n() == 58 * L + 2 && lc.Y.n() == 58 * L + 2, what.str());
        c.require(check_rule_of_two(lc, lc.sigma_s), "sigma_s violates rule of two");
        c.require(check_invariants_pos(lc, lc.sigma_s.map, lc.sigma_s_pos).all(),
                  "sigma_s violates an invariant");
    }
    for (int L = 1; L <= 10; ++L) {
        uint64_t want = 1;
        for (int i = 1; i < L; ++i) want *= 25;
        c.require(lower_bound_for(L) == want, "lower bound mismatch");
    }

    {
        auto lc1 = build_construction(1);
        for (int eta : {1, 2}) {
            auto prog = one_layer_extraction(lc1, eta);
            std::ostringstream tag;
            tag << "one_layer_extraction(eta=" << eta << ")";
            replay_with_checkers(lc1, prog.program, c, tag.str());
            c.require(prog.checkpoints.size() == static_cast<std::size_t>(eta) + 1,
                      tag.str() + ": checkpoint count");
            // each checkpoint is an extraction of its predecessor
            Configuration at = prog.program.start;
            std::vector<Configuration> marks{at};
            std::size_t next_mark = 1;
            for (std::size_t i = 0; i < prog.program.swaps.size(); ++i) {
                auto [a, b] = prog.program.swaps[i];
                std::swap(at.map[a], at.map[b]);
                if (next_mark < prog.checkpoints.size() && i + 1 == prog.checkpoints[next_mark]) {
                    marks.push_back(at);
                    ++next_mark;
                }
            }
            for (std::size_t j = 1; j < marks.size(); ++j)
                c.require(is_extraction(lc1, marks[j - 1], marks[j], 1),
                          tag.str() + ": checkpoint is not a 1-extraction");
        }
    }

    {
        auto lc2 = build_construction(2);
        auto prog = l_extraction_program(lc2, 2, 1);
        replay_with_checkers(lc2, prog.program, c, "l_extraction_program(L=2,l=2,eta=1)");
        Configuration end = validate_sequence(lc2.context(), prog.program);
        c.require(is_extraction(lc2, prog.program.start, end, 2),
                  "L=2 program endpoint is not a 2-extraction");
        int chain = count_extraction_chain(lc2, prog.program, 1);
        std::ostringstream what;
        what << "level-1 extraction chain of the L=2 program = " << chain;
        c.require(chain >= 25, what.str());

        // seeded random friendly walk from sigma_s stays within the invariants
        std::mt19937_64 rng(seed);
        FsContext ctx = lc2.context();
        std::vector<uint16_t> cur = lc2.sigma_s.map;
        std::vector<uint16_t> pos = lc2.sigma_s_pos;
        auto edges = lc2.X.edges();
        for (int step = 0; step < 100'000; ++step) {
            // uniform friendly pair
            static thread_local std::vector<std::pair<int, int>> pairs;
            pairs.clear();
            for (auto [a, b] : edges)
                if (lc2.Y.has_edge(cur[a], cur[b])) pairs.push_back({a, b});
            std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
            auto [a, b] = pairs[pick(rng)];
            std::swap(pos[cur[a]], pos[cur[b]]);
            std::swap(cur[a], cur[b]);
            auto rep = check_invariants_pos(lc2, cur, pos);
            if (!rep.all()) {
                std::ostringstream walk_what;
                walk_what << "random walk violates invariants at step " << step;
                c.require(false, walk_what.str());
                break;
            }
        }
    }
    return c;
}

Check criterion_girth_probe(const ExplorerOptions& opts, bool slow) {
    Check c;
    for (int n = 4; n <= 6; ++n) {
        FsContext ctx(make_named(Family::cycle, n), make_named(Family::star, n));
        auto g = fs_girth(ctx, opts);
        std::ostringstream what;
        what << "girth FS(Cycle_" << n << ", Star_" << n << ")";
        c.require(g && *g == static_cast<uint64_t>(n) * (n - 1), what.str());
    }
    {
        SimpleGraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        FsContext ctx(bowtie, make_named(Family::star, 5));
        auto g = fs_girth(ctx, opts);
        c.require(g && *g == 6, "girth FS(bowtie, Star_5) != 6");
    }
    // barbell walks: cycle sizes 5..7, trivial path and d = 0..2 inner vertices
    for (int k1 = 5; k1 <= 7; ++k1)
        for (int k2 = k1; k2 <= 7; ++k2)
            for (int d = -1; d <= 2; ++d) {
                // d = -1 encodes the shared-vertex barbell
                std::vector<Edge> edges;
                std::vector<int> c1, c2, path;
                if (d < 0) {
                    for (int i = 0; i < k1; ++i) c1.push_back(i);
                    c2.push_back(0);
                    for (int i = 0; i < k2 - 1; ++i) c2.push_back(k1 + i);
                    path = {0};
                } else {
                    for (int i = 0; i < k1; ++i) c1.push_back(i);
                    for (int i = 0; i < k2; ++i) c2.push_back(k1 + i);
                    path.push_back(0);
                    for (int i = 0; i < d; ++i) path.push_back(k1 + k2 + i);
                    path.push_back(k1);
                }
                auto add_cycle = [&edges](const std::vector<int>& cyc) {
                    for (std::size_t i = 0; i < cyc.size(); ++i) {
                        int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                        edges.push_back({std::min(u, v), std::max(u, v)});
                    }
                };
                add_cycle(c1);
                add_cycle(c2);
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    edges.push_back({std::min(path[i], path[i + 1]),
                                     std::max(path[i], path[i + 1])});
                int n = k1 + k2 + (d < 0 ? -1 : std::max(d, 0));
                SimpleGraph x(n, edges);
                BarbellDecomposition b{c1, c2, path};
                std::ostringstream tag;
                tag << "barbell (" << k1 << "," << k2 << ",d=" << d << ")";
                try {
                    SwapSequence walk = barbell_walk(x, b);
                    FsContext ctx(x, make_named(Family::star, n));
                    Configuration end = validate_sequence(ctx, walk);
                    c.require(end == walk.start, tag.str() + ": walk not closed");
                    c.require(walk.length() == barbell_formula_length(b),
                              tag.str() + ": length != formula");
                    auto stats = walk_stats(ctx, walk);
                    uint64_t sv = std::accumulate(stats.visits.begin(), stats.visits.end(), 0ull);
                    uint64_t st = std::accumulate(stats.traversals.begin(),
                                                  stats.traversals.end(), 0ull);
                    uint64_t sl = std::accumulate(stats.leaf_swaps.begin(),
                                                  stats.leaf_swaps.end(), 0ull);
                    c.require(sv == stats.length && st == stats.length && sl == stats.length,
                              tag.str() + ": walk_stats metrics disagree");
                } catch (const std::exception& e) {
                    c.require(false, tag.str() + ": " + e.what());
                }
            }
    // triple-metric equality on cycle walks as well
    for (int k = 3; k <= 6; ++k) {
        SimpleGraph x = make_named(Family::cycle, k);
        std::vector<int> cyc(k);
        std::iota(cyc.begin(), cyc.end(), 0);
        auto walk = cycle_walk(x, cyc, 0);
        FsContext ctx(x, make_named(Family::star, k));
        Configuration end = validate_sequence(ctx, walk);
        c.require(end == walk.start, "cycle walk not closed");
        auto stats = walk_stats(ctx, walk);
        uint64_t sv = std::accumulate(stats.visits.begin(), stats.visits.end(), 0ull);
        c.require(sv == stats.length && stats.length == static_cast<uint64_t>(k) * (k - 1),
                  "cycle walk stats mismatch");
    }
    if (slow) {
        // two 5-cycles sharing one vertex, Star_9
        std::vector<Edge> edges;
        std::vector<int> c1{0, 1, 2, 3, 4}, c2{0, 5, 6, 7, 8};
        for (std::size_t i = 0; i < 5; ++i) {
            edges.push_back({std::min(c1[i], c1[(i + 1) % 5]), std::max(c1[i], c1[(i + 1) % 5])});
            edges.push_back({std::min(c2[i], c2[(i + 1) % 5]), std::max(c2[i], c2[(i + 1) % 5])});
        }
        SimpleGraph x(9, edges);
        FsContext ctx(x, make_named(Family::star, 9));
        auto g = fs_girth(ctx, {10, 0});
        c.require(g && *g == 20, "girth FS(two shared 5-cycles, Star_9) != 20");
    }
    return c;
}

Check criterion_edge_count(uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(2, 6);
    for (int i = 0; i < 50; ++i) {
        int n = size(rng);
        SimpleGraph x = random_graph(n, rng), y = random_graph(n, rng);
        FsContext ctx(x, y);
        uint64_t formula = fs_edge_count(ctx);
        // brute force: half the friendly degrees over all configurations
        uint64_t twice_edges = 0;
        Configuration perm = identity_configuration(n);
        do {
            twice_edges += friendly_degree(ctx, perm);
        } while (std::next_permutation(perm.map.begin(), perm.map.end()));
        if (formula != twice_edges / 2) {
            std::ostringstream what;
            what << "edge count: n=" << n << " formula=" << formula
                 << " brute=" << twice_edges / 2;
            c.require(false, what.str());
        }
    }
    return c;
}

Check criterion_markov(const ExplorerOptions& opts, uint64_t seed) {
    Check c;
    FsContext ctx(make_named(Family::cycle, 4), make_named(Family::star, 4));
    auto comp = materialize_component(ctx, identity_configuration(4), opts);
    auto p = transition_matrix(comp);
    for (int i = 0; i < p.size; ++i) {
        double sum = 0;
        for (int j = 0; j < p.size; ++j) sum += p.at(i, j);
        c.require(std::abs(sum - 1.0) <= 1e-12, "transition row does not sum to 1");
    }
    auto pi = stationary_distribution(p);
    double prev = 1.0;
    for (uint64_t t = 1; t <= 64; t *= 2) {
        double tv = tv_distance_at(p, t, pi);
        c.require(tv <= prev + 1e-12, "TV distance increased");
        prev = tv;
    }
    // chi-square uniformity of pair selection at one million samples
    {
        FsContext kctx(make_named(Family::complete, 4), make_named(Family::complete, 4));
        ChainState state(kctx, identity_configuration(4), seed);
        auto pairs = friendly_edges(kctx, state.current);
        std::size_t k = pairs.size();
        std::vector<uint64_t> counts(k, 0);
        const uint64_t samples = 1'000'000;
        for (uint64_t i = 1; i <= samples; ++i) {
            std::mt19937_64 rng(split_seed(seed, i));
            std::uniform_int_distribution<std::size_t> pick(0, k - 1);
            ++counts[pick(rng)];
        }
        double expected = static_cast<double>(samples) / static_cast<double>(k);
        double chi2 = 0;
        for (uint64_t o : counts) {
            double d = static_cast<double>(o) - expected;
            chi2 += d * d / expected;
        }
        double df = static_cast<double>(k - 1);
        double sigma = std::sqrt(2 * df);
        std::ostringstream what;
        what << "chi-square " << chi2 << " df " << df;
        c.require(std::abs(chi2 - df) <= 3 * sigma, what.str());
    }
    return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    ExplorerOptions eopts;
    eopts.threads = opts.threads;
    std::vector<CriterionResult> results;
    auto run = [&](int id, const std::string& name, auto fn) {
        auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.log << "exception: " << e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.passed = c.ok;
        r.details = c.log.str();
        r.seconds = std::chrono::duration<double>(stop - start).count();
        results.push_back(std::move(r));
    };

    run(1, "diam FS(Path_n, K_n) = C(n,2), n=3..7",
        [&] { return criterion_path_complete_diameter(eopts); });
    run(2, "diam FS(Cycle_n, K_n) = floor(n^2/4), n=3..7",
        [&] { return criterion_cycle_complete_diameter(eopts); });
    run(3, "FS(Cycle_n, Star_n) components are n(n-1)-cycles, n=3..7",
        [&] { return criterion_star_cycle_components(eopts); });
    run(4, "connectivity equivalence over all Y, n=4,5",
        [&] { return criterion_cycle_connectivity(eopts); });
    run(5, "path components = L(alpha), distance = inversions, n<=5",
        [&] { return criterion_path_components_distances(eopts); });
    run(6, "diameter upper bounds exhaustively at n<=5",
        [&] { return criterion_diameter_bounds(eopts); });
    run(7, "cycle_route valid on 100 random gcd-1 instances, n=5,6",
        [&] { return criterion_cycle_route(opts.seed); });
    run(8, "construction certificates (build, programs, checkers, chain, bound)",
        [&] { return criterion_construction(opts.seed); });
    run(9, std::string("girth probe (cycle/bowtie girths, barbell walks, stats)") +
               (opts.slow ? " +slow" : ""),
        [&] { return criterion_girth_probe(eopts, opts.slow); });
    run(10, "fs_edge_count matches brute force on 50 random instances",
        [&] { return criterion_edge_count(opts.seed); });
    run(11, "markov rows, TV monotonicity, pair-selection uniformity",
        [&] { return criterion_markov(eopts, opts.seed); });
    return results;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
            << r.seconds << "s)";
        if (!r.passed && !r.details.empty()) out << "\n      " << r.details;
        out << "\n";
        all = all && r.passed;
    }
    return all;
}

}  // namespace fsg
