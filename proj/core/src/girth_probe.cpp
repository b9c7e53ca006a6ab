#include "fsgraph/girth_probe.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fsg {

namespace {

void require_star(const FsContext& ctx) {
    SimpleGraph star = make_named(Family::star, ctx.n());
    if (!(ctx.Y == star)) throw input_error("this operation requires Y = Star_n");
}

int edge_index(const SimpleGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    const auto& es = g.edges();
    auto it = std::lower_bound(es.begin(), es.end(), Edge{u, v});
    if (it == es.end() || *it != Edge{u, v}) throw input_error("edge not in graph");
    return static_cast<int>(it - es.begin());
}

}  // namespace

Configuration star_start(int n, int center_at) {
    if (center_at < 0 || center_at >= n) throw input_error("star_start: bad center position");
    std::vector<uint16_t> map(n);
    map[center_at] = kStarCenter;
    uint16_t leaf = 1;
    for (int x = 0; x < n; ++x)
        if (x != center_at) map[x] = leaf++;
    return Configuration(std::move(map));
}

PathInducedSubgraph path_induced(const FsContext& ctx, const SwapSequence& seq) {
    require_star(ctx);
    PathInducedSubgraph out;
    std::vector<bool> seen_v(ctx.n(), false);
    std::set<Edge> seen_e;
    Configuration cur = seq.start;
    auto inv = cur.inverse();
    int center = inv[kStarCenter];
    seen_v[center] = true;
    for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
        auto [a, b] = seq.swaps[i];
        if (!ctx.friendly(cur, a, b)) {
            std::ostringstream os;
            os << "path_induced: swap " << i << " invalid";
            throw input_error(os.str());
        }
        std::swap(cur.map[a], cur.map[b]);
        center = (center == a) ? b : a;  // every friendly star swap moves the center
        seen_v[a] = seen_v[b] = true;
        seen_e.insert({std::min(a, b), std::max(a, b)});
    }
    for (int v = 0; v < ctx.n(); ++v)
        if (seen_v[v]) out.vertices.push_back(v);
    out.edges.assign(seen_e.begin(), seen_e.end());
    return out;
}

WalkStatistics walk_stats(const FsContext& ctx, const SwapSequence& seq) {
    require_star(ctx);
    WalkStatistics stats;
    stats.visits.assign(ctx.n(), 0);
    stats.traversals.assign(ctx.X.edges().size(), 0);
    stats.leaf_swaps.assign(ctx.n(), 0);
    Configuration cur = seq.start;
    auto inv = cur.inverse();
    int center = inv[kStarCenter];
    for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
        auto [a, b] = seq.swaps[i];
        if (!ctx.friendly(cur, a, b)) {
            std::ostringstream os;
            os << "walk_stats: swap " << i << " invalid";
            throw input_error(os.str());
        }
        int leaf = (cur.map[a] == kStarCenter) ? cur.map[b] : cur.map[a];
        std::swap(cur.map[a], cur.map[b]);
        center = (center == a) ? b : a;
        ++stats.visits[center];
        ++stats.traversals[edge_index(ctx.X, a, b)];
        ++stats.leaf_swaps[leaf];
        ++stats.length;
    }
    return stats;
}

SwapSequence cycle_walk(const SimpleGraph& x, const std::vector<int>& cycle, int start) {
    int k = static_cast<int>(cycle.size());
    if (k < 3) throw input_error("cycle_walk requires a cycle of length >= 3");
    for (int i = 0; i < k; ++i)
        if (!x.has_edge(cycle[i], cycle[(i + 1) % k]))
            throw input_error("cycle_walk: vertex list is not a cycle of X");
    int si = -1;
    for (int i = 0; i < k; ++i)
        if (cycle[i] == start) si = i;
    if (si < 0) throw input_error("cycle_walk: start not on the cycle");

    SwapSequence seq;
    seq.start = star_start(x.n(), start);
    Configuration cur = seq.start;
    // k-1 loops of k swaps each restore all tokens
    for (int loop = 0; loop < k - 1; ++loop)
        for (int step = 1; step <= k; ++step) {
            int a = cycle[(si + step - 1) % k];
            int b = cycle[(si + step) % k];
            seq.swaps.push_back({std::min(a, b), std::max(a, b)});
            std::swap(cur.map[a], cur.map[b]);
        }
    return seq;
}

uint64_t barbell_formula_length(const BarbellDecomposition& b) {
    uint64_t c1 = b.cycle1.size(), c2 = b.cycle2.size();
    if (b.path.size() == 1) {
        uint64_t n0 = c1 + c2 - 1;
        return 2 * n0 + 2;
    }
    uint64_t d = b.path.size() - 2;  // inner vertices
    return 2 * (c1 + c2 + 2 * d + 2);
}

namespace {

struct BarbellSearch {
    const SimpleGraph& x;
    std::vector<int> verts;            // barbell vertices
    std::vector<int> budget;           // arrivals allowed, indexed by X-vertex
    std::vector<int> arrivals;
    std::vector<std::vector<int>> adj; // adjacency restricted to barbell edges
    std::vector<std::vector<int>> dist;  // pairwise distances inside the barbell
    Configuration start_config, cur;
    int start_vertex = 0;
    uint64_t target = 0;
    std::vector<Edge> walk;
    uint64_t nodes = 0;
    static constexpr uint64_t kNodeBudget = 200'000'000;

    bool dfs(int center, uint64_t steps) {
        if (++nodes > kNodeBudget) throw budget_error("barbell_walk search budget exhausted");
        if (steps == target) return center == start_vertex && cur == start_config;
        uint64_t remaining = target - steps;
        if (static_cast<uint64_t>(dist[center][start_vertex]) > remaining) return false;
        for (int next : adj[center]) {
            if (arrivals[next] >= budget[next]) continue;
            ++arrivals[next];
            std::swap(cur.map[center], cur.map[next]);
            walk.push_back({std::min(center, next), std::max(center, next)});
            if (dfs(next, steps + 1)) return true;
            walk.pop_back();
            std::swap(cur.map[center], cur.map[next]);
            --arrivals[next];
        }
        return false;
    }
};

}  // namespace

SwapSequence barbell_walk(const SimpleGraph& x, const BarbellDecomposition& b) {
    if (!validate_barbell(x, b)) throw input_error("barbell_walk: invalid decomposition");
    BarbellSearch search{x};
    int n = x.n();
    search.budget.assign(n, 0);
    search.adj.assign(n, {});

    std::set<int> vset(b.cycle1.begin(), b.cycle1.end());
    vset.insert(b.cycle2.begin(), b.cycle2.end());
    vset.insert(b.path.begin(), b.path.end());
    search.verts.assign(vset.begin(), vset.end());

    std::set<Edge> eset;
    auto add_cycle_edges = [&](const std::vector<int>& cyc) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            eset.insert({std::min(u, v), std::max(u, v)});
        }
    };
    add_cycle_edges(b.cycle1);
    add_cycle_edges(b.cycle2);
    for (std::size_t i = 0; i + 1 < b.path.size(); ++i)
        eset.insert({std::min(b.path[i], b.path[i + 1]), std::max(b.path[i], b.path[i + 1])});
    std::map<int, int> degree;
    for (auto [u, v] : eset) {
        search.adj[u].push_back(v);
        search.adj[v].push_back(u);
        ++degree[u];
        ++degree[v];
    }

    // exact arrival budgets: junction and inner path vertices 4, others 2
    for (int v : search.verts) search.budget[v] = degree[v] >= 3 ? 4 : 2;
    for (std::size_t i = 1; i + 1 < b.path.size(); ++i) search.budget[b.path[i]] = 4;

    search.target = barbell_formula_length(b);
    uint64_t budget_sum = 0;
    for (int v : search.verts) budget_sum += search.budget[v];
    if (budget_sum != search.target)
        throw input_error("barbell_walk: budget/formula mismatch");

    // pairwise distances inside the barbell
    search.dist.assign(n, std::vector<int>(n, -1));
    for (int s : search.verts) {
        auto& dist = search.dist[s];
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : search.adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
    }

    search.start_vertex = search.verts.front();  // lowest index
    search.start_config = star_start(n, search.start_vertex);
    search.cur = search.start_config;
    search.arrivals.assign(n, 0);

    if (!search.dfs(search.start_vertex, 0))
        throw budget_error("barbell_walk: no closed walk of the formula length found");
    SwapSequence seq;
    seq.start = search.start_config;
    seq.swaps = std::move(search.walk);
    return seq;
}

std::string to_string(SubgraphShape s) {
    switch (s) {
        case SubgraphShape::cycle: return "cycle";
        case SubgraphShape::barbell: return "barbell";
        case SubgraphShape::theta: return "theta";
        case SubgraphShape::other: return "other";
    }
    return "other";
}

SubgraphShape classify_subgraph(const SimpleGraph& g) {
    std::vector<int> degs;
    int active = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) {
            ++active;
            degs.push_back(g.degree(v));
        }
    if (active == 0) return SubgraphShape::other;
    std::sort(degs.begin(), degs.end());
    auto parts = components(g);
    int nonsingleton = 0;
    for (const auto& p : parts) nonsingleton += p.size() > 1 ? 1 : 0;
    if (nonsingleton != 1) return SubgraphShape::other;
    bool all2 = std::all_of(degs.begin(), degs.end(), [](int d) { return d == 2; });
    if (all2) return SubgraphShape::cycle;
    int deg3 = static_cast<int>(std::count(degs.begin(), degs.end(), 3));
    int deg4 = static_cast<int>(std::count(degs.begin(), degs.end(), 4));
    int other = static_cast<int>(degs.size()) - deg3 - deg4 -
                static_cast<int>(std::count(degs.begin(), degs.end(), 2));
    if (other != 0) return SubgraphShape::other;
    if (deg4 == 1 && deg3 == 0) return SubgraphShape::barbell;
    if (deg4 == 0 && deg3 == 2) {
        // theta graphs are biconnected; barbells have cut vertices
        std::vector<int> live;
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) > 0) live.push_back(v);
        return is_biconnected(induced_subgraph(g, live)) ? SubgraphShape::theta
                                                         : SubgraphShape::barbell;
    }
    return SubgraphShape::other;
}

ConjectureProbeReport conjecture_probe(const SimpleGraph& x, const ExplorerOptions& opts,
                                       const SubgraphBudget& budget) {
    int n = x.n();
    if (n > opts.max_n) throw budget_error("conjecture_probe: n exceeds the BFS budget");
    FsContext ctx(x, make_named(Family::star, n));
    ConjectureProbeReport report;

    // oracle girth with a witness cycle (restart the search on the component
    // achieving the minimum)
    std::optional<uint64_t> best;
    Configuration best_seed = identity_configuration(n);
    {
        // scan components by seed in lexicographic order
        std::vector<bool> visited;
        uint64_t total = factorial(n);
        visited.assign(total, false);
        Configuration seed = identity_configuration(n);
        while (true) {
            if (!visited[perm_rank(seed)]) {
                auto comp = materialize_component(ctx, seed, opts);
                for (const auto& v : comp.verts) visited[perm_rank(v)] = true;
                auto g = component_girth(comp, best ? *best : UINT64_MAX, nullptr, opts.threads);
                if (g && (!best || *g < *best)) {
                    best = g;
                    best_seed = seed;
                }
            }
            if (!std::next_permutation(seed.map.begin(), seed.map.end())) break;
        }
    }
    if (!best) throw input_error("conjecture_probe: FS(X, Star_n) is a forest");
    report.oracle_girth = *best;

    // witness extraction and classification
    {
        auto comp = materialize_component(ctx, best_seed, opts);
        std::vector<int32_t> witness;
        auto g = component_girth(comp, *best + 1, &witness, 1);
        if (!g || *g != *best || witness.empty())
            throw input_error("conjecture_probe: witness extraction failed");
        SwapSequence cyc;
        cyc.start = comp.verts[witness[0]];
        for (std::size_t i = 0; i < witness.size(); ++i) {
            const auto& from = comp.verts[witness[i]];
            const auto& to = comp.verts[witness[(i + 1) % witness.size()]];
            int a = -1, b = -1;
            for (int v = 0; v < n; ++v)
                if (from.map[v] != to.map[v]) (a < 0 ? a : b) = v;
            cyc.swaps.push_back({std::min(a, b), std::max(a, b)});
        }
        validate_sequence(ctx, cyc);
        auto induced = path_induced(ctx, cyc);
        report.witness_shape = classify_subgraph(SimpleGraph(n, induced.edges));
    }

    // candidates from the notes' formulas
    for (const auto& cyc : all_simple_cycles(x, budget)) {
        uint64_t k = cyc.size();
        report.candidates.push_back({"cycle", cyc, k * (k - 1)});
    }
    for (const auto& b : find_barbells(x, budget)) {
        std::vector<int> verts(b.cycle1.begin(), b.cycle1.end());
        verts.insert(verts.end(), b.cycle2.begin(), b.cycle2.end());
        report.candidates.push_back({"barbell", verts, barbell_formula_length(b)});
    }
    for (const auto& t : find_thetas(x, budget)) {
        std::vector<int> verts(t.base_cycle.begin(), t.base_cycle.end());
        verts.insert(verts.end(), t.ear.begin(), t.ear.end());
        report.candidates.push_back({"theta", verts, std::nullopt});
    }
    for (const auto& c : report.candidates)
        if (c.formula_len && (!report.candidate_min || *c.formula_len < *report.candidate_min))
            report.candidate_min = c.formula_len;
    report.agree = report.candidate_min && *report.candidate_min == report.oracle_girth;
    return report;
}

std::string probe_report_json(const ConjectureProbeReport& report) {
    nlohmann::json j;
    j["oracle_girth"] = report.oracle_girth;
    j["candidates"] = nlohmann::json::array();
    for (const auto& c : report.candidates) {
        nlohmann::json cj;
        cj["type"] = c.type;
        cj["subgraph"] = c.subgraph_vertices;
        if (c.formula_len)
            cj["formula_len"] = *c.formula_len;
        else
            cj["formula_len"] = nullptr;
        j["candidates"].push_back(cj);
    }
    if (report.candidate_min)
        j["candidate_min"] = *report.candidate_min;
    else
        j["candidate_min"] = nullptr;
    j["witness_subgraph_type"] = to_string(report.witness_shape);
    j["agree"] = report.agree;
    return j.dump();
}

}  // namespace fsg
