#include "fsgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace fsg {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    adj_.assign(n, {});
    adj_matrix_.assign(static_cast<std::size_t>(n) * n, false);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw input_error("self-loop rejected");
        if (u < 0 || v < 0 || u >= n || v >= n) {
            std::ostringstream os;
            os << "edge {" << u << "," << v << "} out of range for n=" << n;
            throw input_error(os.str());
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;  // ignore duplicates
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        adj_matrix_[static_cast<std::size_t>(u) * n + v] = true;
        adj_matrix_[static_cast<std::size_t>(v) * n + u] = true;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_matrix_[static_cast<std::size_t>(u) * n_ + v];
}

SimpleGraph make_named(Family family, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw input_error("wrong number of family parameters");
    };
    std::vector<Edge> edges;
    switch (family) {
        case Family::path: {
            need(1);
            int n = params[0];
            if (n < 1) throw input_error("path requires n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            return SimpleGraph(n, edges);
        }
        case Family::cycle: {
            need(1);
            int n = params[0];
            if (n < 3) throw input_error("cycle requires n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({0, n - 1});
            return SimpleGraph(n, edges);
        }
        case Family::star: {
            need(1);
            int n = params[0];
            if (n < 1) throw input_error("star requires n >= 1");
            for (int i = 1; i < n; ++i) edges.push_back({0, i});
            return SimpleGraph(n, edges);
        }
        case Family::complete: {
            need(1);
            int n = params[0];
            if (n < 1) throw input_error("complete requires n >= 1");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
            return SimpleGraph(n, edges);
        }
        case Family::complete_bipartite: {
            need(2);
            int i = params[0], j = params[1];
            if (i < 1 || j < 1) throw input_error("complete_bipartite requires i,j >= 1");
            for (int u = 0; u < i; ++u)
                for (int v = i; v < i + j; ++v) edges.push_back({u, v});
            return SimpleGraph(i + j, edges);
        }
    }
    throw input_error("unknown family");
}

SimpleGraph make_named(Family family, int n) { return make_named(family, std::vector<int>{n}); }

std::optional<Family> family_from_string(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite" || name == "biclique") return Family::complete_bipartite;
    return std::nullopt;
}

SimpleGraph complement(const SimpleGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return SimpleGraph(g.n(), edges);
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.push_back({std::min(index[u], index[v]), std::max(index[u], index[v])});
    return SimpleGraph(static_cast<int>(vertices.size()), edges);
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<std::vector<int>> parts;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> part;
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            part.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

namespace {

// articulation points via lowlink DFS
std::vector<bool> articulation_points(const SimpleGraph& g) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_art(n, false);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (v == parent) continue;
            if (disc[v] == -1) {
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != -1 && low[v] >= disc[u]) is_art[u] = true;
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) is_art[u] = true;
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) dfs(v, -1);
    return is_art;
}

}  // namespace

bool has_cut_vertex(const SimpleGraph& g) {
    auto art = articulation_points(g);
    return std::find(art.begin(), art.end(), true) != art.end();
}

bool is_biconnected(const SimpleGraph& g) {
    if (g.n() < 3) return is_connected(g);
    return is_connected(g) && !has_cut_vertex(g);
}

bool is_forest(const SimpleGraph& g) {
    return g.edge_count() == g.n() - static_cast<int>(components(g).size());
}

std::optional<int> girth(const SimpleGraph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.n()), parent(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        parent[s] = -1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best) continue;
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> fundamental_cycles(const SimpleGraph& g) {
    int n = g.n();
    std::vector<int> parent(n, -2), depth(n, 0);
    std::vector<Edge> non_tree;
    std::set<Edge> tree_edges;
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (parent[v] == -2) {
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    tree_edges.insert({std::min(u, v), std::max(u, v)});
                    queue.push_back(v);
                }
            }
        }
    }
    for (auto e : g.edges())
        if (!tree_edges.count(e)) non_tree.push_back(e);

    std::vector<std::vector<int>> cycles;
    for (auto [u, v] : non_tree) {
        std::vector<int> a{u}, b{v};
        int x = u, y = v;
        while (depth[x] > depth[y]) a.push_back(x = parent[x]);
        while (depth[y] > depth[x]) b.push_back(y = parent[y]);
        while (x != y) {
            a.push_back(x = parent[x]);
            b.push_back(y = parent[y]);
        }
        // a ends at the LCA, b's copy of it would repeat; stitch a + reverse(b)
        std::vector<int> cycle(a.begin(), a.end());
        for (auto it = b.rbegin() + 1; it != b.rend(); ++it) cycle.push_back(*it);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

namespace {

void check_budget(const SimpleGraph& g, const SubgraphBudget& budget) {
    if (g.n() > budget.max_vertices) {
        std::ostringstream os;
        os << "subgraph enumeration budget exceeded: n=" << g.n() << " > "
           << budget.max_vertices;
        throw budget_error(os.str());
    }
}

}  // namespace

std::vector<std::vector<int>> all_simple_cycles(const SimpleGraph& g,
                                                const SubgraphBudget& budget) {
    check_budget(g, budget);
    // Cycles through their least vertex: DFS restricted to indices >= root.
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<bool> on_path(g.n(), false);
    std::function<void(int, int)> dfs = [&](int root, int u) {
        path.push_back(u);
        on_path[u] = true;
        for (int v : g.neighbors(u)) {
            if (v == root && path.size() >= 3) {
                // record only one orientation: second vertex < last vertex
                if (path[1] < path.back()) {
                    cycles.push_back(path);
                    if (cycles.size() > budget.max_cycles)
                        throw budget_error("cycle enumeration budget exceeded");
                }
            } else if (v > root && !on_path[v]) {
                dfs(root, v);
            }
        }
        path.pop_back();
        on_path[u] = false;
    };
    for (int root = 0; root < g.n(); ++root) {
        path.clear();
        dfs(root, root);
    }
    return cycles;
}

namespace {

bool is_cycle_vertex_list(const SimpleGraph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3) return false;
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

std::set<Edge> cycle_edge_set(const std::vector<int>& cyc) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
        out.insert({std::min(u, v), std::max(u, v)});
    }
    return out;
}

std::set<Edge> path_edge_set(const std::vector<int>& p) {
    std::set<Edge> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        out.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
    return out;
}

}  // namespace

bool validate_barbell(const SimpleGraph& g, const BarbellDecomposition& b) {
    if (!is_cycle_vertex_list(g, b.cycle1) || !is_cycle_vertex_list(g, b.cycle2)) return false;
    std::set<int> v1(b.cycle1.begin(), b.cycle1.end());
    std::set<int> v2(b.cycle2.begin(), b.cycle2.end());
    std::vector<int> shared;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                          std::back_inserter(shared));
    auto e1 = cycle_edge_set(b.cycle1), e2 = cycle_edge_set(b.cycle2);
    for (auto e : e1)
        if (e2.count(e)) return false;
    if (b.path.empty()) return false;
    if (b.path.size() == 1) {
        // cycles share exactly one vertex, the trivial path
        return shared.size() == 1 && shared[0] == b.path[0];
    }
    if (!shared.empty()) return false;
    // path endpoints one in each cycle, inner vertices disjoint from both
    for (std::size_t i = 0; i + 1 < b.path.size(); ++i)
        if (!g.has_edge(b.path[i], b.path[i + 1])) return false;
    std::set<int> pv(b.path.begin(), b.path.end());
    if (pv.size() != b.path.size()) return false;
    int front = b.path.front(), back = b.path.back();
    bool ends_ok = (v1.count(front) && v2.count(back)) || (v2.count(front) && v1.count(back));
    if (!ends_ok) return false;
    for (std::size_t i = 1; i + 1 < b.path.size(); ++i)
        if (v1.count(b.path[i]) || v2.count(b.path[i])) return false;
    auto pe = path_edge_set(b.path);
    for (auto e : pe)
        if (e1.count(e) || e2.count(e)) return false;
    return true;
}

bool validate_theta(const SimpleGraph& g, const ThetaWitness& t) {
    if (!is_cycle_vertex_list(g, t.base_cycle)) return false;
    if (t.ear.size() < 2) return false;  // length >= 1 as a path
    std::set<int> base(t.base_cycle.begin(), t.base_cycle.end());
    if (!base.count(t.ear.front()) || !base.count(t.ear.back())) return false;
    if (t.ear.front() == t.ear.back()) return false;
    std::set<int> ear_verts(t.ear.begin(), t.ear.end());
    if (ear_verts.size() != t.ear.size()) return false;
    for (std::size_t i = 1; i + 1 < t.ear.size(); ++i)
        if (base.count(t.ear[i])) return false;
    auto be = cycle_edge_set(t.base_cycle);
    for (std::size_t i = 0; i + 1 < t.ear.size(); ++i) {
        int u = t.ear[i], v = t.ear[i + 1];
        if (!g.has_edge(u, v)) return false;
        if (be.count({std::min(u, v), std::max(u, v)})) return false;
    }
    return true;
}

namespace {

// Shortest path from any vertex of `from` to any vertex of `to`, with inner
// vertices avoiding `blocked`. Returns empty when none exists.
std::vector<int> connecting_path(const SimpleGraph& g, const std::set<int>& from,
                                 const std::set<int>& to, const std::set<int>& blocked) {
    std::vector<int> parent(g.n(), -2);
    std::deque<int> queue;
    for (int v : from) {
        parent[v] = -1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (parent[v] != -2) continue;
            if (to.count(v)) {
                std::vector<int> path{v, u};
                int x = u;
                while (parent[x] != -1) {
                    x = parent[x];
                    path.push_back(x);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (blocked.count(v)) continue;  // inner vertices must avoid both cycles
            parent[v] = u;
            queue.push_back(v);
        }
    }
    return {};
}

}  // namespace

std::vector<BarbellDecomposition> find_barbells(const SimpleGraph& g,
                                                const SubgraphBudget& budget) {
    auto cycles = all_simple_cycles(g, budget);
    std::vector<BarbellDecomposition> out;
    std::set<std::tuple<std::set<int>, std::set<int>, std::vector<int>>> seen;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            std::set<int> v1(cycles[i].begin(), cycles[i].end());
            std::set<int> v2(cycles[j].begin(), cycles[j].end());
            std::vector<int> shared;
            std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                                  std::back_inserter(shared));
            BarbellDecomposition b;
            if (shared.size() == 1) {
                auto e1 = cycle_edge_set(cycles[i]), e2 = cycle_edge_set(cycles[j]);
                bool disjoint = true;
                for (auto e : e1)
                    if (e2.count(e)) disjoint = false;
                if (!disjoint) continue;
                b = {cycles[i], cycles[j], {shared[0]}};
            } else if (shared.empty()) {
                std::set<int> blocked(v1.begin(), v1.end());
                blocked.insert(v2.begin(), v2.end());
                auto path = connecting_path(g, v1, v2, blocked);
                if (path.empty()) continue;
                b = {cycles[i], cycles[j], path};
            } else {
                continue;
            }
            if (!validate_barbell(g, b)) continue;
            std::set<int> c1(b.cycle1.begin(), b.cycle1.end());
            std::set<int> c2(b.cycle2.begin(), b.cycle2.end());
            if (c2 < c1) std::swap(c1, c2);
            if (seen.insert({c1, c2, b.path}).second) out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<ThetaWitness> find_thetas(const SimpleGraph& g, const SubgraphBudget& budget) {
    auto cycles = all_simple_cycles(g, budget);
    std::vector<ThetaWitness> out;
    std::set<std::pair<std::set<int>, std::vector<int>>> seen;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        std::set<int> base(cycles[i].begin(), cycles[i].end());
        auto base_edges = cycle_edge_set(cycles[i]);
        for (std::size_t j = 0; j < cycles.size(); ++j) {
            if (i == j) continue;
            const auto& other = cycles[j];
            int k = static_cast<int>(other.size());
            int shared = 0;
            for (int v : other) shared += base.count(v) ? 1 : 0;
            if (shared < 2) continue;
            // scan arcs of `other` between consecutive base hits
            for (int s = 0; s < k; ++s) {
                if (!base.count(other[s])) continue;
                std::vector<int> arc{other[s]};
                for (int step = 1; step <= k; ++step) {
                    int v = other[(s + step) % k];
                    arc.push_back(v);
                    if (base.count(v)) break;
                }
                if (arc.size() < 2 || !base.count(arc.back())) continue;
                ThetaWitness t{cycles[i], arc};
                if (!validate_theta(g, t)) continue;
                std::vector<int> ear_key = arc;
                if (ear_key.front() > ear_key.back())
                    std::reverse(ear_key.begin(), ear_key.end());
                if (seen.insert({base, ear_key}).second) out.push_back(std::move(t));
            }
        }
    }
    return out;
}

}  // namespace fsg
