#include "fsgraph/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

namespace fsg {

namespace {

void check_budget(const FsContext& ctx, const ExplorerOptions& opts) {
    if (ctx.n() > opts.max_n) {
        std::ostringstream os;
        os << "explorer budget exceeded: n=" << ctx.n() << " > " << opts.max_n;
        throw budget_error(os.str());
    }
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for every i in [0, count) on a worker pool.
template <typename Fn>
void parallel_for(int count, int threads, Fn fn) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

MaterializedComponent materialize_component(const FsContext& ctx, const Configuration& seed,
                                            const ExplorerOptions& opts) {
    check_budget(ctx, opts);
    if (seed.size() != ctx.n() || !seed.is_permutation())
        throw input_error("seed is not a configuration of this context");

    MaterializedComponent comp;
    std::unordered_map<Configuration, int32_t, ConfigHash> index;
    comp.verts.push_back(seed);
    index.emplace(seed, 0);
    std::deque<int32_t> queue{0};
    while (!queue.empty()) {
        int32_t u = queue.front();
        queue.pop_front();
        Configuration cur = comp.verts[u];
        for (auto [a, b] : ctx.X.edges()) {
            if (!ctx.Y.has_edge(cur.map[a], cur.map[b])) continue;
            std::swap(cur.map[a], cur.map[b]);
            auto [it, fresh] = index.emplace(cur, static_cast<int32_t>(comp.verts.size()));
            if (fresh) {
                comp.verts.push_back(cur);
                queue.push_back(it->second);
            }
            std::swap(cur.map[a], cur.map[b]);
        }
    }
    comp.adj.resize(comp.verts.size());
    for (std::size_t u = 0; u < comp.verts.size(); ++u) {
        Configuration cur = comp.verts[u];
        for (auto [a, b] : ctx.X.edges()) {
            if (!ctx.Y.has_edge(cur.map[a], cur.map[b])) continue;
            std::swap(cur.map[a], cur.map[b]);
            comp.adj[u].push_back(index.at(cur));
            std::swap(cur.map[a], cur.map[b]);
        }
    }
    return comp;
}

std::vector<Configuration> component_of(const FsContext& ctx, const Configuration& seed,
                                        const ExplorerOptions& opts) {
    return materialize_component(ctx, seed, opts).verts;
}

std::optional<uint64_t> distance(const FsContext& ctx, const Configuration& sigma,
                                 const Configuration& tau, const ExplorerOptions& opts) {
    check_budget(ctx, opts);
    if (sigma == tau) return 0;
    std::unordered_map<Configuration, uint64_t, ConfigHash> dist;
    dist.emplace(sigma, 0);
    std::deque<Configuration> queue{sigma};
    while (!queue.empty()) {
        Configuration cur = queue.front();
        queue.pop_front();
        uint64_t d = dist.at(cur);
        for (auto [a, b] : ctx.X.edges()) {
            if (!ctx.Y.has_edge(cur.map[a], cur.map[b])) continue;
            std::swap(cur.map[a], cur.map[b]);
            if (!dist.count(cur)) {
                if (cur == tau) return d + 1;
                dist.emplace(cur, d + 1);
                queue.push_back(cur);
            }
            std::swap(cur.map[a], cur.map[b]);
        }
    }
    return std::nullopt;
}

namespace {

uint64_t eccentricity(const MaterializedComponent& comp, int32_t source,
                      std::vector<int32_t>& dist) {
    dist.assign(comp.size(), -1);
    std::deque<int32_t> queue{source};
    dist[source] = 0;
    int32_t far = 0;
    while (!queue.empty()) {
        int32_t u = queue.front();
        queue.pop_front();
        far = std::max(far, dist[u]);
        for (int32_t v : comp.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return static_cast<uint64_t>(far);
}

}  // namespace

uint64_t diameter_of(const MaterializedComponent& comp, int threads) {
    if (comp.verts.empty()) return 0;
    std::atomic<uint64_t> best{0};
    parallel_for(comp.size(), thread_count(threads), [&](int i) {
        static thread_local std::vector<int32_t> dist;
        uint64_t ecc = eccentricity(comp, i, dist);
        uint64_t cur = best.load();
        while (ecc > cur && !best.compare_exchange_weak(cur, ecc)) {
        }
    });
    return best.load();
}

uint64_t diameter_lower_bound_two_sweep(const MaterializedComponent& comp) {
    if (comp.verts.empty()) return 0;
    std::vector<int32_t> dist;
    eccentricity(comp, 0, dist);
    int32_t far = static_cast<int32_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    return eccentricity(comp, far, dist);
}

uint64_t component_diameter(const FsContext& ctx, const Configuration& seed,
                            const ExplorerOptions& opts) {
    auto comp = materialize_component(ctx, seed, opts);
    return diameter_of(comp, opts.threads);
}

namespace {

// Iterates seeds in lexicographic permutation order, calling fn on one
// materialized component per distinct component; visited set shared.
template <typename Fn>
void for_each_component(const FsContext& ctx, const ExplorerOptions& opts, Fn fn) {
    check_budget(ctx, opts);
    int n = ctx.n();
    uint64_t total = factorial(n);
    bool dense = n <= 10;
    std::vector<bool> visited_dense;
    std::unordered_map<Configuration, bool, ConfigHash> visited_sparse;
    if (dense) visited_dense.assign(total, false);
    auto is_visited = [&](const Configuration& c) {
        return dense ? static_cast<bool>(visited_dense[perm_rank(c)]) : visited_sparse.count(c) > 0;
    };
    auto mark = [&](const Configuration& c) {
        if (dense)
            visited_dense[perm_rank(c)] = true;
        else
            visited_sparse.emplace(c, true);
    };
    Configuration seed = identity_configuration(n);
    uint64_t seen = 0;
    while (true) {
        if (!is_visited(seed)) {
            auto comp = materialize_component(ctx, seed, opts);
            for (const auto& v : comp.verts) mark(v);
            seen += comp.verts.size();
            fn(comp);
            if (seen == total) break;
        }
        if (!std::next_permutation(seed.map.begin(), seed.map.end())) break;
    }
}

}  // namespace

uint64_t max_component_diameter(const FsContext& ctx, const ExplorerOptions& opts) {
    uint64_t best = 0;
    for_each_component(ctx, opts, [&](const MaterializedComponent& comp) {
        best = std::max(best, diameter_of(comp, opts.threads));
    });
    return best;
}

bool is_cycle_component(const MaterializedComponent& comp) {
    if (comp.size() < 3) return false;
    for (const auto& nb : comp.adj)
        if (nb.size() != 2) return false;
    return true;  // BFS closure is connected by construction
}

std::optional<uint64_t> component_girth(const MaterializedComponent& comp, uint64_t cutoff,
                                        std::vector<int32_t>* witness, int threads) {
    // BFS from every vertex. The shortest candidate over all roots is the
    // exact girth; depth is pruned by the best length so far.
    std::atomic<uint64_t> best{cutoff};
    std::vector<int32_t> best_witness;
    int nthreads = witness ? 1 : thread_count(threads);  // witness extraction runs serial
    parallel_for(comp.size(), nthreads, [&](int s) {
        static thread_local std::vector<int32_t> dist, parent;
        dist.assign(comp.size(), -1);
        parent.assign(comp.size(), -1);
        std::deque<int32_t> queue{static_cast<int32_t>(s)};
        dist[s] = 0;
        while (!queue.empty()) {
            int32_t u = queue.front();
            queue.pop_front();
            if (static_cast<uint64_t>(2 * dist[u]) >= best.load()) continue;
            for (int32_t v : comp.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    uint64_t len = static_cast<uint64_t>(dist[u]) + dist[v] + 1;
                    uint64_t cur = best.load();
                    bool improved = false;
                    while (len < cur) {
                        if (best.compare_exchange_weak(cur, len)) {
                            improved = true;
                            break;
                        }
                    }
                    if (improved && witness) {
                        std::vector<int32_t> left{u}, right{v};
                        for (int32_t x = u; parent[x] >= 0; x = parent[x]) left.push_back(parent[x]);
                        for (int32_t x = v; parent[x] >= 0; x = parent[x]) right.push_back(parent[x]);
                        // both branches end at the root; stitch, dropping the
                        // duplicate root from the right branch
                        std::reverse(left.begin(), left.end());
                        best_witness = left;
                        for (std::size_t i = 0; i + 1 < right.size(); ++i)
                            best_witness.push_back(right[i]);
                    }
                }
            }
        }
    });
    uint64_t b = best.load();
    if (b >= cutoff) return std::nullopt;
    if (witness) *witness = best_witness;
    return b;
}

std::optional<uint64_t> fs_girth(const FsContext& ctx, const ExplorerOptions& opts) {
    std::optional<uint64_t> best;
    for_each_component(ctx, opts, [&](const MaterializedComponent& comp) {
        auto g = component_girth(comp, best ? *best : UINT64_MAX, nullptr, opts.threads);
        if (g && (!best || *g < *best)) best = g;
    });
    return best;
}

bool is_connected_fs(const FsContext& ctx, const ExplorerOptions& opts) {
    check_budget(ctx, opts);
    auto comp = component_of(ctx, identity_configuration(ctx.n()), opts);
    return static_cast<uint64_t>(comp.size()) == factorial(ctx.n());
}

ExploreReport explore(const FsContext& ctx, const ExplorerOptions& opts, bool with_diameters) {
    ExploreReport report;
    uint64_t total = factorial(ctx.n());
    uint64_t seen = 0;
    for_each_component(ctx, opts, [&](const MaterializedComponent& comp) {
        ComponentReport cr;
        cr.size = comp.verts.size();
        cr.diameter = with_diameters ? diameter_of(comp, opts.threads) : 0;
        cr.is_cycle = is_cycle_component(comp);
        seen += cr.size;
        report.components.push_back(cr);
        auto g = component_girth(comp, report.girth ? *report.girth : UINT64_MAX, nullptr,
                                 opts.threads);
        if (g && (!report.girth || *g < *report.girth)) report.girth = g;
    });
    report.connected = report.components.size() == 1 && seen == total;
    return report;
}

std::string explore_report_json(const ExploreReport& report) {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& c : report.components) {
        nlohmann::json cj;
        cj["size"] = c.size;
        cj["diameter"] = c.diameter;
        cj["is_cycle"] = c.is_cycle;
        j["components"].push_back(cj);
    }
    if (report.girth)
        j["girth"] = *report.girth;
    else
        j["girth"] = nullptr;
    j["connected"] = report.connected;
    return j.dump();
}

}  // namespace fsg
