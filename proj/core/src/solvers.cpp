#include "fsgraph/solvers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace fsg {

InversionReport inversions(const Configuration& sigma, const Configuration& tau) {
    if (sigma.size() != tau.size()) throw input_error("inversions: length mismatch");
    auto si = sigma.inverse(), ti = tau.inverse();
    InversionReport report;
    int n = sigma.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool s_before = si[i] < si[j];
            bool t_before = ti[i] < ti[j];
            if (s_before != t_before) report.pairs.push_back({i, j});
        }
    report.count = static_cast<int>(report.pairs.size());
    return report;
}

SwapSequence path_sort(const SimpleGraph& y, const Configuration& sigma,
                       const Configuration& tau) {
    int n = y.n();
    if (sigma.size() != n || tau.size() != n) throw input_error("path_sort: size mismatch");
    SimpleGraph co = complement(y);
    if (!(orientation_from(sigma, co) == orientation_from(tau, co)))
        throw input_error("path_sort: sigma and tau lie in different components "
                          "(complement orientations differ)");
    SwapSequence seq;
    seq.start = sigma;
    Configuration cur = sigma;
    for (int pos = 0; pos < n; ++pos) {
        int at = pos;
        while (cur.map[at] != tau.map[pos]) ++at;
        for (int k = at; k > pos; --k) {
            if (!y.has_edge(cur.map[k - 1], cur.map[k])) {
                std::ostringstream os;
                os << "path_sort: proposed swap at position " << k - 1 << " is unfriendly";
                throw input_error(os.str());  // cannot happen for same-component inputs
            }
            std::swap(cur.map[k - 1], cur.map[k]);
            seq.swaps.push_back({k - 1, k});
        }
    }
    return seq;
}

namespace {

std::vector<int> shortest_path(const SimpleGraph& g, int from, int to) {
    std::vector<int> parent(g.n(), -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int v : g.neighbors(u))
            if (parent[v] == -2) {
                parent[v] = u;
                queue.push_back(v);
            }
    }
    if (parent[to] == -2) return {};
    std::vector<int> path;
    for (int x = to; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

SwapSequence token_swap_complete(const SimpleGraph& x, const Configuration& sigma,
                                 const Configuration& tau) {
    int n = x.n();
    if (sigma.size() != n || tau.size() != n)
        throw input_error("token_swap_complete: size mismatch");
    SwapSequence seq;
    seq.start = sigma;
    Configuration cur = sigma;
    for (int i = 0; i < n; ++i) {
        if (cur.map[i] == tau.map[i]) continue;
        int j = 0;
        while (cur.map[j] != tau.map[i]) ++j;
        auto path = shortest_path(x, j, i);
        if (path.empty()) {
            std::ostringstream os;
            os << "token_swap_complete: vertices " << j << " and " << i
               << " lie in different components of X";
            throw input_error(os.str());
        }
        // carry tau(i) from j to i, then walk the displaced token back
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            seq.swaps.push_back({path[k], path[k + 1]});
            std::swap(cur.map[path[k]], cur.map[path[k + 1]]);
        }
        for (std::size_t k = path.size() - 1; k >= 2; --k) {
            seq.swaps.push_back({path[k - 1], path[k - 2]});
            std::swap(cur.map[path[k - 1]], cur.map[path[k - 2]]);
        }
    }
    return seq;
}

namespace {

// Orientation of one complement component, represented by the component's
// vertex list plus flip programs. Progress through: main flips (reaching the
// target orientation), then periodic idle cycles that return to the target
// every |component| flips.
struct ComponentSchedule {
    std::vector<int> vertices;          // component of complement(Y)
    std::vector<int> main_flips;        // vertex per flip
    std::vector<int> idle_cycle;        // period |vertices|
    std::size_t main_pos = 0;
    std::size_t idle_pos = 0;           // idle offset mod |vertices|

    bool main_done() const { return main_pos >= main_flips.size(); }
    int next_flip() {
        if (!main_done()) return main_flips[main_pos++];
        int v = idle_cycle[idle_pos % idle_cycle.size()];
        ++idle_pos;
        return v;
    }
    std::size_t idle_offset() const { return idle_pos % idle_cycle.size(); }
};

// Inflip (or outflip) sequence between two flip-equivalent orientations of an
// induced component, found by BFS. Vertices are in base-graph labels.
std::vector<int> flip_program(const SimpleGraph& co, const std::vector<int>& comp_verts,
                              const AcyclicOrientation& from, const AcyclicOrientation& to,
                              bool use_inflips) {
    SimpleGraph sub = induced_subgraph(co, comp_verts);
    auto restrict = [&](const AcyclicOrientation& alpha) {
        std::vector<int> index(co.n(), -1);
        for (std::size_t i = 0; i < comp_verts.size(); ++i) index[comp_verts[i]] = static_cast<int>(i);
        std::vector<int> toward;
        for (auto [u, v] : sub.edges()) {
            int gu = comp_verts[u], gv = comp_verts[v];
            toward.push_back(alpha.directed(gu, gv) ? v : u);
        }
        return AcyclicOrientation(sub, std::move(toward));
    };
    AcyclicOrientation a = restrict(from), b = restrict(to);
    if (a == b) return {};
    std::map<std::vector<int>, std::pair<std::vector<int>, int>> prev;
    std::deque<AcyclicOrientation> queue{a};
    prev[a.toward()] = {{}, -1};
    while (!queue.empty()) {
        AcyclicOrientation cur = queue.front();
        queue.pop_front();
        auto candidates = use_inflips ? cur.sources() : cur.sinks();
        for (int v : candidates) {
            AcyclicOrientation next = use_inflips ? inflip(cur, v) : outflip(cur, v);
            if (prev.count(next.toward())) continue;
            prev[next.toward()] = {cur.toward(), v};
            if (next == b) {
                std::vector<int> seq;
                std::vector<int> at = next.toward();
                while (true) {
                    auto& [parent, vertex] = prev.at(at);
                    if (vertex < 0) break;
                    seq.push_back(comp_verts[vertex]);
                    at = parent;
                }
                std::reverse(seq.begin(), seq.end());
                return seq;
            }
            queue.push_back(next);
        }
    }
    throw input_error("cycle_route: component orientations are not flip equivalent "
                      "(different double-flip classes)");
}

// Periodic flip cycle at a target orientation: flip the vertices of one of
// its linear extensions in order (front first for inflips, back first for
// outflips); after |comp| flips the orientation returns to the target.
std::vector<int> idle_cycle_for(const SimpleGraph& co, const std::vector<int>& comp_verts,
                                const AcyclicOrientation& target, bool use_inflips) {
    SimpleGraph sub = induced_subgraph(co, comp_verts);
    std::vector<int> toward;
    for (auto [u, v] : sub.edges())
        toward.push_back(target.directed(comp_verts[u], comp_verts[v]) ? v : u);
    AcyclicOrientation t(sub, std::move(toward));
    auto exts = linear_extensions(t);
    if (exts.empty()) throw input_error("acyclic orientation without linear extension");
    const auto& ext = exts.front();
    std::vector<int> cycle;
    cycle.reserve(comp_verts.size());
    for (int i = 0; i < ext.size(); ++i) {
        int local = use_inflips ? ext.map[i] : ext.map[ext.size() - 1 - i];
        cycle.push_back(comp_verts[local]);
    }
    return cycle;
}

// Extended gcd over a list: g = gcd(values), coeffs with sum coeffs[i]*values[i] = g.
int64_t extended_gcd_list(const std::vector<int64_t>& values, std::vector<int64_t>& coeffs) {
    coeffs.assign(values.size(), 0);
    int64_t g = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (g == 0) {
            g = values[i];
            coeffs[i] = 1;
            continue;
        }
        // extended euclid on (g, values[i])
        int64_t old_r = g, r = values[i];
        int64_t old_s = 1, s = 0;
        while (r != 0) {
            int64_t q = old_r / r;
            int64_t next_r = old_r - q * r;
            old_r = r;
            r = next_r;
            int64_t next_s = old_s - q * s;
            old_s = s;
            s = next_s;
        }
        // old_r = gcd, old_s * g + t * values[i] = old_r
        int64_t t = (old_r - old_s * g) / values[i];
        for (std::size_t j = 0; j < i; ++j) coeffs[j] *= old_s;
        coeffs[i] = t;
        g = old_r;
    }
    return g;
}

}  // namespace

SwapSequence cycle_route(const SimpleGraph& y, const Configuration& sigma,
                         const Configuration& tau) {
    int n = y.n();
    if (n < 3) throw input_error("cycle_route requires n >= 3");
    if (sigma.size() != n || tau.size() != n) throw input_error("cycle_route: size mismatch");
    SimpleGraph x = make_named(Family::cycle, n);
    SimpleGraph co = complement(y);
    auto parts = components(co);
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    uint64_t g = 0;
    for (const auto& p : parts) g = std::gcd(g, static_cast<uint64_t>(p.size()));
    if (g != 1) {
        std::ostringstream os;
        os << "cycle_route: gcd of complement component sizes is " << g << ", not 1";
        throw input_error(os.str());
    }
    std::size_t r = parts.size();

    AcyclicOrientation alpha = orientation_from(sigma, co);
    AcyclicOrientation alpha_target = orientation_from(tau, co);

    // Per-component schedules; flip_program throws when a component pair is
    // not flip equivalent, which certifies different double-flip classes.
    std::vector<ComponentSchedule> sched(r);
    for (std::size_t i = 0; i < r; ++i) {
        sched[i].vertices = parts[i];
        bool use_inflips = (i == r - 1);  // inflips on the largest component
        sched[i].main_flips = flip_program(co, parts[i], alpha, alpha_target, use_inflips);
        sched[i].idle_cycle = idle_cycle_for(co, parts[i], alpha_target, use_inflips);
    }

    // Double-flip list: each step pairs an inflip source from the last
    // component with an outflip sink from one of the others.
    std::vector<std::pair<int, int>> double_flips;  // (source, sink)
    auto& last = sched[r - 1];

    // Phase 1: drive components 1..r-1 through their main programs.
    for (std::size_t i = 0; i + 1 < r; ++i) {
        while (!sched[i].main_done()) {
            int w = sched[i].next_flip();
            int v = last.next_flip();
            double_flips.push_back({v, w});
        }
    }
    // Phase 2: finish the last component's main program against idle outflips
    // on the first component, then complete that component's idle cycle.
    while (!last.main_done() || sched[0].idle_offset() != 0) {
        if (r < 2) throw input_error("cycle_route: connected complement with gcd 1 impossible");
        int w = sched[0].next_flip();
        int v = last.next_flip();
        double_flips.push_back({v, w});
    }

    // Phase 3 (Bezout): cancel the last component's idle offset with whole
    // idle rounds on the small components.
    int64_t nr = static_cast<int64_t>(last.idle_cycle.size());
    int64_t c = static_cast<int64_t>(last.idle_offset());
    int64_t need = ((nr - c) % nr + nr) % nr;
    if (need != 0) {
        std::vector<int64_t> sizes;
        for (std::size_t i = 0; i + 1 < r; ++i) sizes.push_back(static_cast<int64_t>(parts[i].size()));
        std::vector<int64_t> coeffs;
        int64_t small_gcd = extended_gcd_list(sizes, coeffs);
        // solve small_gcd * t == need (mod nr); gcd(small_gcd, nr) = 1
        int64_t t = 0;
        for (int64_t k = 0; k < nr; ++k)
            if ((small_gcd % nr) * k % nr == need % nr) {
                t = k;
                break;
            }
        for (std::size_t i = 0; i + 1 < r; ++i) {
            int64_t d = ((coeffs[i] * t) % nr + nr) % nr;  // rounds of n_i idle outflips
            for (int64_t round = 0; round < d; ++round)
                for (std::size_t k = 0; k < parts[i].size(); ++k) {
                    int w = sched[i].next_flip();
                    int v = last.next_flip();
                    double_flips.push_back({v, w});
                }
        }
    }

    // Compile double-flips into swaps: bring the source to position 0 and the
    // sink to position n-1, then swap across the cut edge {0, n-1}.
    SwapSequence seq;
    seq.start = sigma;
    Configuration cur = sigma;
    auto position_of = [&](int y_vertex) {
        int p = 0;
        while (cur.map[p] != y_vertex) ++p;
        return p;
    };
    for (auto [v, w] : double_flips) {
        for (int p = position_of(v); p > 0; --p) {
            seq.swaps.push_back({p - 1, p});
            std::swap(cur.map[p - 1], cur.map[p]);
        }
        for (int p = position_of(w); p < n - 1; ++p) {
            seq.swaps.push_back({p, p + 1});
            std::swap(cur.map[p], cur.map[p + 1]);
        }
        seq.swaps.push_back({0, n - 1});
        std::swap(cur.map[0], cur.map[n - 1]);
    }

    // Path-sort tail inside the Path_n copy avoiding the cut edge.
    SwapSequence tail = path_sort(y, cur, tau);
    for (auto e : tail.swaps) seq.swaps.push_back(e);
    return seq;
}

std::vector<DoubleFlipStep> recover_double_flip_skeleton(const SimpleGraph& y,
                                                         const SwapSequence& seq,
                                                         bool validate) {
    int n = y.n();
    SimpleGraph co = complement(y);
    std::vector<DoubleFlipStep> skeleton;
    Configuration cur = seq.start;
    AcyclicOrientation alpha = orientation_from(cur, co);
    for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
        auto [a, b] = seq.swaps[i];
        bool cut = (std::min(a, b) == 0 && std::max(a, b) == n - 1);
        if (cut) {
            DoubleFlipStep step{i, cur.map[0], cur.map[n - 1]};
            if (validate) {
                alpha = double_flip(alpha, step.source, step.sink);  // throws if invalid
            }
            skeleton.push_back(step);
        }
        std::swap(cur.map[a], cur.map[b]);
        if (validate && !(orientation_from(cur, co) == alpha))
            throw input_error("skeleton: configuration left its linear-extension class");
    }
    if (validate && !(orientation_from(cur, co) == alpha))
        throw input_error("skeleton: final orientation mismatch");
    return skeleton;
}

}  // namespace fsg
