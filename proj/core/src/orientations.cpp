#include "fsgraph/orientations.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fsg {

namespace {

bool orientation_is_acyclic(const SimpleGraph& g, const std::vector<int>& toward) {
    // Kahn's algorithm on the directed graph
    int n = g.n();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        int head = toward[i];
        int tail = head == v ? u : v;
        out[tail].push_back(head);
        ++indeg[head];
    }
    std::deque<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        ++removed;
        for (int w : out[u])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return removed == n;
}

}  // namespace

AcyclicOrientation::AcyclicOrientation(SimpleGraph base, std::vector<int> toward)
    : base_(std::move(base)), toward_(std::move(toward)) {
    if (toward_.size() != base_.edges().size())
        throw input_error("orientation: one head per base edge required");
    for (std::size_t i = 0; i < toward_.size(); ++i) {
        auto [u, v] = base_.edges()[i];
        if (toward_[i] != u && toward_[i] != v)
            throw input_error("orientation: head must be an endpoint of its edge");
    }
    if (!orientation_is_acyclic(base_, toward_))
        throw input_error("orientation has a directed cycle");
}

bool AcyclicOrientation::directed(int tail, int head) const {
    auto [u, v] = std::minmax(tail, head);
    const auto& es = base_.edges();
    auto it = std::lower_bound(es.begin(), es.end(), Edge{u, v});
    if (it == es.end() || *it != Edge{u, v}) return false;
    return toward_[it - es.begin()] == head;
}

bool AcyclicOrientation::is_source(int v) const {
    for (std::size_t i = 0; i < toward_.size(); ++i) {
        auto [a, b] = base_.edges()[i];
        if ((a == v || b == v) && toward_[i] == v) return false;
    }
    return true;
}

bool AcyclicOrientation::is_sink(int v) const {
    for (std::size_t i = 0; i < toward_.size(); ++i) {
        auto [a, b] = base_.edges()[i];
        if ((a == v || b == v) && toward_[i] != v) return false;
    }
    return true;
}

std::vector<int> AcyclicOrientation::sources() const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v)
        if (is_source(v)) out.push_back(v);
    return out;
}

std::vector<int> AcyclicOrientation::sinks() const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v)
        if (is_sink(v)) out.push_back(v);
    return out;
}

AcyclicOrientation orientation_from(const Configuration& sigma, const SimpleGraph& g) {
    if (sigma.size() != g.n()) throw input_error("orientation_from: size mismatch");
    auto inv = sigma.inverse();
    std::vector<int> toward;
    toward.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) toward.push_back(inv[u] < inv[v] ? v : u);
    return AcyclicOrientation(g, std::move(toward));
}

std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const SimpleGraph& g) {
    std::size_t m = g.edges().size();
    if (m > 26) throw budget_error("too many edges to enumerate orientations");
    std::vector<AcyclicOrientation> out;
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<int> toward(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto [u, v] = g.edges()[i];
            toward[i] = (mask >> i) & 1 ? v : u;
        }
        if (orientation_is_acyclic(g, toward)) out.emplace_back(g, std::move(toward));
    }
    return out;
}

namespace {

// reach[u] contains v iff there is a directed path u -> v
std::vector<std::vector<bool>> reachability(const AcyclicOrientation& alpha) {
    int n = alpha.n();
    std::vector<std::vector<int>> out(n);
    for (std::size_t i = 0; i < alpha.toward().size(); ++i) {
        auto [u, v] = alpha.base().edges()[i];
        int head = alpha.toward()[i];
        out[head == v ? u : v].push_back(head);
    }
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : out[u])
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    queue.push_back(w);
                }
        }
    }
    return reach;
}

}  // namespace

std::vector<Configuration> linear_extensions(const AcyclicOrientation& alpha) {
    int n = alpha.n();
    if (n > 12) throw budget_error("linear extension enumeration beyond budget");
    // successive source removal enumerates all topological sorts
    std::vector<std::vector<int>> out(n);
    std::vector<int> indeg(n, 0);
    for (std::size_t i = 0; i < alpha.toward().size(); ++i) {
        auto [u, v] = alpha.base().edges()[i];
        int head = alpha.toward()[i];
        int tail = head == v ? u : v;
        out[tail].push_back(head);
        ++indeg[head];
    }
    std::vector<Configuration> result;
    std::vector<uint16_t> word;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(word.size()) == n) {
            result.emplace_back(word);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || indeg[v] != 0) continue;
            used[v] = true;
            for (int w : out[v]) --indeg[w];
            word.push_back(static_cast<uint16_t>(v));
            rec();
            word.pop_back();
            for (int w : out[v]) ++indeg[w];
            used[v] = false;
        }
    };
    rec();
    return result;
}

int comparable_pairs(const AcyclicOrientation& alpha) {
    auto reach = reachability(alpha);
    int count = 0;
    for (int i = 0; i < alpha.n(); ++i)
        for (int j = i + 1; j < alpha.n(); ++j)
            if (reach[i][j] || reach[j][i]) ++count;
    return count;
}

namespace {

AcyclicOrientation flip_at(const AcyclicOrientation& alpha, int v, bool into_sink) {
    if (v < 0 || v >= alpha.n()) throw input_error("flip: vertex out of range");
    if (into_sink && !alpha.is_source(v)) throw input_error("inflip requires a source");
    if (!into_sink && !alpha.is_sink(v)) throw input_error("outflip requires a sink");
    std::vector<int> toward = alpha.toward();
    for (std::size_t i = 0; i < toward.size(); ++i) {
        auto [a, b] = alpha.base().edges()[i];
        if (a == v || b == v) toward[i] = toward[i] == a ? b : a;
    }
    return AcyclicOrientation(alpha.base(), std::move(toward));
}

}  // namespace

AcyclicOrientation inflip(const AcyclicOrientation& alpha, int v) { return flip_at(alpha, v, true); }

AcyclicOrientation outflip(const AcyclicOrientation& alpha, int v) { return flip_at(alpha, v, false); }

AcyclicOrientation double_flip(const AcyclicOrientation& alpha, int v, int w) {
    if (v == w) throw input_error("double-flip requires distinct vertices");
    if (alpha.base().has_edge(v, w)) throw input_error("double-flip requires nonadjacent vertices");
    if (!alpha.is_source(v)) throw input_error("double-flip: v must be a source");
    if (!alpha.is_sink(w)) throw input_error("double-flip: w must be a sink");
    std::vector<int> toward = alpha.toward();
    for (std::size_t i = 0; i < toward.size(); ++i) {
        auto [a, b] = alpha.base().edges()[i];
        if (a == v || b == v || a == w || b == w) toward[i] = toward[i] == a ? b : a;
    }
    return AcyclicOrientation(alpha.base(), std::move(toward));
}

std::vector<int> cycle_signature(const AcyclicOrientation& alpha) {
    auto cycles = fundamental_cycles(alpha.base());
    std::vector<int> sig;
    sig.reserve(cycles.size());
    for (const auto& cyc : cycles) {
        int forward = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (alpha.directed(u, v)) ++forward;
        }
        sig.push_back(forward);
    }
    return sig;
}

FlipCertificate flip_equivalent(const AcyclicOrientation& alpha,
                                const AcyclicOrientation& alpha_prime) {
    if (!(alpha.base() == alpha_prime.base()))
        throw input_error("flip_equivalent requires the same base graph");
    FlipCertificate cert;
    if (cycle_signature(alpha) != cycle_signature(alpha_prime)) return cert;
    cert.equivalent = true;
    if (alpha == alpha_prime) return cert;
    // BFS over the inflip graph; the signature test already guarantees
    // reachability within C(n,2) inflips.
    std::map<std::vector<int>, std::pair<std::vector<int>, int>> prev;  // toward -> (parent, vertex)
    std::deque<AcyclicOrientation> queue{alpha};
    prev[alpha.toward()] = {{}, -1};
    while (!queue.empty()) {
        AcyclicOrientation cur = queue.front();
        queue.pop_front();
        for (int v : cur.sources()) {
            AcyclicOrientation next = inflip(cur, v);
            if (prev.count(next.toward())) continue;
            prev[next.toward()] = {cur.toward(), v};
            if (next == alpha_prime) {
                std::vector<int> seq;
                std::vector<int> at = next.toward();
                while (true) {
                    auto& [parent, vertex] = prev.at(at);
                    if (vertex < 0) break;
                    seq.push_back(vertex);
                    at = parent;
                }
                std::reverse(seq.begin(), seq.end());
                cert.inflip_vertices = std::move(seq);
                return cert;
            }
            queue.push_back(next);
        }
    }
    throw input_error("signatures matched but no inflip path found");  // unreachable
}

std::vector<std::vector<AcyclicOrientation>> double_flip_classes(const SimpleGraph& g) {
    auto all = enumerate_acyclic_orientations(g);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i].toward()] = static_cast<int>(i);
    std::vector<int> cls(all.size(), -1);
    std::vector<std::vector<AcyclicOrientation>> classes;
    for (std::size_t s = 0; s < all.size(); ++s) {
        if (cls[s] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.push_back({});
        std::deque<int> queue{static_cast<int>(s)};
        cls[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            classes[id].push_back(all[u]);
            auto sources = all[u].sources();
            auto sinks = all[u].sinks();
            for (int v : sources)
                for (int w : sinks) {
                    if (v == w || g.has_edge(v, w)) continue;
                    auto next = double_flip(all[u], v, w);
                    int j = index.at(next.toward());
                    if (cls[j] < 0) {
                        cls[j] = id;
                        queue.push_back(j);
                    }
                }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }
    return classes;
}

namespace {

template <typename Step>
AcyclicOrientation closure_minimum(const AcyclicOrientation& alpha, Step step) {
    std::set<std::vector<int>> seen{alpha.toward()};
    std::deque<AcyclicOrientation> queue{alpha};
    AcyclicOrientation best = alpha;
    while (!queue.empty()) {
        AcyclicOrientation cur = queue.front();
        queue.pop_front();
        if (cur < best) best = cur;
        step(cur, [&](AcyclicOrientation next) {
            if (seen.insert(next.toward()).second) queue.push_back(std::move(next));
        });
    }
    return best;
}

}  // namespace

AcyclicOrientation toric_class_id(const AcyclicOrientation& alpha) {
    return closure_minimum(alpha, [](const AcyclicOrientation& cur, auto push) {
        for (int v : cur.sources()) push(inflip(cur, v));
        for (int v : cur.sinks()) push(outflip(cur, v));
    });
}

AcyclicOrientation double_flip_class_id(const AcyclicOrientation& alpha) {
    return closure_minimum(alpha, [](const AcyclicOrientation& cur, auto push) {
        for (int v : cur.sources())
            for (int w : cur.sinks())
                if (v != w && !cur.base().has_edge(v, w)) push(double_flip(cur, v, w));
    });
}

bool cycle_connectivity_predicate(const SimpleGraph& y) {
    if (y.n() < 3) throw input_error("cycle_connectivity_predicate requires n >= 3");
    SimpleGraph co = complement(y);
    if (!is_forest(co)) return false;
    auto parts = components(co);
    uint64_t g = 0;
    for (const auto& part : parts) g = std::gcd(g, static_cast<uint64_t>(part.size()));
    return g == 1;
}

std::string orientation_json(const AcyclicOrientation& alpha) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < alpha.toward().size(); ++i) {
        auto [u, v] = alpha.base().edges()[i];
        int head = alpha.toward()[i];
        int tail = head == v ? u : v;
        j.push_back({tail, head});
    }
    return j.dump();
}

std::string class_report_json(const std::vector<std::vector<AcyclicOrientation>>& classes) {
    nlohmann::json j;
    j["class_count"] = classes.size();
    j["sizes"] = nlohmann::json::array();
    for (const auto& c : classes) j["sizes"].push_back(c.size());
    return j.dump();
}

}  // namespace fsg
