#include "fsgraph/markov.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace fsg {

uint64_t split_seed(uint64_t seed, uint64_t index) {
    // splitmix64 over seed + odd-stride index
    uint64_t z = seed + index * 0x9e3779b97f4a7c15ull + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

ChainState step(const ChainState& state) {
    ChainState next = state;
    ++next.step_count;
    auto pairs = friendly_edges(state.ctx, state.current);
    if (pairs.empty()) return next;  // frozen: full self-loop
    std::mt19937_64 rng(split_seed(state.rng_seed, state.step_count));
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    auto [a, b] = pairs[pick(rng)];
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 1) std::swap(next.current.map[a], next.current.map[b]);
    return next;
}

TransitionMatrix transition_matrix(const MaterializedComponent& comp,
                                   const MarkovBudget& budget) {
    auto n = static_cast<std::size_t>(comp.size());
    if (n > budget.max_states) {
        std::ostringstream os;
        os << "transition_matrix: component size " << n << " exceeds dense budget "
           << budget.max_states;
        throw budget_error(os.str());
    }
    TransitionMatrix m;
    m.size = comp.size();
    m.p.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& nb = comp.adj[i];
        if (nb.empty()) {
            m.p[i * n + i] = 1.0;
            continue;
        }
        m.p[i * n + i] = 0.5;
        double w = 0.5 / static_cast<double>(nb.size());
        for (int32_t j : nb) m.p[i * n + j] += w;
    }
    return m;
}

namespace {

std::vector<double> multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
    auto n = static_cast<std::size_t>(a.size);
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            double v = a.p[i * n + k];
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += v * b.p[k * n + j];
        }
    return out;
}

TransitionMatrix power(const TransitionMatrix& p, uint64_t t) {
    auto n = static_cast<std::size_t>(p.size);
    TransitionMatrix acc;
    acc.size = p.size;
    acc.p.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) acc.p[i * n + i] = 1.0;
    TransitionMatrix base = p;
    while (t > 0) {
        if (t & 1) acc.p = multiply(acc, base);
        t >>= 1;
        if (t > 0) base.p = multiply(base, base);
    }
    return acc;
}

double max_row_tv(const TransitionMatrix& pt, const std::vector<double>& pi) {
    auto n = static_cast<std::size_t>(pt.size);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double tv = 0.0;
        for (std::size_t j = 0; j < n; ++j) tv += std::abs(pt.p[i * n + j] - pi[j]);
        worst = std::max(worst, tv / 2.0);
    }
    return worst;
}

}  // namespace

std::vector<double> stationary_distribution(const TransitionMatrix& p, double tol) {
    auto n = static_cast<std::size_t>(p.size);
    std::vector<double> pi(n, 1.0 / static_cast<double>(n)), next(n);
    for (int iter = 0; iter < 1'000'000; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double v = pi[i];
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) next[j] += v * p.p[i * n + j];
        }
        double delta = 0.0;
        for (std::size_t j = 0; j < n; ++j) delta += std::abs(next[j] - pi[j]);
        pi.swap(next);
        if (delta < tol) break;
    }
    return pi;
}

double tv_distance_at(const TransitionMatrix& p, uint64_t t, const std::vector<double>& pi) {
    return max_row_tv(power(p, t), pi);
}

uint64_t mixing_estimate(const TransitionMatrix& p, double epsilon) {
    auto pi = stationary_distribution(p);
    if (max_row_tv(p, pi) <= epsilon) {
        // t=1 may already mix; t=0 counts only when the matrix is trivial
        TransitionMatrix identity;
        identity.size = p.size;
        auto n = static_cast<std::size_t>(p.size);
        identity.p.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) identity.p[i * n + i] = 1.0;
        return max_row_tv(identity, pi) <= epsilon ? 0 : 1;
    }
    // bracket by doubling, then binary search on monotone TV
    uint64_t lo = 1, hi = 2;
    while (tv_distance_at(p, hi, pi) > epsilon) {
        lo = hi;
        hi *= 2;
        if (hi > (1ull << 40)) throw budget_error("mixing_estimate: chain failed to mix");
    }
    while (lo + 1 < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (tv_distance_at(p, mid, pi) <= epsilon)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace fsg
