#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsgraph/explorer.hpp"
#include "fsgraph/fs.hpp"

namespace fsg {

// Lazy friends-and-strangers chain: pick a friendly adjacent pair uniformly,
// swap with probability 1/2; with no friendly pair the step is a self-loop.
// RNG algorithm: mt19937_64 seeded directly ("mt19937_64" in reports).
struct ChainState {
    FsContext ctx;
    Configuration current;
    uint64_t rng_seed = 0;
    uint64_t step_count = 0;

    ChainState(FsContext c, Configuration start, uint64_t seed)
        : ctx(std::move(c)), current(std::move(start)), rng_seed(seed) {}
};

// Advances one step; deterministic under a fixed seed (the generator state is
// derived from rng_seed and step_count, so states are value types).
ChainState step(const ChainState& state);

// Derives a child seed for independent streams (splitmix64 of seed, index).
uint64_t split_seed(uint64_t seed, uint64_t index);

// Dense row-stochastic matrix P over a materialized component:
// P[i][i] = 1/2 (all mass when the friendly degree is 0),
// P[i][j] = 1/(2 deg(i)) per neighbor j.
struct TransitionMatrix {
    int size = 0;
    std::vector<double> p;  // row-major

    double at(int i, int j) const { return p[static_cast<std::size_t>(i) * size + j]; }
};

struct MarkovBudget {
    std::size_t max_states = 5040;
};

TransitionMatrix transition_matrix(const MaterializedComponent& comp,
                                   const MarkovBudget& budget = {});

// Stationary vector by power iteration on the lazy chain.
std::vector<double> stationary_distribution(const TransitionMatrix& p, double tol = 1e-14);

// Max over rows of total-variation distance to the stationary vector at time t.
double tv_distance_at(const TransitionMatrix& p, uint64_t t, const std::vector<double>& pi);

// Smallest t with max-row TV distance <= epsilon, found by repeated squaring
// to bracket and then binary search.
uint64_t mixing_estimate(const TransitionMatrix& p, double epsilon);

}  // namespace fsg
