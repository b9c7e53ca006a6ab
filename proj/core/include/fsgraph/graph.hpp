#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsgraph/errors.hpp"

namespace fsg {

using Edge = std::pair<int, int>;  // normalized u < v

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;           // sorted, normalized
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
    std::vector<bool> adj_matrix_;      // n*n lookup
};

enum class Family { path, cycle, star, complete, complete_bipartite };

// Named families with the 0-based edge sets: path {i,i+1}, cycle adds the
// wraparound {0,n-1}, star = K_{1,n-1} centered at 0.
SimpleGraph make_named(Family family, const std::vector<int>& params);
SimpleGraph make_named(Family family, int n);
std::optional<Family> family_from_string(const std::string& name);

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices);

std::vector<std::vector<int>> components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool has_cut_vertex(const SimpleGraph& g);
bool is_biconnected(const SimpleGraph& g);
bool is_forest(const SimpleGraph& g);

// Shortest cycle length, nullopt for forests. BFS from every vertex; for a
// disconnected graph this is the min over components.
std::optional<int> girth(const SimpleGraph& g);

// One cycle (as a closed vertex list, last edge wraps to front) per non-tree
// edge of a BFS spanning forest.
std::vector<std::vector<int>> fundamental_cycles(const SimpleGraph& g);

struct SubgraphBudget {
    int max_vertices = 12;
    std::size_t max_cycles = 1'000'000;
};

// All simple cycles (vertex lists), grouped nothing; throws budget_error when
// the graph exceeds the vertex budget or the cycle count explodes.
std::vector<std::vector<int>> all_simple_cycles(const SimpleGraph& g,
                                                const SubgraphBudget& budget = {});

// Two cycles joined by a (possibly trivial) path with pairwise disjoint edge
// sets. path is a single vertex when the cycles share exactly one vertex.
struct BarbellDecomposition {
    std::vector<int> cycle1;
    std::vector<int> cycle2;
    std::vector<int> path;  // endpoints in the cycles; singleton for shared vertex
};

// Base cycle plus an ear: a path with distinct endpoints on the cycle,
// internally disjoint from it.
struct ThetaWitness {
    std::vector<int> base_cycle;
    std::vector<int> ear;  // ear[0], ear.back() on base_cycle
};

bool validate_barbell(const SimpleGraph& g, const BarbellDecomposition& b);
bool validate_theta(const SimpleGraph& g, const ThetaWitness& t);

// Enumerates one barbell per admissible cycle pair: cycles sharing exactly one
// vertex give a trivial path; vertex-disjoint cycles are joined by a shortest
// connecting path with inner vertices avoiding both.
std::vector<BarbellDecomposition> find_barbells(const SimpleGraph& g,
                                                const SubgraphBudget& budget = {});

// One theta per cycle pair sharing at least two vertices, built by walking the
// second cycle until it leaves and re-enters the first.
std::vector<ThetaWitness> find_thetas(const SimpleGraph& g,
                                      const SubgraphBudget& budget = {});

}  // namespace fsg
