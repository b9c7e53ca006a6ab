#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsgraph/explorer.hpp"
#include "fsgraph/fs.hpp"

namespace fsg {

// The portion of X visited by the star center along a swap sequence.
struct PathInducedSubgraph {
    std::vector<int> vertices;  // positions that ever held the center
    std::vector<Edge> edges;    // edges ever swapped
};

struct WalkStatistics {
    std::vector<uint64_t> visits;      // arrivals of the center, per X-vertex
    std::vector<uint64_t> traversals;  // per X-edge, aligned with X.edges()
    std::vector<uint64_t> leaf_swaps;  // per Y-leaf (index 1..n-1), slot 0 unused
    uint64_t length = 0;
};

// Star center is Y-vertex 0 throughout this module (make_named star layout).
constexpr int kStarCenter = 0;

// Requires Y to be a star; seq must replay validly.
PathInducedSubgraph path_induced(const FsContext& ctx, const SwapSequence& seq);
WalkStatistics walk_stats(const FsContext& ctx, const SwapSequence& seq);

// The canonical FS(X, Star_n) configuration with the center on `center_at`
// and the leaves in increasing order on the remaining positions.
Configuration star_start(int n, int center_at);

// Closed walk of length k(k-1): the center loops the k-cycle k-1 times,
// restoring every token. cycle is a vertex list in cyclic order.
SwapSequence cycle_walk(const SimpleGraph& x, const std::vector<int>& cycle, int start);

// Closed walk over a barbell subgraph of exactly the target length for its
// path-length class, found by depth-first search with exact per-vertex visit
// budgets (junctions 4, inner path vertices 4, other cycle vertices 2).
// Throws budget_error when the search exhausts without a walk.
SwapSequence barbell_walk(const SimpleGraph& x, const BarbellDecomposition& b);

// Formula length for a barbell class: shared vertex 2*n0+2; path with d
// inner vertices 2(|C1|+|C2|+2d+2).
uint64_t barbell_formula_length(const BarbellDecomposition& b);

enum class SubgraphShape { cycle, barbell, theta, other };
std::string to_string(SubgraphShape s);

// Degree-census classification of a path-induced subgraph.
SubgraphShape classify_subgraph(const SimpleGraph& g);

struct ProbeCandidate {
    std::string type;  // "cycle" | "barbell" | "theta"
    std::vector<int> subgraph_vertices;
    std::optional<uint64_t> formula_len;  // absent for theta (no formula)
};

struct ConjectureProbeReport {
    uint64_t oracle_girth = 0;
    std::vector<ProbeCandidate> candidates;
    std::optional<uint64_t> candidate_min;
    SubgraphShape witness_shape = SubgraphShape::other;
    bool agree = false;
};

// Compares the BFS girth oracle of FS(X, Star_n) against the notes' cycle and
// barbell formulas over all subgraphs, and classifies the path-induced
// subgraph of one girth-achieving cycle.
ConjectureProbeReport conjecture_probe(const SimpleGraph& x, const ExplorerOptions& opts = {},
                                       const SubgraphBudget& budget = {});
std::string probe_report_json(const ConjectureProbeReport& report);

}  // namespace fsg
