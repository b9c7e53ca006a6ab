#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsgraph/configuration.hpp"
#include "fsgraph/graph.hpp"

namespace fsg {

// The FS(X,Y) adjacency oracle. X and Y must have the same vertex count.
struct FsContext {
    SimpleGraph X;
    SimpleGraph Y;

    FsContext(SimpleGraph x, SimpleGraph y) : X(std::move(x)), Y(std::move(y)) {
        if (X.n() != Y.n()) throw input_error("FS requires |V(X)| = |V(Y)|");
    }
    int n() const { return X.n(); }

    bool friendly(const Configuration& c, int a, int b) const {
        return X.has_edge(a, b) && Y.has_edge(c.map[a], c.map[b]);
    }
};

// Transposes c on the X-edge {a,b}; rejects non-edges of X and unfriendly
// pairs, naming which condition failed.
Configuration apply_swap(const FsContext& ctx, const Configuration& c, int a, int b);

// Exactly the friendly-swap neighbors, in the order of X's sorted edge list.
std::vector<Configuration> neighbors(const FsContext& ctx, const Configuration& c);

// Count of friendly X-edges at c (the FS degree).
int friendly_degree(const FsContext& ctx, const Configuration& c);
std::vector<Edge> friendly_edges(const FsContext& ctx, const Configuration& c);

// |E(X)| * |E(Y)| * (n-2)!; throws input_error when n puts (n-2)! or the
// product beyond 64 bits.
uint64_t fs_edge_count(const FsContext& ctx);

// A path in FS(X,Y): a start plus X-edges that must be friendly when applied
// in order.
struct SwapSequence {
    Configuration start;
    std::vector<Edge> swaps;

    std::size_t length() const { return swaps.size(); }
};

// Replays the sequence, returning the endpoint; on the first invalid swap
// throws input_error naming the index and the reason.
Configuration validate_sequence(const FsContext& ctx, const SwapSequence& seq);

std::string swap_sequence_json(const SwapSequence& seq);
SwapSequence swap_sequence_from_json(const std::string& json);

}  // namespace fsg
