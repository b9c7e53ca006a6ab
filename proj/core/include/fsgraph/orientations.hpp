#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsgraph/configuration.hpp"
#include "fsgraph/graph.hpp"

namespace fsg {

// An acyclic orientation of `base`: toward[i] is the head of base.edges()[i].
class AcyclicOrientation {
public:
    AcyclicOrientation(SimpleGraph base, std::vector<int> toward);

    const SimpleGraph& base() const { return base_; }
    const std::vector<int>& toward() const { return toward_; }
    int n() const { return base_.n(); }

    // directed i -> j for the edge {i,j}?
    bool directed(int tail, int head) const;
    bool is_source(int v) const;  // isolated vertices qualify
    bool is_sink(int v) const;
    std::vector<int> sources() const;
    std::vector<int> sinks() const;

    bool operator==(const AcyclicOrientation& o) const { return toward_ == o.toward_; }
    bool operator<(const AcyclicOrientation& o) const { return toward_ < o.toward_; }

private:
    SimpleGraph base_;
    std::vector<int> toward_;
};

// Directs {i,j} from i to j iff sigma^-1(i) < sigma^-1(j); sigma is then a
// linear extension of the result.
AcyclicOrientation orientation_from(const Configuration& sigma, const SimpleGraph& g);

// All acyclic orientations (2^|E| filtered; desk scale only).
std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const SimpleGraph& g);

// All permutations compatible with the reachability poset of alpha.
std::vector<Configuration> linear_extensions(const AcyclicOrientation& alpha);

// Count of ordered pairs (i,j), i<j, comparable in the poset P_alpha.
int comparable_pairs(const AcyclicOrientation& alpha);

// Reverses all edges at a source (inflip) / sink (outflip).
AcyclicOrientation inflip(const AcyclicOrientation& alpha, int v);
AcyclicOrientation outflip(const AcyclicOrientation& alpha, int v);

// Simultaneous inflip of source v and outflip of sink w, v != w nonadjacent.
AcyclicOrientation double_flip(const AcyclicOrientation& alpha, int v, int w);

// Per fundamental cycle of the base, the count of edges directed with a fixed
// traversal. Flip-invariant; two orientations are flip equivalent iff their
// signatures agree.
std::vector<int> cycle_signature(const AcyclicOrientation& alpha);

struct FlipCertificate {
    bool equivalent = false;
    std::vector<int> inflip_vertices;  // replays alpha -> alpha_prime when equivalent
};

// Signature comparison plus, when equal, an explicit inflip sequence of
// length <= C(n,2) found by BFS over the inflip graph.
FlipCertificate flip_equivalent(const AcyclicOrientation& alpha,
                                const AcyclicOrientation& alpha_prime);

// Partition of Acyc(G) into double-flip closures; classes carry their
// lexicographically minimal representative first.
std::vector<std::vector<AcyclicOrientation>> double_flip_classes(const SimpleGraph& g);

// Canonical id: the lexicographically minimal orientation in the class.
AcyclicOrientation toric_class_id(const AcyclicOrientation& alpha);
AcyclicOrientation double_flip_class_id(const AcyclicOrientation& alpha);

// True iff complement(Y) is a forest whose component sizes have gcd 1
// (the FS(Cycle_n, Y) connectivity criterion). Requires n >= 3.
bool cycle_connectivity_predicate(const SimpleGraph& y);

std::string orientation_json(const AcyclicOrientation& alpha);
std::string class_report_json(const std::vector<std::vector<AcyclicOrientation>>& classes);

}  // namespace fsg
