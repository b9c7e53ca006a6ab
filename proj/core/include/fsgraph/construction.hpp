#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "fsgraph/fs.hpp"

namespace fsg {

enum class Side { a, b };

// Named vertices and index sets for one layer of the construction.
//
// Each 16-cycle is stored in cyclic order with a fixed slot scheme:
//   cycle[0]  = path junction (v_a^l resp. v_b^l)
//   cycle[4]  = shared vertex with the next layer (inner vertex at l = L)
//   cycle[8]  = v^l, shared between the two cycles of the layer
//   cycle[12] = shared vertex with the previous layer (at l = 1, the start
//               vertex of the layer-1 knob)
// with three inner vertices between consecutive slots. Paths are stored
// junction first: path_a[0] = v_a^l with path_a[15] the leftmost vertex, and
// path_b[0] = v_b^l with path_b[14] the rightmost.
struct LayerNames {
    std::vector<int> cycle_a, cycle_b;  // 16 X-vertices each
    std::vector<int> path_a;            // 16 X-vertices
    std::vector<int> path_b;            // 15 X-vertices

    int knob_a = -1, knob_b = -1;       // Y-vertices kappa_a^l, kappa_b^l
    std::vector<int> leaves_a, leaves_b;  // 14 Y-vertices each
    std::vector<int> bip_a, bip_b;      // K_a^l, K_b^l; element 0 is the next
                                        // layer's knob when l < L

    int v_a() const { return cycle_a[0]; }
    int v_b() const { return cycle_b[0]; }
    int v_shared() const { return cycle_a[8]; }
    int v_a_next() const { return cycle_a[4]; }   // v_a^{l,l+1} when l < L
    int v_b_next() const { return cycle_b[4]; }
    int v_a_prev() const { return cycle_a[12]; }  // v_a^{l-1,l} when l > 1
    int v_b_prev() const { return cycle_b[12]; }
};

// The exponential-diameter witness: X_L, Y_L on 58L+2 vertices, the starting
// configuration, and per-layer name tables with membership masks.
struct LayeredConstruction {
    int L = 0;
    SimpleGraph X, Y;
    Configuration sigma_s;
    std::vector<uint16_t> sigma_s_pos;  // inverse of sigma_s
    std::vector<LayerNames> layers;     // layers[l-1] describes layer l

    // membership masks indexed [layer-1][vertex]
    std::vector<std::vector<bool>> in_cycle_a, in_cycle_b, in_path_a, in_path_b;
    std::vector<std::vector<bool>> in_layer;     // X^l membership
    std::vector<std::vector<bool>> is_leaf_a, is_leaf_b, in_bip;  // Y-vertex masks

    // per X-vertex: index within its path (paths are vertex-disjoint), -1 off
    std::vector<int> path_slot;

    FsContext context() const { return FsContext(X, Y); }
};

LayeredConstruction build_construction(int L);

// Def-4.3 boundary of a cycle: the defined subset of the four shared vertices.
std::vector<int> boundary(const LayeredConstruction& lc, Side side, int layer);

// 25^(L-1) as a 64-bit value; throws input_error when L pushes it past 2^64.
uint64_t lower_bound_for(int L);

// X_L, Y_L padded with isolated vertices up to n, the padded starting
// configuration placing isolated Y-vertices on isolated X-vertices in order.
struct PaddedConstruction {
    SimpleGraph X, Y;
    Configuration sigma;
};
PaddedConstruction padded(int L, int n);

// --- invariant checkers -----------------------------------------------------

// All star leaves of each layer lie on the corresponding 16-cycle.
bool check_rule_of_two(const LayeredConstruction& lc, const Configuration& sigma);

struct LayerIndependenceReport {
    bool knobs_layer1 = false;   // layer-1 knobs on their own half-layers
    bool knobs_adjacent = false; // layer-l knobs on X^{l-1} or X^l
    bool bip_on_layer = false;   // non-knob K^l elements on X^l
    bool at_most_one_off_paths = false;

    bool all() const {
        return knobs_layer1 && knobs_adjacent && bip_on_layer && at_most_one_off_paths;
    }
};
LayerIndependenceReport check_layer_independence(const LayeredConstruction& lc,
                                                 const Configuration& sigma);

// The two path-image implications per layer.
bool check_path_images(const LayeredConstruction& lc, const Configuration& sigma);

// The left relation between two same-partite-set elements; undefined unless
// both preimages lie on the layer's paths.
std::optional<bool> is_left(const LayeredConstruction& lc, const Configuration& sigma,
                            int layer, int mu1, int mu2);

// Left relation of every same-partite pair matches its sigma_s relation,
// whenever defined.
bool check_order_invariance(const LayeredConstruction& lc, const Configuration& sigma);

// Knob-departure implications: a next-layer knob off the layer's paths forces
// the opposite partite set into P_a^l.
bool check_knob_extract(const LayeredConstruction& lc, const Configuration& sigma);

// All five checkers evaluated at once from a configuration's word and its
// inverse; used when replaying long programs with incrementally maintained
// positions.
struct InvariantReport {
    bool rule_of_two = false;
    bool layer_independence = false;
    bool path_images = false;
    bool order_invariance = false;
    bool knob_extract = false;

    bool all() const {
        return rule_of_two && layer_independence && path_images && order_invariance &&
               knob_extract;
    }
};
InvariantReport check_invariants_pos(const LayeredConstruction& lc,
                                     const std::vector<uint16_t>& cur,
                                     const std::vector<uint16_t>& pos);

// Def-4.12 l-extraction test.
bool is_extraction(const LayeredConstruction& lc, const Configuration& sigma,
                   const Configuration& tau, int layer);

// Greedy longest chain of nested extraction checkpoints within the sequence.
int count_extraction_chain(const LayeredConstruction& lc, const SwapSequence& seq, int layer);

// --- program generation -----------------------------------------------------

struct RotationSpan {
    int layer = 0;
    Side side = Side::a;
    int companion = -1;          // Y-vertex riding the rotation
    std::size_t begin = 0, end = 0;  // swap index range [begin, end)
};

struct ExtractionProgram {
    int level = 0;
    int eta = 0;
    SwapSequence program;
    std::vector<std::size_t> checkpoints;  // i_0 = 0, ..., i_eta (swap counts)
    std::vector<RotationSpan> rotations;   // contiguous rotation pieces
};

struct ProgramBudget {
    std::size_t max_swaps = 10'000'000;
};

// A knob rotation of 16*loops swaps: the knob circles its cycle, cyclically
// shifting the 14 leaves plus the companion. The companion must currently sit
// on the cycle with the knob and leaves (occupancy is checked). direction +1
// moves the companion toward increasing cycle slots, -1 the other way.
SwapSequence knob_rotation(const LayeredConstruction& lc, const Configuration& sigma,
                           Side side, int layer, int companion, int loops, int direction);

// The layer-1 interchange program: eta extraction segments of 15 six-step
// iterations each. Requires L = 1 (use l_extraction_program for layer 1 of a
// taller construction).
ExtractionProgram one_layer_extraction(const LayeredConstruction& lc, int eta,
                                       const ProgramBudget& budget = {});

// The level-l program with eta checkpoints; checkpoints are l-extractions of
// their predecessors. Grows like 31^(l-1).
ExtractionProgram l_extraction_program(const LayeredConstruction& lc, int level, int eta,
                                       const ProgramBudget& budget = {});

// Streaming variant: swaps are handed to the sink instead of stored; returns
// the checkpoint indices.
std::vector<std::size_t> stream_l_extraction_program(
    const LayeredConstruction& lc, int level, int eta,
    const std::function<void(std::size_t, Edge)>& sink);

// sigma_f: endpoint of l_extraction_program(L, L, 1).
Configuration sigma_f(const LayeredConstruction& lc, const ProgramBudget& budget = {});

}  // namespace fsg
