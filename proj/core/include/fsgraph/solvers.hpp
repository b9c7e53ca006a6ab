#pragma once

#include <utility>
#include <vector>

#include "fsgraph/fs.hpp"
#include "fsgraph/orientations.hpp"

namespace fsg {

struct InversionReport {
    int count = 0;
    std::vector<std::pair<int, int>> pairs;  // (i,j), i<j, preimage order differs
};

// Ordered pairs whose preimage order under sigma is opposite that under tau.
InversionReport inversions(const Configuration& sigma, const Configuration& tau);

// Bubble-sort variant on X = Path_n: fixes tau-positions left to right. The
// result has length exactly inversions(sigma,tau).count and each swap
// decrements the inversion count by one. Throws input_error when sigma and
// tau induce different orientations of complement(Y) (different components).
SwapSequence path_sort(const SimpleGraph& y, const Configuration& sigma,
                       const Configuration& tau);

// Token swapping with Y = K_n: swaps tau(i) onto i along a shortest simple
// path, then the displaced vertex back. Length <= 2n^2 - 5n + 3.
SwapSequence token_swap_complete(const SimpleGraph& x, const Configuration& sigma,
                                 const Configuration& tau);

// X = Cycle_n route via a double-flip schedule (outflips on the small
// complement components, inflips on the largest, then a Bezout offset
// correction), compiled into swaps, with a path-sort tail avoiding the cut
// edge {0, n-1}. Length <= 4n^3 + |E(Y)|. Requires gcd of complement(Y)
// component sizes to be 1 and sigma, tau in one double-flip class.
SwapSequence cycle_route(const SimpleGraph& y, const Configuration& sigma,
                         const Configuration& tau);

struct DoubleFlipStep {
    std::size_t swap_index;  // index of the cut-edge swap in the sequence
    int source;              // inflipped vertex (at position 0 before the swap)
    int sink;                // outflipped vertex (at position n-1 before the swap)
};

// Recovers the double-flip skeleton of a cycle sequence by logging swaps
// across the cut edge {0, n-1}; validates each step as a double-flip on the
// complement orientation and that the chain ends at tau's orientation.
std::vector<DoubleFlipStep> recover_double_flip_skeleton(const SimpleGraph& y,
                                                         const SwapSequence& seq,
                                                         bool validate = true);

}  // namespace fsg
