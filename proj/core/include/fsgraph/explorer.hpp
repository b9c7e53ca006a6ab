#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsgraph/fs.hpp"

namespace fsg {

struct ExplorerOptions {
    int max_n = 10;       // refuse BFS beyond this vertex count
    int threads = 0;      // 0 = hardware concurrency
};

// A BFS-materialized connected component: vertices indexed 0..size-1 with an
// explicit adjacency list, index 0 being the seed.
struct MaterializedComponent {
    std::vector<Configuration> verts;
    std::vector<std::vector<int32_t>> adj;

    int size() const { return static_cast<int>(verts.size()); }
};

MaterializedComponent materialize_component(const FsContext& ctx, const Configuration& seed,
                                            const ExplorerOptions& opts = {});

// BFS closure of seed under friendly swaps.
std::vector<Configuration> component_of(const FsContext& ctx, const Configuration& seed,
                                        const ExplorerOptions& opts = {});

// BFS distance; nullopt when tau is unreachable from sigma.
std::optional<uint64_t> distance(const FsContext& ctx, const Configuration& sigma,
                                 const Configuration& tau, const ExplorerOptions& opts = {});

// Exact diameter of the component containing seed (BFS from every vertex).
uint64_t component_diameter(const FsContext& ctx, const Configuration& seed,
                            const ExplorerOptions& opts = {});
uint64_t diameter_of(const MaterializedComponent& comp, int threads = 0);

// Double-sweep BFS lower bound; quick estimate, not exact.
uint64_t diameter_lower_bound_two_sweep(const MaterializedComponent& comp);

// Exact max over the diameters of all components, one seed per component,
// visited set shared across seeds in lexicographic permutation order.
uint64_t max_component_diameter(const FsContext& ctx, const ExplorerOptions& opts = {});

struct ComponentReport {
    uint64_t size = 0;
    uint64_t diameter = 0;
    bool is_cycle = false;
};

struct ExploreReport {
    std::vector<ComponentReport> components;
    std::optional<uint64_t> girth;
    bool connected = false;
};

// Components in lexicographic seed order with diameters and cycle flags,
// plus FS-girth and connectivity.
ExploreReport explore(const FsContext& ctx, const ExplorerOptions& opts = {},
                      bool with_diameters = true);
std::string explore_report_json(const ExploreReport& report);

// Shortest cycle length over all of FS(X,Y); nullopt when FS is a forest.
// Even whenever finite (FS graphs are bipartite).
std::optional<uint64_t> fs_girth(const FsContext& ctx, const ExplorerOptions& opts = {});

// Girth restricted to one materialized component; cutoff prunes BFS depth
// when an upper bound is already known. Optionally returns a witness cycle.
std::optional<uint64_t> component_girth(const MaterializedComponent& comp,
                                        uint64_t cutoff = UINT64_MAX,
                                        std::vector<int32_t>* witness = nullptr,
                                        int threads = 0);

// True iff every vertex of the component has exactly 2 neighbors inside it
// (the component is then a single cycle).
bool is_cycle_component(const MaterializedComponent& comp);

// Single BFS covering all n! configurations.
bool is_connected_fs(const FsContext& ctx, const ExplorerOptions& opts = {});

}  // namespace fsg
