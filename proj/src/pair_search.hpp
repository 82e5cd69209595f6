#pragma once

// Internal branch-and-bound engine minimizing the map-pair distortion
// max{dis f, dis g, codis(f, g)} over all pairs f: X -> Y, g: Y -> X,
// optionally restricted to edge-respecting maps between graph models.
// Shared by the exact distance searches; not part of the public headers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghdist/relations.hpp"
#include "ghdist/search.hpp"

namespace ghdist::detail {

/// Graph structure restricting the search to maps under which every edge
/// lands on an edge or collapses to a point.
struct TopologyView {
    std::vector<std::uint8_t> adj_x;        // |X|*|X| adjacency flags
    std::vector<std::uint8_t> adj_y;
    std::vector<std::vector<int>> nbr_x;    // neighbour lists
    std::vector<std::vector<int>> nbr_y;
    std::vector<int> comp_x;                // component id per point
    std::vector<int> comp_y;
    std::vector<double> comp_diam_x;        // metric diameter per component
    std::vector<double> comp_diam_y;
};

struct PairSearchRequest {
    const FiniteMetricSpace* x = nullptr;
    const FiniteMetricSpace* y = nullptr;
    const TopologyView* topology = nullptr; // null = unrestricted maps
    double dis_lower = 0.0;                 // proven lower bound, distortion scale
    std::uint64_t budget = kNoBudget;
    int threads = 1;
    std::optional<MapPair> seed;            // optional initial incumbent
    double tolerance = 1e-12;
};

struct PairSearchOutcome {
    double dis = 0.0;
    MapPair best;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
    bool proven_optimal = false;
    std::string conclusion;
};

/// Two-phase search: a pruned descent ordered by eccentricity and greedy
/// incremental cost finds the optimal distortion, then a rescan in natural
/// index order rebuilds the lexicographically smallest certificate. Results
/// do not depend on the thread count; node counts may.
PairSearchOutcome minimize_pair_distortion(const PairSearchRequest& req);

} // namespace ghdist::detail
