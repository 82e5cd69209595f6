#pragma once

#include <utility>
#include <vector>

#include "ghdist/metric_space.hpp"
#include "ghdist/search.hpp"

namespace ghdist {

/// A finite metric space together with an undirected graph on its points.
/// The graph stands in for the topology: continuous maps become maps under
/// which every edge lands on an edge or collapses to a point.
class CombinatorialSpace {
public:
    static CombinatorialSpace validated(FiniteMetricSpace metric,
                                        std::vector<std::pair<int, int>> edges);

    const FiniteMetricSpace& metric() const { return metric_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int size() const { return metric_.size(); }
    bool adjacent(int i, int j) const {
        return adj_[static_cast<size_t>(i) * metric_.size() + j] != 0;
    }
    const std::vector<std::uint8_t>& adjacency() const { return adj_; }
    const std::vector<std::vector<int>>& neighbours() const { return nbr_; }

private:
    CombinatorialSpace(FiniteMetricSpace metric, std::vector<std::pair<int, int>> edges);

    FiniteMetricSpace metric_;
    std::vector<std::pair<int, int>> edges_;   // canonical: i < j, sorted, unique
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> nbr_;
};

/// Connected components of the graph, each with its metric diameter.
struct ComponentPartition {
    std::vector<int> comp_of;                  // point -> component id
    std::vector<std::vector<int>> members;     // component id -> points, ascending
    std::vector<double> diameters;
    int count() const { return static_cast<int>(members.size()); }
};

ComponentPartition components(const CombinatorialSpace& xc);

/// True when the model carries no edges at all.
bool is_totally_disconnected(const CombinatorialSpace& xc);

/// Model of x whose edges join every pair at distance <= eps (eps >= 0).
CombinatorialSpace eps_graph(const FiniteMetricSpace& x, double eps);

/// True when f sends every edge of xc onto an edge of yc or onto one point.
bool is_admissible(std::span<const int> f, const CombinatorialSpace& xc,
                   const CombinatorialSpace& yc);

/// True when every admissible map xc -> yc is constant. One-point models
/// count as incomparable with everything.
bool is_incomparable(const CombinatorialSpace& xc, const CombinatorialSpace& yc);

/// Continuous variant of the distance: the map-pair distortion is minimized
/// over admissible maps only. Same engine and certificate conventions as
/// gh_exact.
DistanceResult ghc_exact(const CombinatorialSpace& xc, const CombinatorialSpace& yc,
                         const SearchOptions& options = {});

} // namespace ghdist
