#include "ghdist/topo_model.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ghdist/bounds.hpp"
#include "pair_search.hpp"

namespace ghdist {

CombinatorialSpace::CombinatorialSpace(FiniteMetricSpace metric,
                                       std::vector<std::pair<int, int>> edges)
    : metric_(std::move(metric)), edges_(std::move(edges)) {
    const int n = metric_.size();
    adj_.assign(static_cast<size_t>(n) * n, 0);
    nbr_.assign(n, {});
    for (const auto& [i, j] : edges_) {
        adj_[static_cast<size_t>(i) * n + j] = 1;
        adj_[static_cast<size_t>(j) * n + i] = 1;
        nbr_[i].push_back(j);
        nbr_[j].push_back(i);
    }
    for (auto& list : nbr_)
        std::sort(list.begin(), list.end());
}

CombinatorialSpace CombinatorialSpace::validated(FiniteMetricSpace metric,
                                                 std::vector<std::pair<int, int>> edges) {
    const int n = metric.size();
    for (auto& [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw DomainError(DomainError::Code::OutOfRange,
                              "edge endpoint outside the point range");
        if (i == j)
            throw DomainError(DomainError::Code::BadParameters,
                              "edge endpoints must be distinct (" + std::to_string(i) + ")");
        if (i > j)
            std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return CombinatorialSpace(std::move(metric), std::move(edges));
}

ComponentPartition components(const CombinatorialSpace& xc) {
    const int n = xc.size();
    ComponentPartition parts;
    parts.comp_of.assign(n, -1);
    for (int start = 0; start < n; ++start) {
        if (parts.comp_of[start] != -1)
            continue;
        const int id = parts.count();
        parts.members.push_back({});
        std::deque<int> queue{start};
        parts.comp_of[start] = id;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            parts.members[id].push_back(v);
            for (int w : xc.neighbours()[v])
                if (parts.comp_of[w] == -1) {
                    parts.comp_of[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(parts.members[id].begin(), parts.members[id].end());
        double diam = 0.0;
        for (size_t a = 0; a < parts.members[id].size(); ++a)
            for (size_t b = a + 1; b < parts.members[id].size(); ++b)
                diam = std::max(diam,
                                xc.metric().dist(parts.members[id][a], parts.members[id][b]));
        parts.diameters.push_back(diam);
    }
    return parts;
}

bool is_totally_disconnected(const CombinatorialSpace& xc) {
    return xc.edges().empty();
}

CombinatorialSpace eps_graph(const FiniteMetricSpace& x, double eps) {
    if (eps < 0.0)
        throw DomainError(DomainError::Code::BadParameters,
                          "edge threshold must be non-negative");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j)
            if (x.dist(i, j) <= eps)
                edges.emplace_back(i, j);
    return CombinatorialSpace::validated(x, std::move(edges));
}

bool is_admissible(std::span<const int> f, const CombinatorialSpace& xc,
                   const CombinatorialSpace& yc) {
    if (static_cast<int>(f.size()) != xc.size())
        throw DomainError(DomainError::Code::SizeMismatch,
                          "map must assign every point of the domain model");
    for (int v : f)
        if (v < 0 || v >= yc.size())
            throw DomainError(DomainError::Code::OutOfRange, "map value outside the codomain");
    for (const auto& [i, j] : xc.edges())
        if (f[i] != f[j] && !yc.adjacent(f[i], f[j]))
            return false;
    return true;
}

bool is_incomparable(const CombinatorialSpace& xc, const CombinatorialSpace& yc) {
    if (xc.size() == 1 || yc.size() == 1)
        return true;
    // Any edge (a, b) on the codomain admits a non-constant admissible map:
    // send one point to b, the rest to a. Every domain edge then lands on
    // (a, b) or collapses.
    if (!yc.edges().empty())
        return false;
    // Edgeless codomain: admissible maps are exactly the maps constant on
    // each component, so only a connected domain forces constancy.
    return components(xc).count() == 1;
}

namespace {

// Any map must take each component into a single component of the other
// side; a component can only lose diameter that way.
double component_diameter_floor(const ComponentPartition& from, const ComponentPartition& to) {
    double worst = 0.0;
    for (double da : from.diameters) {
        double best = da;
        for (double db : to.diameters)
            best = std::min(best, std::max(0.0, da - db));
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

DistanceResult ghc_exact(const CombinatorialSpace& xc, const CombinatorialSpace& yc,
                         const SearchOptions& options) {
    const FiniteMetricSpace& x = xc.metric();
    const FiniteMetricSpace& y = yc.metric();
    const ComponentPartition px = components(xc);
    const ComponentPartition py = components(yc);

    detail::TopologyView topo;
    topo.adj_x = xc.adjacency();
    topo.adj_y = yc.adjacency();
    topo.nbr_x = xc.neighbours();
    topo.nbr_y = yc.neighbours();
    topo.comp_x = px.comp_of;
    topo.comp_y = py.comp_of;
    topo.comp_diam_x = px.diameters;
    topo.comp_diam_y = py.diameters;

    std::vector<std::pair<std::string, double>> lowers;
    lowers.emplace_back("metric", lower_bounds(x, y).lower);
    lowers.emplace_back("connectivity", ghc_lower_connectivity(xc, yc));
    lowers.emplace_back("component_split", ghc_lower_component_split(xc, yc));
    lowers.emplace_back("component_diameters",
                        0.5 * std::max(component_diameter_floor(px, py),
                                       component_diameter_floor(py, px)));
    auto max_term = std::max_element(lowers.begin(), lowers.end(),
                                     [](const auto& a, const auto& b) {
                                         return a.second < b.second;
                                     });

    detail::PairSearchRequest req;
    req.x = &x;
    req.y = &y;
    req.topology = &topo;
    req.dis_lower = 2.0 * max_term->second;
    req.budget = options.budget;
    req.threads = options.threads;
    req.seed = options.initial;
    req.tolerance = options.tolerance;
    const detail::PairSearchOutcome out = detail::minimize_pair_distortion(req);

    DistanceResult result;
    result.value = 0.5 * out.dis;
    result.certificate = out.best;
    result.nodes_explored = out.nodes;
    result.budget_exhausted = out.budget_exhausted;
    result.bound_used = out.conclusion + "; best lower bound: " + max_term->first;
    return result;
}

} // namespace ghdist
