#include "ghdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghdist/relations.hpp"

namespace ghdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Hausdorff distance between two sorted value sets, taken inside the line
// metric |a - b|: the union becomes a synthesized 1-D space and the single
// hausdorff implementation does the rest.
double spectrum_hausdorff(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> line = a;
    line.insert(line.end(), b.begin(), b.end());
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    const int n = static_cast<int>(line.size());
    std::vector<double> flat(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            flat[static_cast<std::size_t>(i) * n + j] = std::abs(line[i] - line[j]);
    const FiniteMetricSpace space = FiniteMetricSpace::unchecked(n, std::move(flat));
    const auto locate = [&](double v) {
        return static_cast<int>(std::lower_bound(line.begin(), line.end(), v) - line.begin());
    };
    std::vector<int> ia, ib;
    for (double v : a)
        ia.push_back(locate(v));
    for (double v : b)
        ib.push_back(locate(v));
    return hausdorff(space, ia, ib);
}

} // namespace

BoundReport lower_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    const SpaceInvariants ix = invariants(x);
    const SpaceInvariants iy = invariants(y);

    BoundReport report;
    report.lower_terms.emplace_back("diameter_gap", 0.5 * std::abs(ix.diam - iy.diam));
    report.lower_terms.emplace_back(
        "spectrum_hausdorff",
        0.5 * spectrum_hausdorff(dist_spectrum(x).values, dist_spectrum(y).values));
    if (ix.s_val != iy.s_val) {
        const double small = std::min(ix.s_val, iy.s_val);
        const double big = std::max(ix.s_val, iy.s_val);
        report.lower_terms.emplace_back("separation_gap",
                                        0.5 * std::min(small, big - small));
    }
    report.notes.push_back(
        "separation spread vs spectrum comparison is informational only; it yields "
        "no unconditional bound");

    report.upper_terms.emplace_back("half_max_diam", upper_bound_diam(x, y));

    report.lower = 0.0;
    for (const auto& [name, value] : report.lower_terms)
        report.lower = std::max(report.lower, value);
    report.upper = kInf;
    for (const auto& [name, value] : report.upper_terms)
        report.upper = std::min(report.upper, value);
    return report;
}

double upper_bound_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    return 0.5 * std::max(invariants(x).diam, invariants(y).diam);
}

double ghc_lower_connectivity(const CombinatorialSpace& xc, const CombinatorialSpace& yc) {
    double value = 0.0;

    // An edgeless side collapses every component of the other side to a point.
    const auto max_component_diam = [](const CombinatorialSpace& c) {
        const ComponentPartition parts = components(c);
        return *std::max_element(parts.diameters.begin(), parts.diameters.end());
    };
    if (is_totally_disconnected(yc))
        value = std::max(value, 0.5 * max_component_diam(xc));
    if (is_totally_disconnected(xc))
        value = std::max(value, 0.5 * max_component_diam(yc));

    // An incomparable side only admits constant maps: full diameter is lost
    // and the codistortion cannot beat either Chebyshev radius.
    const SpaceInvariants ix = invariants(xc.metric());
    const SpaceInvariants iy = invariants(yc.metric());
    if (is_incomparable(xc, yc))
        value = std::max(value, 0.5 * std::max({ix.diam, ix.chebyshev_r, iy.chebyshev_r}));
    if (is_incomparable(yc, xc))
        value = std::max(value, 0.5 * std::max({iy.diam, ix.chebyshev_r, iy.chebyshev_r}));

    return value;
}

namespace {

// One side connected: its image sits inside one component of the other
// side. Whichever component is chosen, the map pays the diameter drop, and
// the codistortion pays the distance from the farthest point to that
// component.
double split_one_direction(const CombinatorialSpace& connected_side,
                           const CombinatorialSpace& split_side) {
    const ComponentPartition from = components(connected_side);
    if (from.count() != 1)
        return 0.0;
    const double diam_from = from.diameters.front();

    const FiniteMetricSpace& m = split_side.metric();
    const ComponentPartition to = components(split_side);
    double best = kInf;
    for (int comp = 0; comp < to.count(); ++comp) {
        double cover = 0.0;
        for (int p = 0; p < m.size(); ++p) {
            double nearest = kInf;
            for (int q : to.members[comp])
                nearest = std::min(nearest, m.dist(p, q));
            cover = std::max(cover, nearest);
        }
        const double pay = std::max(0.0, diam_from - to.diameters[comp]);
        best = std::min(best, std::max(pay, cover));
    }
    return 0.5 * best;
}

} // namespace

double ghc_lower_component_split(const CombinatorialSpace& xc, const CombinatorialSpace& yc) {
    return std::max(split_one_direction(xc, yc), split_one_direction(yc, xc));
}

double ghc_upper_partition(const CombinatorialSpace& xc, const FiniteMetricSpace& y,
                           std::span<const int> a) {
    if (!is_totally_disconnected(xc))
        throw DomainError(DomainError::Code::ModelHasEdges,
                          "the subset model must be edgeless");
    if (static_cast<int>(a.size()) != xc.size())
        throw DomainError(DomainError::Code::SizeMismatch,
                          "subset size does not match the model");
    const FiniteMetricSpace sub = subspace(y, a);
    if (sub.flat() != xc.metric().flat())
        throw DomainError(DomainError::Code::BadParameters,
                          "the model metric is not the restriction of the ambient one");

    MapPair p;
    p.f.assign(a.begin(), a.end());        // inclusion of the subset
    p.g.resize(y.size());
    for (int q = 0; q < y.size(); ++q) {   // retract onto the nearest representative
        int rep = 0;
        for (int pos = 1; pos < static_cast<int>(a.size()); ++pos)
            if (y.dist(q, a[pos]) < y.dist(q, a[rep]))
                rep = pos;
        p.g[q] = rep;
    }
    return 0.5 * dis_map_pair(p, sub, y);
}

} // namespace ghdist
