#include "ghdist/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghdist/bounds.hpp"
#include "pair_search.hpp"

namespace ghdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string best_lower_name(const BoundReport& report) {
    std::string name = "none";
    double value = -kInf;
    for (const auto& [term, v] : report.lower_terms)
        if (v > value) {
            value = v;
            name = term;
        }
    return name;
}

} // namespace

DistanceResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                        const SearchOptions& options) {
    const BoundReport bounds = lower_bounds(x, y);

    detail::PairSearchRequest req;
    req.x = &x;
    req.y = &y;
    req.dis_lower = 2.0 * bounds.lower;
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
    result.bound_used = out.conclusion + "; best lower bound: " + best_lower_name(bounds);
    return result;
}

double gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y, double pair_cap) {
    const int nx = x.size(), ny = y.size();
    const double combos = std::pow(static_cast<double>(ny), nx) *
                          std::pow(static_cast<double>(nx), ny);
    if (!(combos <= pair_cap))
        throw DomainError(DomainError::Code::TooLarge,
                          "map pair count exceeds the enumeration cap");

    const auto all_maps = [](int domain, int codomain) {
        std::vector<std::vector<int>> maps;
        std::vector<int> current(domain, 0);
        while (true) {
            maps.push_back(current);
            int pos = domain - 1;
            while (pos >= 0 && current[pos] == codomain - 1)
                current[pos--] = 0;
            if (pos < 0)
                break;
            ++current[pos];
        }
        return maps;
    };
    const auto fs = all_maps(nx, ny);
    const auto gs = all_maps(ny, nx);

    std::vector<double> dis_f(fs.size(), 0.0);
    for (size_t a = 0; a < fs.size(); ++a)
        for (int i = 0; i < nx; ++i)
            for (int j = i + 1; j < nx; ++j)
                dis_f[a] = std::max(dis_f[a], std::abs(x.dist(i, j) - y.dist(fs[a][i], fs[a][j])));
    std::vector<double> dis_g(gs.size(), 0.0);
    for (size_t b = 0; b < gs.size(); ++b)
        for (int i = 0; i < ny; ++i)
            for (int j = i + 1; j < ny; ++j)
                dis_g[b] = std::max(dis_g[b], std::abs(y.dist(i, j) - x.dist(gs[b][i], gs[b][j])));

    double best = kInf;
    for (size_t a = 0; a < fs.size(); ++a)
        for (size_t b = 0; b < gs.size(); ++b) {
            double dis = std::max(dis_f[a], dis_g[b]);
            if (dis >= best)
                continue;
            for (int i = 0; i < nx && dis < best; ++i)
                for (int j = 0; j < ny; ++j)
                    dis = std::max(dis, std::abs(x.dist(i, gs[b][j]) - y.dist(fs[a][i], j)));
            best = std::min(best, dis);
        }
    return 0.5 * best;
}

std::optional<MapPair> find_eps_isometry(const FiniteMetricSpace& x,
                                         const FiniteMetricSpace& y, double eps) {
    if (eps < 0.0)
        throw DomainError(DomainError::Code::BadParameters, "eps must be non-negative");
    if (x.size() > 1 && eps >= invariants(x).s_val)
        throw DomainError(DomainError::Code::EpsilonTooLarge,
                          "eps must stay below the smallest positive distance, otherwise a "
                          "matched pair need not invert");
    if (x.size() != y.size())
        return std::nullopt;

    const int n = x.size();
    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);
    const auto dfs = [&](const auto& self, int k) -> bool {
        if (k == n)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j)
                ok = std::abs(x.dist(k, j) - y.dist(v, f[j])) <= eps;
            if (!ok)
                continue;
            used[v] = 1;
            f[k] = v;
            if (self(self, k + 1))
                return true;
            used[v] = 0;
            f[k] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0))
        return std::nullopt;

    MapPair p;
    p.f = f;
    p.g.assign(n, -1);
    for (int i = 0; i < n; ++i)
        p.g[f[i]] = i;
    return p;
}

RigidityReport check_isometry_rigidity(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                       const MapPair& p, double eps) {
    std::vector<double> merged = dist_spectrum(x).values;
    const std::vector<double> other = dist_spectrum(y).values;
    merged.insert(merged.end(), other.begin(), other.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    double gap = kInf;
    for (size_t i = 1; i < merged.size(); ++i)
        gap = std::min(gap, merged[i] - merged[i - 1]);
    if (eps >= gap)
        return {false, "eps reaches the smallest gap between occurring distance values; "
                       "small distortion no longer forces exact matches"};

    // With eps below every spectrum gap, any matched distance pair must be
    // equal on the nose; confirm on the given maps.
    if (distortion_map(p.f, x, y) <= eps)
        for (int i = 0; i < x.size(); ++i)
            for (int j = i + 1; j < x.size(); ++j)
                if (x.dist(i, j) != y.dist(p.f[i], p.f[j]))
                    return {false, "f has distortion within eps yet moves a distance"};
    if (distortion_map(p.g, y, x) <= eps)
        for (int i = 0; i < y.size(); ++i)
            for (int j = i + 1; j < y.size(); ++j)
                if (y.dist(i, j) != x.dist(p.g[i], p.g[j]))
                    return {false, "g has distortion within eps yet moves a distance"};
    return {true, "maps with distortion within eps preserve every distance exactly"};
}

} // namespace ghdist
