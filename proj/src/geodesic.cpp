#include "ghdist/geodesic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghdist {

namespace {

void check_parameter(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError(DomainError::Code::OutOfRange,
                          "interpolation parameter must lie in [0, 1]");
}

// First related partner of each domain point (pairs are sorted, so this is
// the smallest one); total by the correspondence property.
std::vector<int> first_partner_left(const Relation& r) {
    std::vector<int> partner(r.domain_size, -1);
    for (const auto& [a, b] : r.pairs)
        if (partner[a] == -1)
            partner[a] = b;
    return partner;
}

std::vector<int> first_partner_right(const Relation& r) {
    std::vector<int> partner(r.codomain_size, -1);
    for (const auto& [a, b] : r.pairs)
        if (partner[b] == -1)
            partner[b] = a;
    return partner;
}

// Index of the first pair whose left (or right) entry is the given point.
std::vector<int> first_pair_by_left(const Relation& r) {
    std::vector<int> at(r.domain_size, -1);
    for (int p = 0; p < static_cast<int>(r.pairs.size()); ++p)
        if (at[r.pairs[p].first] == -1)
            at[r.pairs[p].first] = p;
    return at;
}

std::vector<int> first_pair_by_right(const Relation& r) {
    std::vector<int> at(r.codomain_size, -1);
    for (int p = 0; p < static_cast<int>(r.pairs.size()); ++p)
        if (at[r.pairs[p].second] == -1)
            at[r.pairs[p].second] = p;
    return at;
}

// Natural map pair between the interpolants at a < b, following the
// correspondence. Its distortion never exceeds (b - a) times the
// correspondence distortion, which makes it a safe search seed.
MapPair natural_seed(const InterpolantFamily& fam, double a, double b) {
    const Relation& r = fam.corr;
    const int pairs = static_cast<int>(r.pairs.size());
    MapPair seed;
    if (a == 0.0 && b == 1.0) {
        seed.f = first_partner_left(r);
        seed.g = first_partner_right(r);
    } else if (a == 0.0) {
        seed.f = first_pair_by_left(r);
        seed.g.resize(pairs);
        for (int p = 0; p < pairs; ++p)
            seed.g[p] = r.pairs[p].first;
    } else if (b == 1.0) {
        seed.f.resize(pairs);
        for (int p = 0; p < pairs; ++p)
            seed.f[p] = r.pairs[p].second;
        seed.g = first_pair_by_right(r);
    } else {
        seed.f.resize(pairs);
        seed.g.resize(pairs);
        for (int p = 0; p < pairs; ++p)
            seed.f[p] = seed.g[p] = p;
    }
    return seed;
}

} // namespace

InterpolantFamily make_family(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                              const Relation& r) {
    if (r.domain_size != x.size() || r.codomain_size != y.size())
        throw DomainError(DomainError::Code::SizeMismatch,
                          "relation sides do not match the endpoint spaces");
    if (!is_correspondence(r))
        throw DomainError(DomainError::Code::BadParameters,
                          "the relation must cover both spaces to interpolate along it");
    return InterpolantFamily{x, y, r, distortion_rel(r, x, y)};
}

FiniteMetricSpace interpolate(const InterpolantFamily& fam, double t) {
    check_parameter(t);
    if (t == 0.0)
        return fam.x;
    if (t == 1.0)
        return fam.y;

    const int n = static_cast<int>(fam.corr.pairs.size());
    std::vector<std::vector<double>> grid(n, std::vector<double>(n, 0.0));
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const auto& [a1, b1] = fam.corr.pairs[p];
            const auto& [a2, b2] = fam.corr.pairs[q];
            const double d = (1.0 - t) * fam.x.dist(a1, a2) + t * fam.y.dist(b1, b2);
            grid[p][q] = d;
            grid[q][p] = d;
        }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& [a, b] : fam.corr.pairs) {
        const std::string left = fam.x.has_labels() ? fam.x.labels()[a] : std::to_string(a);
        const std::string right = fam.y.has_labels() ? fam.y.labels()[b] : std::to_string(b);
        labels.push_back(left + "|" + right);
    }
    return FiniteMetricSpace::validated(grid, std::move(labels));
}

GeodesicDefect geodesic_defect(const InterpolantFamily& fam, double t, double s,
                               const SearchOptions& options) {
    check_parameter(t);
    check_parameter(s);
    GeodesicDefect defect;
    defect.bound = 0.5 * std::abs(t - s) * fam.dis_r;
    if (t == s)
        return defect;

    const double a = std::min(t, s);
    const double b = std::max(t, s);
    const FiniteMetricSpace at = interpolate(fam, a);
    const FiniteMetricSpace bt = interpolate(fam, b);

    SearchOptions seeded = options;
    seeded.initial = natural_seed(fam, a, b);
    defect.measured = gh_exact(at, bt, seeded).value;
    if (defect.measured > defect.bound + 1e-9)
        throw std::logic_error("interpolant distance exceeds the Lipschitz bound at (" +
                               std::to_string(t) + ", " + std::to_string(s) + ")");
    return defect;
}

double polyline_length(const InterpolantFamily& fam, std::span<const double> ts,
                       const SearchOptions& options) {
    if (ts.empty())
        throw DomainError(DomainError::Code::EmptySubset, "parameter list is empty");
    for (size_t i = 0; i < ts.size(); ++i) {
        check_parameter(ts[i]);
        if (i > 0 && ts[i] < ts[i - 1])
            throw DomainError(DomainError::Code::OutOfRange,
                              "parameters must be sorted ascending");
    }
    double total = 0.0;
    for (size_t i = 1; i < ts.size(); ++i)
        total += geodesic_defect(fam, ts[i - 1], ts[i], options).measured;
    return total;
}

} // namespace ghdist
