#include "ghdist/relations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ghdist {

namespace {

void check_sizes(const Relation& rel, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    if (rel.domain_size != x.size() || rel.codomain_size != y.size())
        throw DomainError(DomainError::Code::SizeMismatch,
                          "relation sides do not match the given spaces");
}

void check_map(std::span<const int> f, const FiniteMetricSpace& x, const FiniteMetricSpace& y,
               const char* name) {
    if (static_cast<int>(f.size()) != x.size())
        throw DomainError(DomainError::Code::SizeMismatch,
                          std::string(name) + " must assign every domain point");
    for (int v : f)
        if (v < 0 || v >= y.size())
            throw DomainError(DomainError::Code::OutOfRange,
                              std::string(name) + " value " + std::to_string(v) +
                                  " outside codomain");
}

} // namespace

Relation Relation::validated(int domain_size, int codomain_size,
                             std::vector<std::pair<int, int>> pairs) {
    if (domain_size <= 0 || codomain_size <= 0)
        throw DomainError(DomainError::Code::BadParameters, "relation sides must be non-empty");
    if (pairs.empty())
        throw DomainError(DomainError::Code::BadParameters, "relation has no pairs");
    for (const auto& [a, b] : pairs)
        if (a < 0 || a >= domain_size || b < 0 || b >= codomain_size)
            throw DomainError(DomainError::Code::OutOfRange,
                              "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside the index ranges");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Relation{domain_size, codomain_size, std::move(pairs)};
}

double distortion_rel(const Relation& rel, const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y) {
    check_sizes(rel, x, y);
    double dis = 0.0;
    for (size_t a = 0; a < rel.pairs.size(); ++a)
        for (size_t b = a + 1; b < rel.pairs.size(); ++b) {
            const auto& [x1, y1] = rel.pairs[a];
            const auto& [x2, y2] = rel.pairs[b];
            dis = std::max(dis, std::abs(x.dist(x1, x2) - y.dist(y1, y2)));
        }
    return dis;
}

double distortion_map(std::span<const int> f, const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y) {
    check_map(f, x, y, "f");
    double dis = 0.0;
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j)
            dis = std::max(dis, std::abs(x.dist(i, j) - y.dist(f[i], f[j])));
    return dis;
}

double codistortion(const MapPair& p, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    check_map(p.f, x, y, "f");
    check_map(p.g, y, x, "g");
    double co = 0.0;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j)
            co = std::max(co, std::abs(x.dist(i, p.g[j]) - y.dist(p.f[i], j)));
    return co;
}

Relation corr_from_maps(const MapPair& p) {
    const int nx = static_cast<int>(p.f.size());
    const int ny = static_cast<int>(p.g.size());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(p.f.size() + p.g.size());
    for (int i = 0; i < nx; ++i)
        pairs.emplace_back(i, p.f[i]);
    for (int j = 0; j < ny; ++j)
        pairs.emplace_back(p.g[j], j);
    return Relation::validated(nx, ny, std::move(pairs));
}

double dis_map_pair(const MapPair& p, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    return std::max({distortion_map(p.f, x, y), distortion_map(p.g, y, x),
                     codistortion(p, x, y)});
}

Relation compose(const Relation& sigma, const Relation& tau) {
    if (sigma.codomain_size != tau.domain_size)
        throw DomainError(DomainError::Code::SizeMismatch,
                          "middle index sets of the factors differ");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, b] : sigma.pairs)
        for (const auto& [c, d] : tau.pairs)
            if (b == c)
                pairs.emplace_back(a, d);
    if (pairs.empty())
        throw DomainError(DomainError::Code::EmptyComposition,
                          "composition relates nothing");
    return Relation::validated(sigma.domain_size, tau.codomain_size, std::move(pairs));
}

bool is_correspondence(const Relation& rel) {
    std::vector<char> left(rel.domain_size, 0), right(rel.codomain_size, 0);
    for (const auto& [a, b] : rel.pairs) {
        left[a] = 1;
        right[b] = 1;
    }
    return std::all_of(left.begin(), left.end(), [](char c) { return c != 0; }) &&
           std::all_of(right.begin(), right.end(), [](char c) { return c != 0; });
}

} // namespace ghdist
