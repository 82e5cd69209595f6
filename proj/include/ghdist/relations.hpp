#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ghdist/metric_space.hpp"

namespace ghdist {

/// Non-empty binary relation between index sets {0..domain_size-1} and
/// {0..codomain_size-1}, stored as sorted unique pairs.
struct Relation {
    int domain_size = 0;
    int codomain_size = 0;
    std::vector<std::pair<int, int>> pairs;

    static Relation validated(int domain_size, int codomain_size,
                              std::vector<std::pair<int, int>> pairs);
};

/// A map f: X -> Y together with a companion g: Y -> X, both stored as index
/// arrays (f.size() == |X|, g.size() == |Y|).
struct MapPair {
    std::vector<int> f;
    std::vector<int> g;
};

/// Largest discrepancy |d_X(x,x') - d_Y(y,y')| over pairs of related pairs.
double distortion_rel(const Relation& rel, const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y);

/// Distortion of the graph of a single map f: X -> Y.
double distortion_map(std::span<const int> f, const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y);

/// Largest discrepancy |d_X(x, g(y)) - d_Y(f(x), y)| over all x, y.
double codistortion(const MapPair& p, const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Correspondence built from a map pair: graph(f) united with the transposed
/// graph of g. It is always left- and right-total.
Relation corr_from_maps(const MapPair& p);

/// max of distortion of f, distortion of g and their codistortion. Equals
/// distortion_rel(corr_from_maps(p)) term for term.
double dis_map_pair(const MapPair& p, const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Relational composition: (x,z) related iff some y links them through sigma
/// then tau.
Relation compose(const Relation& sigma, const Relation& tau);

/// True when the relation covers all of its domain and codomain.
bool is_correspondence(const Relation& rel);

} // namespace ghdist
