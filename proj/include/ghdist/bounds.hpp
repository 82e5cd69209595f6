#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ghdist/metric_space.hpp"
#include "ghdist/topo_model.hpp"

namespace ghdist {

/// Named lower and upper estimates for a distance value. `lower` is the max
/// of the lower terms, `upper` the min of the upper terms; notes carry
/// observations that yield no bound.
struct BoundReport {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<std::pair<std::string, double>> lower_terms;
    std::vector<std::pair<std::string, double>> upper_terms;
    std::vector<std::string> notes;
};

/// Cheap bounds on the distance between two plain metric spaces: diameter
/// gap, Hausdorff distance between the distance spectra, and the separation
/// gap when the smallest positive distances differ.
BoundReport lower_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Half the larger diameter; valid upper bound for both distance variants.
double upper_bound_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Lower bound on the continuous variant from connectivity mismatch: an
/// edgeless side forces the other side's components to collapse, and an
/// incomparable side forces full-diameter distortion plus a Chebyshev-radius
/// codistortion floor.
double ghc_lower_connectivity(const CombinatorialSpace& xc, const CombinatorialSpace& yc);

/// Lower bound on the continuous variant when one side is connected: its
/// image must land inside a single component of the other side, so the best
/// component still pays the diameter drop or the distance to the farthest
/// point left uncovered.
double ghc_lower_component_split(const CombinatorialSpace& xc, const CombinatorialSpace& yc);

/// Upper bound on the continuous variant between an edgeless model of a
/// subset A and its ambient space Y: include A into Y and retract Y onto
/// nearest representatives in A. Never exceeds hausdorff(Y, A, all of Y).
double ghc_upper_partition(const CombinatorialSpace& xc, const FiniteMetricSpace& y,
                           std::span<const int> a);

} // namespace ghdist
