#pragma once

#include <span>
#include <string>
#include <vector>

#include "ghdist/errors.hpp"

namespace ghdist {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Norm { L2, L1, Linf };

/// A finite metric space stored as a flat, exactly symmetric distance grid.
/// Construction goes through `validated` (full axiom check) or `unchecked`
/// (for grids that are correct by construction, e.g. restrictions).
class FiniteMetricSpace {
public:
    static FiniteMetricSpace validated(const std::vector<std::vector<double>>& grid,
                                       std::vector<std::string> labels = {},
                                       double tolerance = kDefaultTolerance);
    static FiniteMetricSpace unchecked(int n, std::vector<double> flat,
                                       std::vector<std::string> labels = {});
    static FiniteMetricSpace one_point(std::string label = "pt");

    int size() const { return n_; }
    double dist(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& flat() const { return d_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Largest distance from point i to any other point.
    double eccentricity(int i) const;

private:
    FiniteMetricSpace(int n, std::vector<double> flat, std::vector<std::string> labels)
        : n_(n), d_(std::move(flat)), labels_(std::move(labels)) {}

    int n_ = 0;
    std::vector<double> d_;
    std::vector<std::string> labels_;
};

/// diam, Chebyshev radius, and the two nearest-neighbour extremes
/// (s_val = min positive distance, d_val = max over points of the distance
/// to the nearest other point). All four are 0 on a one-point space.
struct SpaceInvariants {
    double diam = 0.0;
    double chebyshev_r = 0.0;
    double d_val = 0.0;
    double s_val = 0.0;
};

/// Sorted set of distinct distance values occurring in the space; always
/// contains 0.
struct DistSpectrum {
    std::vector<double> values;
};

SpaceInvariants invariants(const FiniteMetricSpace& x);
DistSpectrum dist_spectrum(const FiniteMetricSpace& x);

/// Hausdorff distance between two non-empty subsets, given by point indices
/// into the ambient space x.
double hausdorff(const FiniteMetricSpace& x, std::span<const int> a, std::span<const int> b);

/// Space with every distance multiplied by factor >= 0. Factor 0 collapses
/// to the one-point quotient.
FiniteMetricSpace scale(const FiniteMetricSpace& x, double factor);

/// Metric space of a point cloud under the chosen norm. Coordinate rows must
/// share one dimension and be pairwise distinct.
FiniteMetricSpace from_points(const std::vector<std::vector<double>>& points, Norm norm);

/// Restriction of x to the given point indices, in the given order.
FiniteMetricSpace subspace(const FiniteMetricSpace& x, std::span<const int> keep);

} // namespace ghdist
