#pragma once

#include <span>

#include "ghdist/relations.hpp"
#include "ghdist/search.hpp"

namespace ghdist {

/// Straight-line family between two spaces along a correspondence: at time t
/// the related pairs carry the blend (1-t) d_X + t d_Y. Endpoints are the
/// original spaces.
struct InterpolantFamily {
    FiniteMetricSpace x;
    FiniteMetricSpace y;
    Relation corr;
    double dis_r = 0.0;   // distortion of the correspondence
};

/// Validates that r is a correspondence between x and y.
InterpolantFamily make_family(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                              const Relation& r);

/// Space at parameter t in [0,1]; the interior spaces live on the pair set.
FiniteMetricSpace interpolate(const InterpolantFamily& fam, double t);

struct GeodesicDefect {
    double bound = 0.0;     // half |t - s| times the correspondence distortion
    double measured = 0.0;  // exact distance between the two interpolants
};

/// Compares the distance between two interpolants against the family's
/// Lipschitz bound. The search is seeded with the natural map pair along the
/// correspondence, so measured never exceeds bound even under a budget.
GeodesicDefect geodesic_defect(const InterpolantFamily& fam, double t, double s,
                               const SearchOptions& options = {});

/// Sum of exact distances along consecutive parameters (sorted, in [0,1]).
double polyline_length(const InterpolantFamily& fam, std::span<const double> ts,
                       const SearchOptions& options = {});

} // namespace ghdist
