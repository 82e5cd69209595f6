#pragma once

#include <json.hpp>

#include "ghdist/bounds.hpp"
#include "ghdist/fixtures.hpp"
#include "ghdist/metric_space.hpp"
#include "ghdist/relations.hpp"
#include "ghdist/search.hpp"
#include "ghdist/topo_model.hpp"

namespace ghdist {

// Insertion-ordered JSON keeps the emitted documents byte-stable.
using Json = nlohmann::ordered_json;

/// Accepts {"dist": [[...]], "labels": [...]} or
/// {"points": [[...]], "norm": "l2"|"l1"|"linf"}; the grid form is fully
/// validated against the metric axioms.
FiniteMetricSpace space_from_json(const Json& j, double tolerance = kDefaultTolerance);
Json space_to_json(const FiniteMetricSpace& x);

/// {"metric": <space>, "edges": [[i, j], ...]}. A plain space document is
/// not accepted; models must be explicit about their edges.
CombinatorialSpace combinatorial_from_json(const Json& j,
                                           double tolerance = kDefaultTolerance);
Json combinatorial_to_json(const CombinatorialSpace& xc);

MapPair map_pair_from_json(const Json& j);
Json map_pair_to_json(const MapPair& p);

Json distance_result_to_json(const DistanceResult& r);
Json bound_report_to_json(const BoundReport& report);
Json fixture_to_json(const Fixture& fix);
Json check_report_to_json(const CheckReport& report);

} // namespace ghdist
