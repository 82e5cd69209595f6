#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "ghdist/relations.hpp"

namespace ghdist {

inline constexpr std::uint64_t kNoBudget = std::numeric_limits<std::uint64_t>::max();

struct SearchOptions {
    std::uint64_t budget = kNoBudget;  // explored-node cap
    int threads = 1;
    std::optional<MapPair> initial;    // optional incumbent seeding the search
    double tolerance = 1e-12;          // slack when matching incumbent against a lower bound
};

struct DistanceResult {
    double value = 0.0;
    MapPair certificate;
    std::uint64_t nodes_explored = 0;
    std::string bound_used;            // how optimality (or the early stop) was concluded
    bool budget_exhausted = false;     // value is then only an upper estimate
};

/// Exact Gromov-Hausdorff distance as half the smallest map-pair distortion,
/// found by branch and bound. The certificate is the lexicographically
/// smallest optimal (f, g).
DistanceResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                        const SearchOptions& options = {});

/// Same value by plain enumeration of every map pair; reference oracle for
/// small spaces. Refuses inputs whose pair count exceeds the cap.
double gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                     double pair_cap = 1e7);

/// Searches for a bijection f with distortion at most eps, paired with its
/// inverse. Requires eps < s_val(x); returns the lexicographically first
/// match, or nothing when none exists (in particular when sizes differ).
std::optional<MapPair> find_eps_isometry(const FiniteMetricSpace& x,
                                         const FiniteMetricSpace& y, double eps);

struct RigidityReport {
    bool rigid = false;
    std::string reason;
};

/// Checks that distortion <= eps forces p.f to be distance-preserving. The
/// conclusion is only claimed when all spectrum gaps of x and y exceed eps;
/// otherwise the report explains the refusal.
RigidityReport check_isometry_rigidity(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                       const MapPair& p, double eps);

} // namespace ghdist
