#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ghdist/relations.hpp"
#include "ghdist/topo_model.hpp"

namespace ghdist {

/// Named bundle of spaces, maps, subsets and frozen reference values shared
/// by the tests and the command-line tool.
struct Fixture {
    struct Reference {
        std::string name;
        double value = 0.0;
        std::string note;
    };

    std::string name;
    std::vector<std::pair<std::string, CombinatorialSpace>> spaces;
    std::vector<std::pair<std::string, MapPair>> maps;
    std::vector<std::pair<std::string, std::vector<int>>> index_sets;
    std::vector<Reference> references;

    const CombinatorialSpace& space(const std::string& key) const;
    const MapPair& map(const std::string& key) const;
    const std::vector<int>& index_set(const std::string& key) const;
    double reference(const std::string& key) const;
};

/// Hub-and-spokes pair: space "x" has a hub at distance 1 + u_k from spoke k
/// (u_k being 1/(2k) rounded to the 2^-52 grid so that every comparison
/// below is exact in binary) plus a far point at distance 1 from the hub;
/// space "y" has one extra spoke instead of the far point. The bijections
/// h_m shift spokes m..n outward and land the far point on spoke m, with
/// distortion exactly u_m.
Fixture build_omega_space(int n);

/// 2N points k -+ 1/(6k) on the line, edgeless model; the smallest positive
/// distance is 1/(3N) and decreases strictly in N.
Fixture build_shifted_pairs(int n);

/// K unit intervals at mutual distance 1, sampled at step 2^-grid_exp. The
/// "dense" subset keeps the 2^-k grid of interval k (edgeless model); the
/// "mixed" one keeps whole intervals from level n on (path edges there).
/// Their Hausdorff distance inside the ambient sample is exactly 2^-(n+1).
Fixture build_interval_stack(int k, int n, int grid_exp);

/// Tripod of a vertical segment [-1,1] and a horizontal one [0,1] glued at
/// the origin, intrinsic metric, sampled at step 1/grid. The truncated
/// variant drops the horizontal piece below 1/n, leaving two components;
/// grid must be divisible by 2n so the witnesses stay on the grid.
Fixture build_triode(int n, int grid);

/// Map pair between two truncated tripods on one grid: clamp the horizontal
/// leg of the finer model outward to 1/n, include the coarser one back.
MapPair triode_squeeze_pair(const Fixture& finer, const Fixture& coarser);

struct CheckRow {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    bool pass = false;
    std::string note;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    bool all_pass = true;
};

/// Bundled sanity checks on the fixtures: unit-grid distances, the collapse
/// of a connected model against an edgeless one, the image cover floor of
/// the codistortion, and the tripod rates.
CheckReport counterexample_checks(std::uint64_t budget = 2'000'000);

} // namespace ghdist
