#include "ghdist/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ghdist/bounds.hpp"
#include "ghdist/search.hpp"

namespace ghdist {

namespace {

// 1/(2k) rounded onto the 2^-52 grid. Sums with 1 and differences between
// any two of these are then exact doubles, which keeps the fixture's
// reference equalities free of rounding.
double half_reciprocal(int k) {
    return std::ldexp(std::nearbyint(std::ldexp(1.0 / (2.0 * k), 52)), -52);
}

const Fixture::Reference* find_reference(const Fixture& fix, const std::string& key) {
    for (const auto& ref : fix.references)
        if (ref.name == key)
            return &ref;
    return nullptr;
}

} // namespace

const CombinatorialSpace& Fixture::space(const std::string& key) const {
    for (const auto& [name_, value] : spaces)
        if (name_ == key)
            return value;
    throw DomainError(DomainError::Code::OutOfRange, "fixture has no space '" + key + "'");
}

const MapPair& Fixture::map(const std::string& key) const {
    for (const auto& [name_, value] : maps)
        if (name_ == key)
            return value;
    throw DomainError(DomainError::Code::OutOfRange, "fixture has no map '" + key + "'");
}

const std::vector<int>& Fixture::index_set(const std::string& key) const {
    for (const auto& [name_, value] : index_sets)
        if (name_ == key)
            return value;
    throw DomainError(DomainError::Code::OutOfRange, "fixture has no index set '" + key + "'");
}

double Fixture::reference(const std::string& key) const {
    const Reference* ref = find_reference(*this, key);
    if (!ref)
        throw DomainError(DomainError::Code::OutOfRange,
                          "fixture has no reference '" + key + "'");
    return ref->value;
}

Fixture build_omega_space(int n) {
    if (n < 1)
        throw DomainError(DomainError::Code::BadParameters, "need at least one spoke");

    const int size = n + 2;
    const auto spoke_grid = [&](bool far_point) {
        // hub at index 0; spokes at 1..m; optionally a far point at the end
        const int spokes = far_point ? n : n + 1;
        std::vector<double> flat(static_cast<size_t>(size) * size, 2.0);
        std::vector<std::string> labels(size);
        labels[0] = "hub";
        for (int i = 0; i < size; ++i)
            flat[static_cast<size_t>(i) * size + i] = 0.0;
        for (int k = 1; k <= spokes; ++k) {
            const double d = 1.0 + half_reciprocal(k);
            flat[static_cast<size_t>(0) * size + k] = d;
            flat[static_cast<size_t>(k) * size + 0] = d;
            labels[k] = "p" + std::to_string(k);
        }
        if (far_point) {
            flat[size - 1] = 1.0;
            flat[static_cast<size_t>(size - 1) * size] = 1.0;
            labels[size - 1] = "far";
        }
        return FiniteMetricSpace::unchecked(size, std::move(flat), std::move(labels));
    };

    Fixture fix;
    fix.name = "omega";
    fix.spaces.emplace_back("x", CombinatorialSpace::validated(spoke_grid(true), {}));
    fix.spaces.emplace_back("y", CombinatorialSpace::validated(spoke_grid(false), {}));

    for (int m = 1; m <= n; ++m) {
        MapPair h;
        h.f.resize(size);
        h.f[0] = 0;
        for (int i = 1; i <= n; ++i)
            h.f[i] = i < m ? i : i + 1;
        h.f[size - 1] = m;
        h.g.assign(size, -1);
        for (int i = 0; i < size; ++i)
            h.g[h.f[i]] = i;
        fix.maps.emplace_back("h_" + std::to_string(m), std::move(h));
        fix.references.push_back({"dis_h_" + std::to_string(m), half_reciprocal(m),
                                  "attained between the far point and spoke " +
                                      std::to_string(m)});
    }
    fix.references.push_back({"diam_x", 2.0, ""});
    fix.references.push_back({"diam_y", 2.0, ""});
    fix.references.push_back({"s_x", 1.0, "hub to far point"});
    fix.references.push_back({"s_y", 1.0 + half_reciprocal(n + 1), "hub to the last spoke"});
    return fix;
}

Fixture build_shifted_pairs(int n) {
    if (n < 1)
        throw DomainError(DomainError::Code::BadParameters, "need at least one pair");

    std::vector<double> values;
    std::vector<std::string> labels;
    for (int k = 1; k <= n; ++k) {
        const double offset = 1.0 / (6.0 * k);
        values.push_back(k - offset);
        values.push_back(k + offset);
        labels.push_back("p" + std::to_string(k) + "-");
        labels.push_back("p" + std::to_string(k) + "+");
    }
    const int size = 2 * n;
    std::vector<double> flat(static_cast<size_t>(size) * size, 0.0);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            flat[static_cast<size_t>(i) * size + j] = std::abs(values[i] - values[j]);

    Fixture fix;
    fix.name = "shifted_pairs";
    fix.spaces.emplace_back(
        "x", CombinatorialSpace::validated(
                 FiniteMetricSpace::unchecked(size, std::move(flat), std::move(labels)), {}));
    fix.references.push_back({"s_value", invariants(fix.spaces.front().second.metric()).s_val,
                              "smallest positive distance as computed"});
    fix.references.push_back({"s_expected", 1.0 / (3.0 * n),
                              "within-pair gap of the last pair; agrees with s_value up to "
                              "rounding"});
    return fix;
}

Fixture build_interval_stack(int k, int n, int grid_exp) {
    if (k < 1 || n < 1 || n > k)
        throw DomainError(DomainError::Code::BadParameters,
                          "need 1 <= n <= k intervals");
    if (grid_exp < k + 2)
        throw DomainError(DomainError::Code::BadParameters,
                          "grid exponent must be at least k + 2 so gap midpoints stay on "
                          "the grid");

    const int per = (1 << grid_exp) + 1;           // samples per interval
    const double step = std::ldexp(1.0, -grid_exp);
    const int size = k * per;

    std::vector<double> flat(static_cast<size_t>(size) * size, 1.0);
    std::vector<std::string> labels(size);
    for (int a = 0; a < k; ++a)
        for (int i = 0; i < per; ++i) {
            const int idx = a * per + i;
            labels[idx] = "i" + std::to_string(a + 1) + ":" + std::to_string(i);
            for (int j = 0; j < per; ++j)
                flat[static_cast<size_t>(idx) * size + a * per + j] =
                    std::abs(i - j) * step;
        }

    std::vector<std::pair<int, int>> ambient_edges;
    for (int a = 0; a < k; ++a)
        for (int i = 0; i + 1 < per; ++i)
            ambient_edges.emplace_back(a * per + i, a * per + i + 1);

    FiniteMetricSpace ambient = FiniteMetricSpace::unchecked(size, std::move(flat), labels);

    std::vector<int> dense, mixed;
    for (int a = 0; a < k; ++a) {
        const int level = a + 1;                   // interval a+1 keeps its 2^-level grid
        const int coarse = 1 << (grid_exp - level);
        for (int i = 0; i < per; ++i) {
            const int idx = a * per + i;
            if (i % coarse == 0)
                dense.push_back(idx);
            if (level < n ? i % coarse == 0 : true)
                mixed.push_back(idx);
        }
    }

    std::vector<std::pair<int, int>> mixed_edges;
    for (size_t p = 0; p + 1 < mixed.size(); ++p)
        if (mixed[p + 1] == mixed[p] + 1 && mixed[p] / per == mixed[p + 1] / per)
            mixed_edges.emplace_back(static_cast<int>(p), static_cast<int>(p + 1));

    Fixture fix;
    fix.name = "interval_stack";
    fix.spaces.emplace_back("ambient",
                            CombinatorialSpace::validated(ambient, std::move(ambient_edges)));
    fix.spaces.emplace_back(
        "dense", CombinatorialSpace::validated(subspace(ambient, dense), {}));
    fix.spaces.emplace_back(
        "mixed",
        CombinatorialSpace::validated(subspace(ambient, mixed), std::move(mixed_edges)));
    fix.index_sets.emplace_back("dense", std::move(dense));
    fix.index_sets.emplace_back("mixed", std::move(mixed));
    fix.references.push_back({"hausdorff_dense_mixed", std::ldexp(1.0, -(n + 1)),
                              "worst gap midpoint of the coarsest fully kept interval"});
    fix.references.push_back({"connectivity_lower", 0.5,
                              "half the largest component diameter of the mixed model"});
    fix.references.push_back({"max_component_diam_mixed", 1.0, ""});
    return fix;
}

Fixture build_triode(int n, int grid) {
    if (n < 1)
        throw DomainError(DomainError::Code::BadParameters, "need level >= 1");
    if (grid < 2 * n || grid % (2 * n) != 0)
        throw DomainError(DomainError::Code::BadParameters,
                          "grid must be a positive multiple of 2n so the witnesses stay on "
                          "the grid");

    const double g = grid;
    // vertical arm first (j = -grid..grid), then the horizontal one (i >= 1);
    // same-arm distances run along the arm, cross-arm ones through the origin
    const auto build = [&](int first_kept) {
        const int vertical = 2 * grid + 1;
        std::vector<int> horizontal;
        for (int i = first_kept; i <= grid; ++i)
            horizontal.push_back(i);
        const int size = vertical + static_cast<int>(horizontal.size());

        std::vector<double> coord(size);     // arm coordinate
        std::vector<char> arm(size);         // 0 vertical, 1 horizontal
        std::vector<std::string> labels(size);
        for (int j = -grid; j <= grid; ++j) {
            coord[j + grid] = j / g;
            arm[j + grid] = 0;
            labels[j + grid] = "v" + std::to_string(j);
        }
        for (size_t p = 0; p < horizontal.size(); ++p) {
            coord[vertical + p] = horizontal[p] / g;
            arm[vertical + p] = 1;
            labels[vertical + p] = "h" + std::to_string(horizontal[p]);
        }

        std::vector<double> flat(static_cast<size_t>(size) * size, 0.0);
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b) {
                const double d = arm[a] == arm[b]
                                     ? std::abs(coord[a] - coord[b])
                                     : std::abs(coord[a]) + std::abs(coord[b]);
                flat[static_cast<size_t>(a) * size + b] = d;
                flat[static_cast<size_t>(b) * size + a] = d;
            }

        std::vector<std::pair<int, int>> edges;
        for (int p = 0; p + 1 < vertical; ++p)
            edges.emplace_back(p, p + 1);
        for (size_t p = 0; p + 1 < horizontal.size(); ++p)
            if (horizontal[p + 1] == horizontal[p] + 1)
                edges.emplace_back(vertical + static_cast<int>(p),
                                   vertical + static_cast<int>(p) + 1);
        if (first_kept == 1)
            edges.emplace_back(grid, vertical);    // glue origin to the horizontal arm
        return CombinatorialSpace::validated(
            FiniteMetricSpace::unchecked(size, std::move(flat), std::move(labels)),
            std::move(edges));
    };

    Fixture fix;
    fix.name = "triode";
    fix.spaces.emplace_back("full", build(1));
    fix.spaces.emplace_back("truncated", build(grid / n));

    std::vector<int> positions;
    for (int p = 0; p < 2 * grid + 1; ++p)
        positions.push_back(p);
    for (int i = grid / n; i <= grid; ++i)
        positions.push_back(2 * grid + i);
    fix.index_sets.emplace_back("truncated_in_full", std::move(positions));

    fix.references.push_back({"hausdorff_full", 1.0 / (2.0 * n),
                              "midpoint of the dropped horizontal piece"});
    fix.references.push_back({"vertical_diam", 2.0, ""});
    fix.references.push_back({"horizontal_diam", 1.0 - 1.0 / n,
                              "kept horizontal component, up to rounding"});
    fix.references.push_back({"level", static_cast<double>(n), "parameter n"});
    fix.references.push_back({"grid", static_cast<double>(grid), "samples per unit"});
    return fix;
}

MapPair triode_squeeze_pair(const Fixture& finer, const Fixture& coarser) {
    const int grid = static_cast<int>(finer.reference("grid"));
    const int m = static_cast<int>(finer.reference("level"));
    const int n = static_cast<int>(coarser.reference("level"));
    if (static_cast<int>(coarser.reference("grid")) != grid)
        throw DomainError(DomainError::Code::BadParameters,
                          "the two tripods must share one grid");
    if (m <= n)
        throw DomainError(DomainError::Code::BadParameters,
                          "the first tripod must be the finer one");

    const int vertical = 2 * grid + 1;
    const auto horizontal_index = [&](int level, int i) {
        return vertical + (i - grid / level);
    };

    MapPair p;
    p.f.resize(finer.space("truncated").size());
    p.g.resize(coarser.space("truncated").size());
    for (int v = 0; v < vertical; ++v) {
        p.f[v] = v;
        p.g[v] = v;
    }
    for (int i = grid / m; i <= grid; ++i)
        p.f[horizontal_index(m, i)] = horizontal_index(n, std::max(i, grid / n));
    for (int i = grid / n; i <= grid; ++i)
        p.g[horizontal_index(n, i)] = horizontal_index(m, i);
    return p;
}

CheckReport counterexample_checks(std::uint64_t budget) {
    CheckReport report;
    const auto add = [&](CheckRow row) {
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    };
    const auto line_grid = [](int parts) {
        std::vector<double> values;
        for (int i = 0; i <= parts; ++i)
            values.push_back(static_cast<double>(i) / parts);
        const int size = parts + 1;
        std::vector<double> flat(static_cast<size_t>(size) * size, 0.0);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                flat[static_cast<size_t>(i) * size + j] = std::abs(values[i] - values[j]);
        return FiniteMetricSpace::unchecked(size, std::move(flat));
    };

    {
        // grids of one interval at two rates stay within the common
        // Hausdorff distance 1/8
        const double value = gh_exact(line_grid(4), line_grid(8)).value;
        add({"unit_grid_pair", value, 0.125, value <= 0.125 + 1e-12,
             "distance between the 1/4 and 1/8 grids of [0,1]"});
    }
    {
        // connected path model against the edgeless model of the same metric
        const FiniteMetricSpace grid10 = line_grid(10);
        std::vector<std::pair<int, int>> path;
        for (int i = 0; i < 10; ++i)
            path.emplace_back(i, i + 1);
        const CombinatorialSpace connected =
            CombinatorialSpace::validated(grid10, std::move(path));
        const CombinatorialSpace edgeless = CombinatorialSpace::validated(grid10, {});
        const double value = ghc_exact(connected, edgeless).value;
        add({"path_vs_edgeless", value, 0.5, value == 0.5,
             "edge-respecting maps to an edgeless model are constant per component"});
    }
    {
        // codistortion floor: if f misses a far point, no companion g helps
        const FiniteMetricSpace three = line_grid(2);   // {0, 1/2, 1}
        MapPair p;
        p.f = {0, 1, 1};                                // image misses the far end
        double best = std::numeric_limits<double>::infinity();
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    p.g = {a, b, c};
                    best = std::min(best, codistortion(p, three, three));
                }
        add({"image_cover_floor", best, 0.5, best >= 0.5 - 1e-12,
             "codistortion never drops below the distance from the missed point to the "
             "image"});
    }

    for (int n = 2; n <= 4; ++n) {
        const Fixture tri = build_triode(n, 24);
        const auto& full = tri.space("full");
        const double got = hausdorff(full.metric(), tri.index_set("truncated_in_full"),
                                     [&] {
                                         std::vector<int> all(full.size());
                                         for (int i = 0; i < full.size(); ++i)
                                             all[i] = i;
                                         return all;
                                     }());
        add({"triode_hausdorff_" + std::to_string(n), got, tri.reference("hausdorff_full"),
             got == tri.reference("hausdorff_full"),
             "ambient Hausdorff distance of the truncated tripod"});

        const double floor_ = ghc_lower_component_split(full, tri.space("truncated"));
        const double ref = 0.5 * (1.0 - 1.0 / n);
        add({"triode_connected_floor_" + std::to_string(n), floor_, ref,
             floor_ >= ref - 1e-12,
             "a connected tripod cannot land in either component cheaply"});
    }

    {
        const Fixture t3 = build_triode(3, 24);
        const Fixture t2 = build_triode(2, 24);
        SearchOptions options;
        options.budget = budget;
        options.initial = triode_squeeze_pair(t3, t2);
        const double value =
            ghc_exact(t3.space("truncated"), t2.space("truncated"), options).value;
        const double ref = 1.0 / 6.0 + 1.0 / 24.0;
        add({"triode_squeeze_3_2", value, ref, value <= ref + 1e-12,
             "squeeze seed keeps the truncated tripods close even under a node budget"});
    }

    return report;
}

} // namespace ghdist
