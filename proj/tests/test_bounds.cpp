#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "ghdist/bounds.hpp"
#include "ghdist/search.hpp"
#include "ghdist/topo_model.hpp"
#include "support.hpp"

using namespace ghdist;

namespace {

double term(const BoundReport& report, const std::string& name) {
    for (const auto& [key, value] : report.lower_terms)
        if (key == name)
            return value;
    FAIL(("missing bound term " + name).c_str());
    return 0.0;
}

CombinatorialSpace edgeless(const FiniteMetricSpace& x) {
    return CombinatorialSpace::validated(x, {});
}

} // namespace

TEST_CASE("lower bound report on simple pairs") {
    const auto x = support::line_space({0, 2});
    CHECK(lower_bounds(x, x).lower == 0.0);

    const auto wide = support::line_space({0, 4});
    const auto gap = lower_bounds(x, wide);
    CHECK(term(gap, "diameter_gap") == 1.0);
    CHECK(gap.lower >= 1.0);
    CHECK(gap.lower <= gap.upper);

    const auto a = support::line_space({0, 1});
    const auto b = support::line_space({0, 10});
    CHECK(term(lower_bounds(a, b), "spectrum_hausdorff") == 4.5);
}

TEST_CASE("separation term appears only for distinct smallest distances") {
    const auto a = support::line_space({0, 1});
    const auto b = support::line_space({0, 3});
    CHECK(term(lower_bounds(a, b), "separation_gap") == 0.5);

    const auto same = lower_bounds(a, a);
    for (const auto& [key, value] : same.lower_terms)
        CHECK(key != "separation_gap");
    CHECK(!same.notes.empty());
}

TEST_CASE("all metric lower bounds stay below the exact value") {
    std::mt19937 rng(101);
    for (int round = 0; round < 40; ++round) {
        const int nx = 1 + static_cast<int>(rng() % 4);
        const int ny = 1 + static_cast<int>(rng() % 4);
        const auto x = nx == 1 ? FiniteMetricSpace::one_point()
                               : support::random_box_metric(rng, nx);
        const auto y = ny == 1 ? FiniteMetricSpace::one_point()
                               : support::random_cloud_metric(rng, std::max(ny, 2), 2);
        const auto report = lower_bounds(x, y);
        const double exact = gh_bruteforce(x, y);
        for (const auto& [key, value] : report.lower_terms)
            CHECK(value <= exact + 1e-12);
        CHECK(exact <= report.upper + 1e-12);
    }
}

TEST_CASE("diameter upper bound") {
    const auto one = FiniteMetricSpace::one_point();
    CHECK(upper_bound_diam(one, one) == 0.0);

    const auto x = support::line_space({0, 1, 2});
    CHECK(upper_bound_diam(one, x) == 1.0);
    CHECK(gh_exact(one, x).value == 1.0);
    CHECK(upper_bound_diam(x, x) == 1.0);
}

TEST_CASE("connectivity lower bound") {
    const auto metric = support::line_space({0, 0.5, 1});
    const auto path = CombinatorialSpace::validated(metric, {{0, 1}, {1, 2}});
    const auto loose = edgeless(metric);

    CHECK(ghc_lower_connectivity(path, loose) == 0.5);
    CHECK(ghc_lower_connectivity(loose, path) == 0.5);
    CHECK(ghc_lower_connectivity(loose, loose) == 0.0);
    CHECK(ghc_exact(path, loose).value == 0.5);
}

TEST_CASE("connectivity and split bounds stay below the continuous value") {
    std::mt19937 rng(103);
    for (int round = 0; round < 20; ++round) {
        const auto a = support::random_model(rng, 2 + static_cast<int>(rng() % 3), 0.5);
        const auto b = support::random_model(rng, 2 + static_cast<int>(rng() % 3), 0.5);
        const double exact = ghc_exact(a, b).value;
        CHECK(ghc_lower_connectivity(a, b) <= exact + 1e-12);
        CHECK(ghc_lower_component_split(a, b) <= exact + 1e-12);
    }
}

TEST_CASE("bounds scale with the spaces") {
    std::mt19937 rng(107);
    const auto a = support::random_model(rng, 4, 0.5);
    const auto b = support::random_model(rng, 5, 0.5);
    const auto a2 = CombinatorialSpace::validated(scale(a.metric(), 2.0), a.edges());
    const auto b2 = CombinatorialSpace::validated(scale(b.metric(), 2.0), b.edges());

    CHECK(lower_bounds(a2.metric(), b2.metric()).lower ==
          2.0 * lower_bounds(a.metric(), b.metric()).lower);
    CHECK(upper_bound_diam(a2.metric(), b2.metric()) ==
          2.0 * upper_bound_diam(a.metric(), b.metric()));
    CHECK(ghc_lower_connectivity(a2, b2) == 2.0 * ghc_lower_connectivity(a, b));
    CHECK(ghc_lower_component_split(a2, b2) == 2.0 * ghc_lower_component_split(a, b));
}

TEST_CASE("partition upper bound") {
    const auto y = support::line_space({0, 0.1, 0.5, 0.6, 1.0});
    const std::vector<int> net{0, 2, 4};
    const auto model = edgeless(subspace(y, net));

    const double bound = ghc_upper_partition(model, y, net);
    const double cover = hausdorff(y, net, std::vector<int>{0, 1, 2, 3, 4});
    CHECK(cover == 0.1);
    CHECK(bound <= cover + 1e-12);
    CHECK(ghc_exact(model, edgeless(y)).value <= bound + 1e-12);

    const std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(ghc_upper_partition(edgeless(y), y, all) == 0.0);
}

TEST_CASE("partition upper bound rejects bad inputs") {
    const auto y = support::line_space({0, 0.5, 1.0});
    const std::vector<int> net{0, 2};
    const auto sub = subspace(y, net);

    const auto with_edges = CombinatorialSpace::validated(sub, {{0, 1}});
    CHECK_THROWS_AS(ghc_upper_partition(with_edges, y, net), DomainError);

    const auto wrong_size = edgeless(sub);
    CHECK_THROWS_AS(ghc_upper_partition(wrong_size, y, std::vector<int>{0}), DomainError);

    const auto wrong_metric = edgeless(support::line_space({0, 0.25}));
    CHECK_THROWS_AS(ghc_upper_partition(wrong_metric, y, net), DomainError);
}

TEST_CASE("random subsets obey the partition bound against brute force") {
    std::mt19937 rng(109);
    for (int round = 0; round < 15; ++round) {
        const auto y = support::random_box_metric(rng, 5);
        std::vector<int> net;
        for (int i = 0; i < y.size(); ++i)
            if (rng() % 2 == 0)
                net.push_back(i);
        if (net.empty())
            net.push_back(0);
        const auto model = edgeless(subspace(y, net));
        const double bound = ghc_upper_partition(model, y, net);
        std::vector<int> all(y.size());
        std::iota(all.begin(), all.end(), 0);
        CHECK(bound <= hausdorff(y, net, all) + 1e-12);
        CHECK(gh_bruteforce(model.metric(), y) <= bound + 1e-12);
    }
}
