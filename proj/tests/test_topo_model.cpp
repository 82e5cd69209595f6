#include <random>
#include <vector>

#include <doctest.h>

#include "ghdist/bounds.hpp"
#include "ghdist/topo_model.hpp"
#include "support.hpp"

using namespace ghdist;

namespace {

CombinatorialSpace path_on_line(const std::vector<double>& values) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < static_cast<int>(values.size()); ++i)
        edges.emplace_back(i, i + 1);
    return CombinatorialSpace::validated(support::line_space(values), edges);
}

CombinatorialSpace edgeless(const FiniteMetricSpace& x) {
    return CombinatorialSpace::validated(x, {});
}

} // namespace

TEST_CASE("model validation normalizes the edge list") {
    const auto x = support::line_space({0, 1, 2});
    const auto m = CombinatorialSpace::validated(x, {{2, 1}, {0, 1}, {1, 2}});
    CHECK(m.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(m.adjacent(1, 0));
    CHECK(m.adjacent(1, 2));
    CHECK(!m.adjacent(0, 2));
    CHECK(m.neighbours()[1] == std::vector<int>{0, 2});

    CHECK_THROWS_AS(CombinatorialSpace::validated(x, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(CombinatorialSpace::validated(x, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(CombinatorialSpace::validated(x, {{-1, 0}}), DomainError);
}

TEST_CASE("components and total disconnection") {
    const auto x = support::line_space({0, 1, 2});
    const auto loose = edgeless(x);
    const auto parts = components(loose);
    CHECK(parts.count() == 3);
    CHECK(parts.diameters == std::vector<double>{0, 0, 0});
    CHECK(is_totally_disconnected(loose));

    const auto path = path_on_line({0, 1, 2});
    const auto joined = components(path);
    CHECK(joined.count() == 1);
    CHECK(joined.diameters == std::vector<double>{2.0});
    CHECK(joined.members[0] == std::vector<int>{0, 1, 2});
    CHECK(!is_totally_disconnected(path));

    const auto split = CombinatorialSpace::validated(support::line_space({0, 1, 5, 6}),
                                                     {{0, 1}, {2, 3}});
    const auto two = components(split);
    CHECK(two.count() == 2);
    CHECK(two.comp_of == std::vector<int>{0, 0, 1, 1});
    CHECK(two.diameters == std::vector<double>{1.0, 1.0});
}

TEST_CASE("eps graphs") {
    const auto x = support::line_space({0, 0.5, 1});
    CHECK(eps_graph(x, 0.25).edges().empty());
    CHECK(eps_graph(x, 0.5).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(eps_graph(x, 1.0).edges().size() == 3);
    CHECK_THROWS_AS(eps_graph(x, -0.5), DomainError);
}

TEST_CASE("admissibility") {
    const auto path = path_on_line({0, 1, 2});
    const auto pair = edgeless(support::line_space({0, 1}));

    CHECK(is_admissible(std::vector<int>{0, 1, 2}, path, path));
    CHECK(is_admissible(std::vector<int>{1, 1, 1}, path, pair));
    CHECK(!is_admissible(std::vector<int>{0, 1, 1}, path, pair));
    CHECK(is_admissible(std::vector<int>{0, 1}, pair, path));
    CHECK_THROWS_AS(is_admissible(std::vector<int>{0, 1}, path, path), DomainError);
    CHECK_THROWS_AS(is_admissible(std::vector<int>{0, 1, 3}, path, path), DomainError);
}

TEST_CASE("incomparability criterion") {
    const auto path = path_on_line({0, 1, 2});
    const auto loose = edgeless(support::line_space({0, 1, 2}));
    const auto point = edgeless(FiniteMetricSpace::one_point());

    CHECK(is_incomparable(path, loose));
    CHECK(!is_incomparable(loose, path));
    CHECK(!is_incomparable(path, path));
    CHECK(!is_incomparable(loose, loose));
    CHECK(is_incomparable(point, path));
    CHECK(is_incomparable(path, point));
    CHECK(is_incomparable(point, point));

    // A disconnected domain always admits a component-wise non-constant map.
    const auto split = CombinatorialSpace::validated(support::line_space({0, 1, 5, 6}),
                                                     {{0, 1}, {2, 3}});
    CHECK(!is_incomparable(split, loose));
}

TEST_CASE("edgeless models reduce the continuous distance to the plain one") {
    std::mt19937 rng(67);
    for (int round = 0; round < 20; ++round) {
        const int nx = 2 + static_cast<int>(rng() % 3);
        const int ny = 2 + static_cast<int>(rng() % 3);
        const auto x = support::random_box_metric(rng, nx);
        const auto y = support::random_cloud_metric(rng, ny, 2);
        const auto plain = gh_exact(x, y);
        const auto modelled = ghc_exact(edgeless(x), edgeless(y));
        CHECK(plain.value == modelled.value);
        CHECK(plain.certificate.f == modelled.certificate.f);
        CHECK(plain.certificate.g == modelled.certificate.g);
    }
}

TEST_CASE("a connected path against its edgeless shadow costs half the diameter") {
    const auto metric = support::line_space({0, 0.5, 1});
    const auto r = ghc_exact(path_on_line({0, 0.5, 1}), edgeless(metric));
    CHECK(r.value == 0.5);
    CHECK(gh_exact(metric, metric).value == 0.0);
}

TEST_CASE("identical models are at distance zero") {
    std::mt19937 rng(71);
    const auto m = support::random_model(rng, 5, 0.4);
    CHECK(ghc_exact(m, m).value == 0.0);
}

TEST_CASE("the plain distance never exceeds the continuous one") {
    std::mt19937 rng(73);
    for (int round = 0; round < 20; ++round) {
        const auto a = support::random_model(rng, 2 + static_cast<int>(rng() % 3), 0.5);
        const auto b = support::random_model(rng, 2 + static_cast<int>(rng() % 3), 0.5);
        CHECK(gh_exact(a.metric(), b.metric()).value <= ghc_exact(a, b).value + 1e-12);
    }
}

TEST_CASE("continuous distance satisfies the triangle inequality") {
    std::mt19937 rng(79);
    for (int round = 0; round < 15; ++round) {
        const auto a = support::random_model(rng, 3, 0.5);
        const auto b = support::random_model(rng, 4, 0.5);
        const auto c = support::random_model(rng, 3, 0.5);
        const double ab = ghc_exact(a, b).value;
        const double bc = ghc_exact(b, c).value;
        const double ac = ghc_exact(a, c).value;
        CHECK(ac <= ab + bc + 1e-9);
        CHECK(ab == ghc_exact(b, a).value);
    }
}

TEST_CASE("distance to a point is half the diameter for any model") {
    std::mt19937 rng(83);
    const auto point = edgeless(FiniteMetricSpace::one_point());
    for (double p : {0.0, 0.4, 1.0}) {
        const auto m = support::random_model(rng, 5, p);
        const double half_diam = 0.5 * invariants(m.metric()).diam;
        CHECK(ghc_exact(point, m).value == half_diam);
        CHECK(ghc_exact(m, point).value == half_diam);
    }
}

TEST_CASE("budgeted continuous search still returns an admissible pair") {
    std::mt19937 rng(89);
    const auto a = support::random_model(rng, 6, 0.4);
    const auto b = support::random_model(rng, 6, 0.4);
    SearchOptions tight;
    tight.budget = 3;
    const auto r = ghc_exact(a, b, tight);
    CHECK(r.nodes_explored <= 3);
    CHECK(is_admissible(r.certificate.f, a, b));
    CHECK(is_admissible(r.certificate.g, b, a));
    CHECK(2.0 * r.value == dis_map_pair(r.certificate, a.metric(), b.metric()));
    CHECK(r.value >= ghc_exact(a, b).value);
}

TEST_CASE("continuous search is thread independent") {
    std::mt19937 rng(97);
    const auto a = support::random_model(rng, 5, 0.4);
    const auto b = support::random_model(rng, 5, 0.4);
    SearchOptions parallel;
    parallel.threads = 3;
    const auto serial = ghc_exact(a, b);
    const auto pooled = ghc_exact(a, b, parallel);
    CHECK(serial.value == pooled.value);
    CHECK(serial.certificate.f == pooled.certificate.f);
    CHECK(serial.certificate.g == pooled.certificate.g);
}

TEST_CASE("close spaces stay equal across edgeless modelling") {
    // Regression guard: when twice the plain distance stays below the
    // smallest positive distance, the edgeless models cannot disagree.
    const auto x = support::line_space({0, 1, 2});
    const auto y = support::line_space({0, 1.01, 2});
    const double gh = gh_exact(x, y).value;
    REQUIRE(2.0 * gh < invariants(x).s_val);
    CHECK(ghc_exact(edgeless(x), edgeless(y)).value == gh);
}
