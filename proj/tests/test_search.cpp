#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "ghdist/bounds.hpp"
#include "ghdist/search.hpp"
#include "support.hpp"

using namespace ghdist;

namespace {

FiniteMetricSpace random_small(std::mt19937& rng, int max_points) {
    const int n = 2 + static_cast<int>(rng() % (max_points - 1));
    return rng() % 2 == 0 ? support::random_box_metric(rng, n)
                          : support::random_cloud_metric(rng, n, 2);
}

} // namespace

TEST_CASE("distance of a space to itself is zero with the identity certificate") {
    std::mt19937 rng(3);
    const auto x = support::random_box_metric(rng, 5);
    const auto r = gh_exact(x, x);
    CHECK(r.value == 0.0);
    CHECK(!r.budget_exhausted);

    std::vector<int> identity(x.size());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(r.certificate.f == identity);
    CHECK(r.certificate.g == identity);
}

TEST_CASE("distance to the one-point space is half the diameter") {
    const auto one = FiniteMetricSpace::one_point();
    const auto x = support::line_space({0, 1, 2});
    CHECK(gh_exact(one, x).value == 1.0);
    CHECK(gh_exact(x, one).value == 1.0);
    CHECK(gh_exact(one, one).value == 0.0);
}

TEST_CASE("two two-point spaces") {
    const auto a = FiniteMetricSpace::validated({{0, 1}, {1, 0}});
    const auto b = FiniteMetricSpace::validated({{0, 2}, {2, 0}});
    CHECK(gh_bruteforce(a, b) == 0.5);
    CHECK(gh_exact(a, b).value == 0.5);
}

TEST_CASE("search value matches brute force exactly on small random pairs") {
    std::mt19937 rng(5);
    for (int round = 0; round < 60; ++round) {
        const auto x = random_small(rng, 4);
        const auto y = random_small(rng, 4);
        const auto r = gh_exact(x, y);
        CHECK(r.value == gh_bruteforce(x, y));
        CHECK(2.0 * r.value == dis_map_pair(r.certificate, x, y));
        CHECK(!r.budget_exhausted);
    }
}

TEST_CASE("the certificate is the lexicographically smallest optimal pair") {
    std::mt19937 rng(13);
    for (int round = 0; round < 10; ++round) {
        const auto x = support::random_box_metric(rng, 3);
        const auto y = support::random_cloud_metric(rng, 3, 2);

        double best = std::numeric_limits<double>::infinity();
        MapPair smallest;
        MapPair p;
        p.f.resize(3);
        p.g.resize(3);
        for (int fa = 0; fa < 27; ++fa)
            for (int ga = 0; ga < 27; ++ga) {
                p.f = {fa / 9, fa / 3 % 3, fa % 3};
                p.g = {ga / 9, ga / 3 % 3, ga % 3};
                const double dis = dis_map_pair(p, x, y);
                if (dis < best) {
                    best = dis;
                    smallest = p;
                }
            }

        const auto r = gh_exact(x, y);
        CHECK(r.value == 0.5 * best);
        CHECK(r.certificate.f == smallest.f);
        CHECK(r.certificate.g == smallest.g);
    }
}

TEST_CASE("pseudometric axioms at desk scale") {
    std::mt19937 rng(19);
    for (int round = 0; round < 25; ++round) {
        const auto x = random_small(rng, 4);
        const auto y = random_small(rng, 4);
        const auto z = random_small(rng, 4);
        const double xy = gh_exact(x, y).value;
        const double yz = gh_exact(y, z).value;
        const double xz = gh_exact(x, z).value;
        CHECK(xy == gh_exact(y, x).value);
        CHECK(xz <= xy + yz + 1e-9);
        CHECK(gh_exact(x, x).value == 0.0);
    }
}

TEST_CASE("bounds sandwich the exact value") {
    std::mt19937 rng(29);
    for (int round = 0; round < 30; ++round) {
        const auto x = random_small(rng, 5);
        const auto y = random_small(rng, 5);
        const auto report = lower_bounds(x, y);
        const double value = gh_exact(x, y).value;
        CHECK(report.lower <= value + 1e-12);
        CHECK(value <= upper_bound_diam(x, y) + 1e-12);
        CHECK(report.lower <= report.upper);
    }
}

TEST_CASE("vanishing distance forces equal spectra") {
    std::mt19937 rng(31);
    const auto x = support::random_box_metric(rng, 5);
    std::vector<int> perm{3, 0, 4, 1, 2};
    const auto y = subspace(x, perm);
    CHECK(gh_exact(x, y).value == 0.0);
    CHECK(dist_spectrum(x).values == dist_spectrum(y).values);
}

TEST_CASE("scaled copies of one space pinch the distance") {
    std::mt19937 rng(37);
    const auto x = support::random_box_metric(rng, 4);
    const double diam = invariants(x).diam;
    for (double lambda : {0.0, 0.5, 1.0, 2.0})
        for (double mu : {0.0, 0.5, 1.0, 2.0}) {
            const double value = gh_exact(scale(x, lambda), scale(x, mu)).value;
            CHECK(std::abs(value - std::abs(lambda - mu) * diam / 2) <= 1e-12);
        }
}

TEST_CASE("node budgets cut the search but never the certificate") {
    std::mt19937 rng(41);
    const auto x = support::random_box_metric(rng, 6);
    const auto y = support::random_cloud_metric(rng, 6, 3);
    const double exact = gh_exact(x, y).value;

    SearchOptions tight;
    tight.budget = 10;
    const auto r = gh_exact(x, y, tight);
    CHECK(r.nodes_explored <= 10);
    CHECK(2.0 * r.value == dis_map_pair(r.certificate, x, y));
    CHECK(r.value >= exact);
    if (!r.budget_exhausted)
        CHECK(r.value == exact);

    SearchOptions zero;
    zero.budget = 0;
    const auto z = gh_exact(x, y, zero);
    CHECK(z.nodes_explored == 0);
    CHECK(static_cast<int>(z.certificate.f.size()) == x.size());
    CHECK(2.0 * z.value == dis_map_pair(z.certificate, x, y));
    CHECK(z.value <= upper_bound_diam(x, y));
}

TEST_CASE("a seed carries its value through a zero budget") {
    std::mt19937 rng(43);
    const auto x = support::random_box_metric(rng, 5);
    const auto y = support::random_box_metric(rng, 5);
    const auto full = gh_exact(x, y);

    SearchOptions seeded;
    seeded.budget = 0;
    seeded.initial = full.certificate;
    const auto r = gh_exact(x, y, seeded);
    CHECK(r.value == full.value);

    SearchOptions bad;
    bad.initial = MapPair{{0, 0, 0}, {0, 0, 0, 0, 0}};
    CHECK_THROWS_AS(gh_exact(x, y, bad), DomainError);
}

TEST_CASE("thread count changes neither value nor certificate") {
    std::mt19937 rng(47);
    for (int round = 0; round < 8; ++round) {
        const auto x = random_small(rng, 5);
        const auto y = random_small(rng, 5);
        SearchOptions parallel;
        parallel.threads = 4;
        const auto serial = gh_exact(x, y);
        const auto pooled = gh_exact(x, y, parallel);
        CHECK(serial.value == pooled.value);
        CHECK(serial.certificate.f == pooled.certificate.f);
        CHECK(serial.certificate.g == pooled.certificate.g);
    }
}

TEST_CASE("brute force refuses oversized inputs") {
    std::mt19937 rng(53);
    const auto x = support::random_box_metric(rng, 8);
    CHECK_THROWS_AS(gh_bruteforce(x, x, 1e3), DomainError);
}

TEST_CASE("eps isometry recovery") {
    std::mt19937 rng(59);
    const auto x = support::random_box_metric(rng, 5);
    const std::vector<int> perm{4, 2, 0, 3, 1};
    const auto y = subspace(x, perm);
    const double s = invariants(x).s_val;

    const auto found = find_eps_isometry(x, y, s / 2);
    REQUIRE(found.has_value());
    CHECK(dis_map_pair(*found, x, y) <= s / 2);
    for (int i = 0; i < x.size(); ++i)
        CHECK(found->g[found->f[i]] == i);
    for (int j = 0; j < y.size(); ++j)
        CHECK(found->f[found->g[j]] == j);

    CHECK_THROWS_AS(find_eps_isometry(x, y, s), DomainError);
    CHECK_THROWS_AS(find_eps_isometry(x, y, -0.1), DomainError);

    const auto a = FiniteMetricSpace::validated({{0, 1}, {1, 0}});
    const auto b = FiniteMetricSpace::validated({{0, 2}, {2, 0}});
    CHECK(!find_eps_isometry(a, b, 0.5).has_value());
    CHECK(!find_eps_isometry(a, support::line_space({0, 1, 2}), 0.5).has_value());

    const auto one = FiniteMetricSpace::one_point();
    CHECK(find_eps_isometry(one, one, 0.0).has_value());
}

TEST_CASE("identity is recovered on identical spaces") {
    std::mt19937 rng(61);
    const auto x = support::random_box_metric(rng, 4);
    const auto found = find_eps_isometry(x, x, invariants(x).s_val / 2);
    REQUIRE(found.has_value());
    std::vector<int> identity(x.size());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(found->f == identity);
}

TEST_CASE("rigidity check") {
    const auto line = support::line_space({0, 1, 2});
    MapPair identity{{0, 1, 2}, {0, 1, 2}};

    const auto rigid = check_isometry_rigidity(line, line, identity, 0.4);
    CHECK(rigid.rigid);

    const auto refused = check_isometry_rigidity(line, line, identity, 1.0);
    CHECK(!refused.rigid);
    CHECK(!refused.reason.empty());

    // Distortion above eps leaves nothing to verify, so the claim stands.
    MapPair collapsed{{0, 0, 0}, {0, 0, 0}};
    CHECK(check_isometry_rigidity(line, line, collapsed, 0.4).rigid);
}
