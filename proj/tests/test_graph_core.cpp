#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "qtr/canonical.hpp"
#include "qtr/constructions.hpp"
#include "qtr/enumeration.hpp"
#include "qtr/graph.hpp"
#include "support/oracles.hpp"

using qtr::Graph;

TEST_CASE("make_graph builds the requested edges") {
    Graph p3 = qtr::make_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3 == qtr::path_graph(3));

    Graph k1 = qtr::make_graph(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    Graph duplicated = qtr::make_graph(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(duplicated == p3);
}

TEST_CASE("make_graph rejects bad input") {
    CHECK_THROWS_AS(qtr::make_graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(qtr::make_graph(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(qtr::make_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(qtr::make_graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(qtr::make_graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("delete_vertices relabels ascending") {
    Graph c4 = qtr::cycle_graph(4);
    CHECK(qtr::delete_vertices(c4, std::vector<int>{0}) == qtr::path_graph(3));

    Graph k4 = qtr::complete_graph(4);
    CHECK(qtr::delete_vertices(k4, std::vector<int>{0, 1}) == qtr::complete_graph(2));

    Graph p5 = qtr::path_graph(5);
    CHECK(qtr::delete_vertices(p5, std::vector<int>{}) == p5);

    CHECK_THROWS_AS(qtr::delete_vertices(p5, std::vector<int>{0, 1, 2, 3, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(qtr::delete_vertices(p5, std::vector<int>{7}), std::invalid_argument);
}

TEST_CASE("is_tree") {
    CHECK(qtr::is_tree(qtr::path_graph(4)));
    CHECK(qtr::is_tree(Graph(1)));
    CHECK_FALSE(qtr::is_tree(qtr::cycle_graph(4)));
    CHECK_FALSE(qtr::is_tree(qtr::make_graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("join matches the definition") {
    Graph j = qtr::join(qtr::complete_graph(1), qtr::path_graph(3));
    CHECK(j.size() == 5);
    qtr::DegreeMultiset expected;
    expected.add(3, 2);
    expected.add(2, 2);
    CHECK(qtr::degree_multiset(j) == expected);

    CHECK(qtr::join(qtr::complete_graph(2), qtr::complete_graph(2)) == qtr::complete_graph(4));

    Graph c4 = qtr::join(qtr::empty_graph(2), qtr::empty_graph(2));
    CHECK(qtr::canonical_form(c4) == qtr::canonical_form(qtr::cycle_graph(4)));

    CHECK_THROWS_AS(qtr::join(qtr::empty_graph(33), qtr::empty_graph(32)), std::invalid_argument);
}

TEST_CASE("bullet matches the definition") {
    CHECK(qtr::canonical_form(qtr::bullet(qtr::empty_graph(1), qtr::path_graph(2), 0, 1)) ==
          qtr::canonical_form(qtr::complete_graph(3)));

    Graph b = qtr::bullet(qtr::empty_graph(2), qtr::path_graph(2), 0, 1);
    CHECK(b.size() == 5);
    qtr::DegreeMultiset expected;
    expected.add(3, 2);
    expected.add(2, 2);
    CHECK(qtr::degree_multiset(b) == expected);

    CHECK(qtr::canonical_form(qtr::bullet(qtr::empty_graph(1), qtr::path_graph(4), 0, 3)) ==
          qtr::canonical_form(qtr::cycle_graph(5)));

    CHECK_THROWS_AS(qtr::bullet(qtr::empty_graph(1), qtr::path_graph(3), 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(qtr::bullet(qtr::empty_graph(1), qtr::path_graph(3), 0, 5),
                    std::invalid_argument);
}

TEST_CASE("degree_multiset examples") {
    qtr::DegreeMultiset star5;
    star5.add(4);
    star5.add(1, 4);
    CHECK(qtr::degree_multiset(qtr::star_graph(5)) == star5);
    CHECK(star5.to_string() == "[4,1^4]");

    qtr::DegreeMultiset c6;
    c6.add(2, 6);
    CHECK(qtr::degree_multiset(qtr::cycle_graph(6)) == c6);

    qtr::DegreeMultiset bistar;
    bistar.add(4);
    bistar.add(2);
    bistar.add(1, 4);
    CHECK(qtr::degree_multiset(qtr::bistar_graph(4, 2)) == bistar);
}

TEST_CASE("edge-count identities for join and bullet") {
    std::mt19937_64 rng(0x9e3779b9);
    for (int trial = 0; trial < 200; ++trial) {
        int ng = 1 + static_cast<int>(rng() % 6);
        int nh = 2 + static_cast<int>(rng() % 5);
        qtr::Graph g = oracles::random_connected_graph(rng, ng, 0.3);
        qtr::Graph h = oracles::random_connected_graph(rng, nh, 0.3);

        qtr::Graph joined = qtr::join(g, h);
        CHECK(joined.size() == g.size() + h.size() + ng * nh);

        int u = static_cast<int>(rng() % nh);
        int v = (u + 1 + static_cast<int>(rng() % (nh - 1))) % nh;
        qtr::Graph bulleted = qtr::bullet(g, h, u, v);
        CHECK(bulleted.size() == g.size() + h.size() + 2 * ng);

        CHECK(qtr::degree_multiset(joined).degree_sum() == 2LL * joined.size());
        CHECK(qtr::degree_multiset(bulleted).degree_sum() == 2LL * bulleted.size());
    }
}

TEST_CASE("relabel preserves the degree multiset") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        qtr::Graph g = oracles::random_connected_graph(rng, n, 0.4);
        auto perm = oracles::random_permutation(rng, n);
        qtr::Graph relabeled = qtr::relabel(g, perm);
        CHECK(qtr::degree_multiset(relabeled) == qtr::degree_multiset(g));
        CHECK(relabeled.size() == g.size());
    }
}
