#include <cmath>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "qtr/constructions.hpp"
#include "qtr/enumeration.hpp"
#include "qtr/indices.hpp"
#include "support/oracles.hpp"

using qtr::Exponent;
using Catch::Matchers::WithinRel;

TEST_CASE("zeroth-order general Randic examples") {
    CHECK(qtr::zeroth_order_general_randic(qtr::path_graph(4), Exponent(2)) == 10.0);
    CHECK_THAT(qtr::zeroth_order_general_randic(qtr::cycle_graph(5), Exponent(-0.5)),
               WithinRel(5.0 / std::sqrt(2.0), 1e-12));
    // K_1 + P_4 evaluates to Theorem 1's bound at n=5, k=1, alpha=-1
    qtr::Graph g = qtr::join(qtr::complete_graph(1), qtr::path_graph(4));
    CHECK_THAT(qtr::zeroth_order_general_randic(g, Exponent(-1)), WithinRel(23.0 / 12.0, 1e-12));
}

TEST_CASE("edge Randic examples") {
    CHECK_THAT(qtr::general_randic_edge(qtr::path_graph(3), Exponent(-0.5)),
               WithinRel(std::sqrt(2.0), 1e-12));
    CHECK(qtr::general_randic_edge(qtr::complete_graph(3), Exponent(1)) == 12.0);
    CHECK_THAT(qtr::general_randic_edge(qtr::star_graph(4), Exponent(-0.5)),
               WithinRel(std::sqrt(3.0), 1e-12));
}

TEST_CASE("alpha = 0 and zero degrees are rejected") {
    CHECK_THROWS_AS(Exponent(0.0), std::invalid_argument);
    qtr::DegreeMultiset with_isolated;
    with_isolated.add(0);
    with_isolated.add(1);
    CHECK_THROWS_AS(qtr::zeroth_order_general_randic(with_isolated, Exponent(-1)),
                    std::domain_error);
    CHECK(qtr::zeroth_order_general_randic(with_isolated, Exponent(2)) == 1.0);
}

TEST_CASE("alpha = 1 gives exactly twice the edge count") {
    for (int n = 2; n <= 6; ++n)
        qtr::enumerate_connected_graphs(n, [&](const qtr::Graph& g) {
            CHECK(qtr::zeroth_order_general_randic(g, Exponent(1)) == 2.0 * g.size());
        });
}

TEST_CASE("isomorphism invariance") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        qtr::Graph g = oracles::random_connected_graph(rng, n, 0.4);
        qtr::Graph h = qtr::relabel(g, oracles::random_permutation(rng, n));
        for (double alpha : {-1.0, 0.5, 2.0}) {
            // multiset evaluation makes the zeroth-order index bit-identical
            CHECK(qtr::zeroth_order_general_randic(g, Exponent(alpha)) ==
                  qtr::zeroth_order_general_randic(h, Exponent(alpha)));
            CHECK_THAT(qtr::general_randic_edge(g, Exponent(alpha)),
                       WithinRel(qtr::general_randic_edge(h, Exponent(alpha)), 1e-12));
        }
    }
}

TEST_CASE("multiset sufficiency") {
    // two non-isomorphic trees in the class [3,2^2,1^3]
    qtr::Graph caterpillar = qtr::make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    qtr::Graph spider = qtr::make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
    REQUIRE(qtr::degree_multiset(caterpillar) == qtr::degree_multiset(spider));
    for (double alpha : {-2.0, -0.5, 0.25, 1.0, 2.0, 3.0})
        CHECK(qtr::zeroth_order_general_randic(caterpillar, Exponent(alpha)) ==
              qtr::zeroth_order_general_randic(spider, Exponent(alpha)));
}

TEST_CASE("Lemma 2: adding an edge moves the index strictly") {
    for (int n = 2; n <= 5; ++n)
        qtr::enumerate_connected_graphs(n, [&](const qtr::Graph& g) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    qtr::Graph extended = g;
                    extended.add_edge(u, v);
                    for (double alpha : {-1.0, 0.5, 2.0}) {
                        double before = qtr::zeroth_order_general_randic(g, Exponent(alpha));
                        double after =
                            qtr::zeroth_order_general_randic(extended, Exponent(alpha));
                        if (alpha < 0)
                            CHECK(after < before);
                        else
                            CHECK(after > before);
                    }
                }
        });
}

TEST_CASE("Lemma 5: the edge transfer moves the index strictly") {
    for (int n = 3; n <= 5; ++n)
        qtr::enumerate_connected_graphs(n, [&](const qtr::Graph& g) {
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    for (int w = 0; w < n; ++w) {
                        if (u == v || v == w || u == w) continue;
                        if (g.has_edge(u, w) || !g.has_edge(v, w)) continue;
                        if (g.degree(u) < g.degree(v)) continue;
                        qtr::Graph transfer(n);
                        for (auto [a, b] : g.edges())
                            if (!(a == std::min(v, w) && b == std::max(v, w)))
                                transfer.add_edge(a, b);
                        transfer.add_edge(u, w);
                        for (double alpha : {-1.0, 0.5, 2.0}) {
                            if (alpha < 0 && g.degree(v) == 1) continue;  // isolates v
                            double before = qtr::zeroth_order_general_randic(g, Exponent(alpha));
                            double after =
                                qtr::zeroth_order_general_randic(transfer, Exponent(alpha));
                            if (alpha > 0 && alpha < 1)
                                CHECK(after < before);
                            else
                                CHECK(after > before);
                        }
                    }
        });
}
