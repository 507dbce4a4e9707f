// temporary probe: theorem-side consequences of the pendant-witness classes,
// plus the add-edge monotonicity of the tree deletion number
#include <bit>
#include <iostream>

#include "qtr/enumeration.hpp"
#include "qtr/graph.hpp"
#include "qtr/graph6.hpp"
#include "qtr/indices.hpp"
#include "qtr/quasitree.hpp"

int main() {
    // net graph consequences at (6,2)
    qtr::Graph net = qtr::graph6_decode("ExQ?");
    std::cout << "net: m=" << net.size() << " k=" << qtr::tree_deletion_number(net).k
              << " R1=" << qtr::zeroth_order_general_randic(net, qtr::Exponent(1))
              << " R2=" << qtr::zeroth_order_general_randic(net, qtr::Exponent(2))
              << " R(-1)=" << qtr::zeroth_order_general_randic(net, qtr::Exponent(-1))
              << " R(0.5)=" << qtr::zeroth_order_general_randic(net, qtr::Exponent(0.5)) << "\n";

    // monotonicity: does tdn(G+uv) <= tdn(G)+1 hold at n <= 6? also track max drop
    int worst_increase = 0, worst_drop = 0;
    for (int n = 3; n <= 6; ++n) {
        qtr::enumerate_connected_graphs(n, [&](const qtr::Graph& g) {
            int k = qtr::tree_deletion_number(g, false).k;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    qtr::Graph extended = g;
                    extended.add_edge(u, v);
                    int k2 = qtr::tree_deletion_number(extended, false).k;
                    worst_increase = std::max(worst_increase, k2 - k);
                    worst_drop = std::max(worst_drop, k - k2);
                }
        });
    }
    std::cout << "max tdn increase on edge add: " << worst_increase
              << ", max drop: " << worst_drop << "\n";

    // per-graph biconditional: m >= n+k-1  <=>  some witness with all degrees >= 2
    long long mismatch = 0;
    for (int n = 2; n <= 6; ++n) {
        qtr::enumerate_connected_graphs(n, [&](const qtr::Graph& g) {
            auto cls = qtr::tree_deletion_number(g);
            if (cls.k == 0) return;
            bool bound_ok = g.size() >= n + cls.k - 1;
            bool some_ge2 = false;
            for (auto w : cls.witnesses) {
                bool all = true;
                auto rest = w;
                while (rest) {
                    int z = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (g.degree(z) < 2) all = false;
                }
                if (all) some_ge2 = true;
            }
            if (bound_ok != some_ge2) ++mismatch;
        });
    }
    std::cout << "bound<->exists-witness-all-ge2 mismatches: " << mismatch << "\n";
    return 0;
}
