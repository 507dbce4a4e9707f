// temporary probe: inspect an edge-bound failure
#include <bit>
#include <iostream>

#include "qtr/enumeration.hpp"
#include "qtr/graph.hpp"
#include "qtr/graph6.hpp"
#include "qtr/quasitree.hpp"

int main() {
    bool shown = false;
    for (int n = 2; n <= 6 && !shown; ++n) {
        qtr::enumerate_connected_graphs(n, [&](const qtr::Graph& g) {
            if (shown) return;
            qtr::QuasiClassification cls = qtr::tree_deletion_number(g);
            if (cls.k == 0) return;
            if (g.size() >= n + cls.k - 1) return;
            shown = true;
            std::cout << "graph " << qtr::graph6_encode(g) << " n=" << n << " m=" << g.size()
                      << " k=" << cls.k << "\nedges:";
            for (auto [u, v] : g.edges()) std::cout << " (" << u << "," << v << ")";
            std::cout << "\nwitnesses:";
            for (auto w : cls.witnesses) {
                std::cout << " {";
                auto rest = w;
                while (rest) {
                    std::cout << std::countr_zero(rest) << " ";
                    rest &= rest - 1;
                }
                std::cout << "}";
            }
            std::cout << "\n";
        });
    }
    return 0;
}
