#pragma once

// Exhaustive labeled enumeration at desk scale: every labeled connected
// graph on n <= 7 vertices (all 2^(n(n-1)/2) edge subsets, filtered), and
// every labeled tree on n <= 9 vertices via the Prufer bijection.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qtr/graph.hpp"

namespace qtr {

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxTreeEnumerationOrder = 9;

/// Graph from an edge-subset mask. Bit b corresponds to the b-th pair (i,j),
/// i < j, in lexicographic order.
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(i, j);
    return g;
}

inline std::uint64_t edge_mask_of(const Graph& g) {
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j, ++bit)
            if (g.has_edge(i, j)) mask |= std::uint64_t{1} << bit;
    return mask;
}

/// Every labeled connected simple graph on n vertices exactly once, in
/// ascending edge-mask order. Returns the number visited (4 for n=3, 38 for
/// n=4). Larger orders must come in as graph6 streams instead.
template <typename Callback>
long long enumerate_connected_graphs(int n, Callback&& visit) {
    if (n < 2 || n > kMaxEnumerationOrder)
        throw std::invalid_argument(
            "enumerate_connected_graphs: order must be in 2..7; for larger graphs "
            "supply a graph6 stream");
    const int bits = n * (n - 1) / 2;
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (g.size() < n - 1) continue;
        if (!is_connected(g)) continue;
        ++count;
        visit(g);
    }
    return count;
}

/// Decode a Prufer sequence (length n-2, symbols 0..n-1) into its labeled
/// tree on n vertices.
inline Graph prufer_to_tree(int n, std::span<const int> seq) {
    if (n < 2) throw std::invalid_argument("prufer_to_tree: order must be at least 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer_to_tree: sequence length must be n-2");
    std::vector<int> remaining_degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw std::invalid_argument("prufer_to_tree: symbol out of range");
        ++remaining_degree[static_cast<std::size_t>(s)];
    }
    Graph g(n);
    std::uint64_t leaf_pool = 0;
    for (int v = 0; v < n; ++v)
        if (remaining_degree[static_cast<std::size_t>(v)] == 1) leaf_pool |= std::uint64_t{1} << v;
    for (int s : seq) {
        int leaf = std::countr_zero(leaf_pool);
        leaf_pool &= leaf_pool - 1;
        g.add_edge(leaf, s);
        if (--remaining_degree[static_cast<std::size_t>(s)] == 1)
            leaf_pool |= std::uint64_t{1} << s;
    }
    int a = std::countr_zero(leaf_pool);
    leaf_pool &= leaf_pool - 1;
    int b = std::countr_zero(leaf_pool);
    g.add_edge(a, b);
    return g;
}

/// Every labeled tree on n vertices exactly once (n^(n-2) of them for
/// n >= 2), by running through all Prufer sequences in odometer order.
template <typename Callback>
long long enumerate_labeled_trees(int n, Callback&& visit) {
    if (n < 1 || n > kMaxTreeEnumerationOrder)
        throw std::invalid_argument("enumerate_labeled_trees: order must be in 1..9");
    if (n == 1) {
        visit(Graph(1));
        return 1;
    }
    if (n == 2) {
        visit(make_graph(2, {{0, 1}}));
        return 1;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    long long count = 0;
    while (true) {
        visit(prufer_to_tree(n, seq));
        ++count;
        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    return count;
}

}  // namespace qtr
