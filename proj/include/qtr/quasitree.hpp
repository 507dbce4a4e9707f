#pragma once

// Tree deletion number and membership in T_k(n), the k-generalized quasi
// trees: connected graphs where some k-subset's removal leaves a tree but no
// (k-1)-subset's removal does. Trees themselves come out as k = 0.

#include <cstdint>
#include <vector>

#include "qtr/graph.hpp"

namespace qtr {

struct QuasiClassification {
    int k = 0;
    /// Every minimum witness set, as vertex bitmasks in ascending order.
    std::vector<std::uint64_t> witnesses;
    /// n >= k+2, the order the definition needs to be non-degenerate. Holds
    /// for every connected graph on n >= 2 vertices; kept as an explicit
    /// flag so callers can report near-degenerate input.
    bool admissible = true;
};

namespace detail {

/// G minus the masked vertices is a tree: right edge count first (cheap
/// popcount arithmetic), connectivity only when that survives.
inline bool residual_is_tree(const Graph& g, std::uint64_t remove_mask) {
    std::uint64_t keep = g.vertex_mask() & ~remove_mask;
    int kept = std::popcount(keep);
    if (kept == 0) return false;
    if (edges_induced(g, keep) != kept - 1) return false;
    return is_connected_induced(g, keep);
}

}  // namespace detail

/// Minimal k with some k-subset whose removal leaves a tree, plus the
/// witnesses. Subset sizes are scanned upward; within a size, subsets are
/// visited in ascending mask order, so the witness list is canonical.
/// With collect_all_witnesses = false the scan stops at the first witness.
inline QuasiClassification tree_deletion_number(const Graph& g, bool collect_all_witnesses = true) {
    if (g.order() < 2)
        throw std::invalid_argument("tree_deletion_number: order must be at least 2");
    if (!is_connected(g))
        throw std::invalid_argument("tree_deletion_number: disconnected input");

    const int n = g.order();
    QuasiClassification out;
    for (int j = 0; j <= n - 2; ++j) {
        if (j == 0) {
            if (is_tree(g)) {
                out.k = 0;
                out.witnesses.push_back(0);
                return out;
            }
            continue;
        }
        std::vector<std::uint64_t> found;
        // Gosper's hack: all j-subsets of the low n bits, ascending.
        std::uint64_t subset = (std::uint64_t{1} << j) - 1;
        const std::uint64_t limit = g.vertex_mask();
        while (true) {
            if (detail::residual_is_tree(g, subset)) {
                found.push_back(subset);
                if (!collect_all_witnesses) break;
            }
            std::uint64_t low = subset & (~subset + 1);
            std::uint64_t ripple = subset + low;
            if (ripple < subset) break;  // wrapped past 2^64
            std::uint64_t next = ripple | (((subset ^ ripple) >> 2) / low);
            if (next > limit) break;
            subset = next;
        }
        if (!found.empty()) {
            out.k = j;
            out.witnesses = std::move(found);
            out.admissible = n >= j + 2;
            return out;
        }
    }
    // unreachable: deleting all but two adjacent vertices leaves K_2
    throw std::logic_error("tree_deletion_number: no witness found");
}

/// Membership in T_k(n) for k >= 1: the tree deletion number equals k and
/// the order is at least k+2.
inline bool is_member(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_member: k must be at least 1");
    if (g.order() < k + 2) return false;
    return tree_deletion_number(g, /*collect_all_witnesses=*/false).k == k;
}

}  // namespace qtr
