#pragma once

// Canonical form by brute force: the lexicographically smallest graph6
// encoding over all vertex permutations. Two graphs get equal strings iff
// they are isomorphic. Factorial search, guarded at n <= 10; the verifier
// only ever canonicalizes the handful of extremal graphs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qtr/graph.hpp"
#include "qtr/graph6.hpp"

namespace qtr {

inline constexpr int kMaxCanonicalOrder = 10;

inline std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical_form: order must be at most 10");
    if (n == 1) return graph6_encode(g);

    // Upper-triangle bits in graph6 column order, packed MSB-first into one
    // word (at most 45 bits for n = 10), so candidates compare as integers.
    std::array<int, kMaxCanonicalOrder> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    const int bits = n * (n - 1) / 2;

    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, kMaxCanonicalOrder> best_perm = perm;
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) |
                       (g.has_edge(perm[static_cast<std::size_t>(i)],
                                   perm[static_cast<std::size_t>(j)])
                            ? 1u
                            : 0u);
        code <<= 64 - bits;  // left-justify so integer order = lexicographic bit order
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    // perm maps new label -> old vertex; invert for relabel().
    std::array<int, kMaxCanonicalOrder> inverse{};
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(best_perm[static_cast<std::size_t>(i)])] = i;
    return graph6_encode(relabel(g, std::span<const int>(inverse.data(), static_cast<std::size_t>(n))));
}

}  // namespace qtr
