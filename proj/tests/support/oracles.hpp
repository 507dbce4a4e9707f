#pragma once

// Test-only oracles, deliberately independent of the implementation paths
// they check: subset search through the public delete_vertices/is_tree ops,
// composition search by plain recursion, isomorphism by permutation scan.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qtr/enumeration.hpp"
#include "qtr/graph.hpp"
#include "qtr/indices.hpp"

namespace oracles {

/// All size-j subsets of {0..n-1} as sorted index vectors, lexicographic.
inline std::vector<std::vector<int>> subsets_of_size(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(j));
    std::iota(pick.begin(), pick.end(), 0);
    if (j == 0) {
        out.push_back({});
        return out;
    }
    if (j > n) return out;
    while (true) {
        out.push_back(pick);
        int i = j - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - j + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < j; ++t)
            pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

struct NaiveClassification {
    int k = 0;
    std::vector<std::vector<int>> witnesses;
};

/// Subset enumeration in increasing size order through the public graph ops.
inline NaiveClassification naive_tree_deletion_number(const qtr::Graph& g) {
    const int n = g.order();
    for (int j = 0; j <= n - 2; ++j) {
        NaiveClassification result;
        result.k = j;
        for (const auto& subset : subsets_of_size(n, j)) {
            qtr::Graph residual =
                subset.empty() ? g : qtr::delete_vertices(g, std::span<const int>(subset));
            if (qtr::is_tree(residual)) result.witnesses.push_back(subset);
        }
        if (!result.witnesses.empty()) return result;
    }
    return {n - 1, {}};  // unreachable for connected inputs
}

/// Compositions of `total` into `parts` positive integers, visited in
/// lexicographic order.
template <typename Callback>
void for_each_composition(int parts, int total, Callback&& visit) {
    std::vector<int> current(static_cast<std::size_t>(parts));
    auto recurse = [&](auto&& self, int position, int remaining) -> void {
        if (position == parts - 1) {
            current[static_cast<std::size_t>(position)] = remaining;
            if (remaining >= 1) visit(current);
            return;
        }
        for (int x = 1; x <= remaining - (parts - position - 1); ++x) {
            current[static_cast<std::size_t>(position)] = x;
            self(self, position + 1, remaining - x);
        }
    };
    recurse(recurse, 0, total);
}

struct BruteExtremum {
    double value = 0.0;
    std::set<std::vector<int>> multisets;  // attaining part multisets, sorted descending
};

struct BrutePartitionResult {
    std::optional<BruteExtremum> best;
    std::optional<BruteExtremum> second;
};

/// Brute-force optimum and runner-up of sum x_i^alpha over compositions.
/// Free mode (m = nullopt): minimum for alpha < 0 or alpha > 1, maximum for
/// 0 < alpha < 1. Constrained mode (x_1 >= x_2 >= m): the opposite
/// direction, per the lemma. Values within rel closeness merge to one level.
inline BrutePartitionResult brute_partition_extrema(int parts, int total, double alpha,
                                                    std::optional<int> m) {
    // level map keyed by value; merge exact duplicates (same multiset -> same
    // double), tolerate distinct multisets at equal value as one level
    std::map<double, std::set<std::vector<int>>> by_value;
    for_each_composition(parts, total, [&](const std::vector<int>& parts_vector) {
        if (m && (parts_vector.size() < 2 || parts_vector[0] < parts_vector[1] ||
                  parts_vector[1] < *m))
            return;
        double value = 0;
        for (int x : parts_vector) value += std::pow(static_cast<double>(x), alpha);
        std::vector<int> sorted = parts_vector;
        std::sort(sorted.rbegin(), sorted.rend());
        by_value[value].insert(sorted);
    });

    // direction: free mode wants min for low regime; constrained wants max
    const bool low_regime = alpha < 0 || alpha > 1;
    const bool want_max = m ? low_regime : !low_regime;

    BrutePartitionResult out;
    if (by_value.empty()) return out;
    auto take = [&](auto iterator) {
        return BruteExtremum{iterator->first, iterator->second};
    };
    if (want_max) {
        auto it = by_value.rbegin();
        out.best = take(it);
        if (++it != by_value.rend()) out.second = take(it);
    } else {
        auto it = by_value.begin();
        out.best = take(it);
        if (++it != by_value.end()) out.second = take(it);
    }
    return out;
}

inline bool are_isomorphic_brute(const qtr::Graph& a, const qtr::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.order() && match; ++u)
            for (int v = u + 1; v < a.order() && match; ++v)
                if (a.has_edge(u, v) !=
                    b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Connected random graph: uniform random labeled tree plus extra edges.
inline qtr::Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_rate) {
    if (n == 1) return qtr::Graph(1);
    qtr::Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
    } else {
        std::uniform_int_distribution<int> vertex(0, n - 1);
        std::vector<int> prufer(static_cast<std::size_t>(n - 2));
        for (int& s : prufer) s = vertex(rng);
        qtr::Graph tree = qtr::prufer_to_tree(n, prufer);
        for (auto [u, v] : tree.edges()) g.add_edge(u, v);
    }
    std::bernoulli_distribution flip(extra_edge_rate);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && flip(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace oracles
