#pragma once

// Simple undirected labeled graphs on at most 64 vertices. Each vertex keeps
// its neighborhood as one 64-bit mask, so induced-subgraph questions reduce
// to word operations.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtr {

inline constexpr int kMaxVertices = 64;

/// Multiset of vertex degrees: degree value -> multiplicity. This is the
/// sufficient statistic for every index computed in indices.hpp.
class DegreeMultiset {
public:
    DegreeMultiset() = default;

    explicit DegreeMultiset(std::map<int, int> counts) : counts_(std::move(counts)) {
        for (auto [degree, mult] : counts_) {
            if (degree < 0 || degree >= kMaxVertices)
                throw std::invalid_argument("DegreeMultiset: degree out of range");
            if (mult <= 0)
                throw std::invalid_argument("DegreeMultiset: multiplicity must be positive");
        }
    }

    void add(int degree, int multiplicity = 1) {
        if (degree < 0 || degree >= kMaxVertices)
            throw std::invalid_argument("DegreeMultiset: degree out of range");
        if (multiplicity <= 0)
            throw std::invalid_argument("DegreeMultiset: multiplicity must be positive");
        counts_[degree] += multiplicity;
    }

    const std::map<int, int>& counts() const noexcept { return counts_; }

    int vertex_count() const noexcept {
        int total = 0;
        for (auto [d, c] : counts_) total += c;
        return total;
    }

    long long degree_sum() const noexcept {
        long long total = 0;
        for (auto [d, c] : counts_) total += static_cast<long long>(d) * c;
        return total;
    }

    /// Descending bracket notation, e.g. {3,3,2,1,1,1} -> "[3^2,2,1^3]".
    std::string to_string() const {
        std::ostringstream out;
        out << '[';
        bool first = true;
        for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
            if (!first) out << ',';
            first = false;
            out << it->first;
            if (it->second > 1) out << '^' << it->second;
        }
        out << ']';
        return out.str();
    }

    auto operator<=>(const DegreeMultiset&) const = default;

private:
    std::map<int, int> counts_;
};

class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("Graph: order must be between 1 and 64");
        adj_.fill(0);
    }

    int order() const noexcept { return n_; }

    int size() const noexcept {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    std::uint64_t vertex_mask() const noexcept {
        return n_ == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    /// Edge list sorted lexicographically with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int u = 0; u < n_; ++u) {
            std::uint64_t higher = adj_[u] >> (u + 1);
            while (higher) {
                int v = u + 1 + std::countr_zero(higher);
                higher &= higher - 1;
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool operator==(const Graph& other) const noexcept {
        if (n_ != other.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != other.adj_[v]) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex label out of range");
    }

    int n_;
    std::array<std::uint64_t, kMaxVertices> adj_;
};

inline Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse
    return g;
}

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

/// Connectivity of the subgraph induced by `mask` (must be nonempty and a
/// subset of the vertex mask). Edges leaving the mask are ignored.
inline bool is_connected_induced(const Graph& g, std::uint64_t mask) {
    if (mask == 0 || (mask & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("is_connected_induced: bad vertex mask");
    std::uint64_t start = mask & (~mask + 1);
    std::uint64_t seen = start;
    std::uint64_t frontier = start;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & mask & ~seen;
        seen |= frontier;
    }
    return seen == mask;
}

inline int edges_induced(const Graph& g, std::uint64_t mask) {
    if ((mask & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("edges_induced: bad vertex mask");
    int twice = 0;
    std::uint64_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        twice += std::popcount(g.neighbors(v) & mask);
    }
    return twice / 2;
}

inline bool is_connected(const Graph& g) { return is_connected_induced(g, g.vertex_mask()); }

/// A tree is a connected graph with exactly n-1 edges; K_1 counts.
inline bool is_tree(const Graph& g) {
    return g.size() == g.order() - 1 && is_connected(g);
}

/// Induced subgraph on V(G) minus the masked vertices, survivors relabeled
/// 0..n-|S|-1 in ascending order of their original labels.
inline Graph delete_vertices(const Graph& g, std::uint64_t remove_mask) {
    if ((remove_mask & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("delete_vertices: vertex outside the graph");
    std::uint64_t keep = g.vertex_mask() & ~remove_mask;
    if (keep == 0) throw std::invalid_argument("delete_vertices: cannot delete every vertex");

    std::array<int, kMaxVertices> new_label{};
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) new_label[static_cast<std::size_t>(v)] = next++;

    Graph out(next);
    std::uint64_t rest = keep;
    while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t nbrs = g.neighbors(u) & keep;
        while (nbrs) {
            int v = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (u < v) out.add_edge(new_label[static_cast<std::size_t>(u)],
                                    new_label[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

inline Graph delete_vertices(const Graph& g, std::span<const int> vertices) {
    std::uint64_t mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("delete_vertices: vertex outside the graph");
        mask |= std::uint64_t{1} << v;
    }
    return delete_vertices(g, mask);
}

/// Join G+H: disjoint union plus every edge between the two sides. G keeps
/// its labels, H's labels are shifted by |V(G)|.
inline Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxVertices) throw std::invalid_argument("join: combined order exceeds 64");
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

/// Bullet product: disjoint union of G and H plus edges from every vertex of
/// G to the two designated vertices u, v of H (labels in H's own numbering).
inline Graph bullet(const Graph& g, const Graph& h, int u, int v) {
    if (u < 0 || u >= h.order() || v < 0 || v >= h.order())
        throw std::invalid_argument("bullet: attachment vertex outside H");
    if (u == v) throw std::invalid_argument("bullet: attachment vertices must differ");
    int n = g.order() + h.order();
    if (n > kMaxVertices) throw std::invalid_argument("bullet: combined order exceeds 64");
    Graph out(n);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (auto [a, b] : h.edges()) out.add_edge(g.order() + a, g.order() + b);
    for (int x = 0; x < g.order(); ++x) {
        out.add_edge(x, g.order() + u);
        out.add_edge(x, g.order() + v);
    }
    return out;
}

inline DegreeMultiset degree_multiset(const Graph& g) {
    DegreeMultiset out;
    for (int v = 0; v < g.order(); ++v) out.add(g.degree(v));
    return out;
}

/// Relabel by a permutation: vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::array<bool, kMaxVertices> hit{};
    for (int p : perm) {
        if (p < 0 || p >= g.order() || hit[static_cast<std::size_t>(p)])
            throw std::invalid_argument("relabel: not a permutation");
        hit[static_cast<std::size_t>(p)] = true;
    }
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace qtr
