#pragma once

// Named graph families and the extremal configurations of the theorems:
// joins K_k + P_{n-k} / K_k + S_{n-k}, the bullet products over stars and
// bistars, and the degree-(2,3) family attaining the alpha > 1 lower bound.
//
// Labeling is fixed so tests can assert exact graphs: paths run 0..n-1 in
// order, stars have center 0, bistars have u = 0 and v = 1. Join and bullet
// keep the first operand's labels and shift the second's, so the join and
// bullet families carry their quasi vertices on the lowest labels, while the
// degree-(2,3) family puts them on the highest.

#include <stdexcept>
#include <string>
#include <string_view>

#include "qtr/graph.hpp"

namespace qtr {

enum class FamilyKind {
    path,
    star,
    bistar,
    complete,
    empty_graph,
    cycle,
    join_path,
    join_star,
    join_tree,
    bullet_star,
    bullet_bistar,
    degree23,
};

struct FamilySpec {
    FamilyKind kind{};
    int n = 0;  // order (path/star/cycle and the composite families)
    int k = 0;  // clique/independent-set size, quasi vertex count
    int p = 0;  // bistar sides
    int q = 0;
};

inline std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::path: return "path";
        case FamilyKind::star: return "star";
        case FamilyKind::bistar: return "bistar";
        case FamilyKind::complete: return "complete";
        case FamilyKind::empty_graph: return "empty";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::join_path: return "join_path";
        case FamilyKind::join_star: return "join_star";
        case FamilyKind::join_tree: return "join_tree";
        case FamilyKind::bullet_star: return "bullet_star";
        case FamilyKind::bullet_bistar: return "bullet_bistar";
        case FamilyKind::degree23: return "degree23";
    }
    throw std::logic_error("family_name: unknown kind");
}

inline FamilyKind family_from_name(std::string_view name) {
    for (FamilyKind kind :
         {FamilyKind::path, FamilyKind::star, FamilyKind::bistar, FamilyKind::complete,
          FamilyKind::empty_graph, FamilyKind::cycle, FamilyKind::join_path,
          FamilyKind::join_star, FamilyKind::join_tree, FamilyKind::bullet_star,
          FamilyKind::bullet_bistar, FamilyKind::degree23})
        if (family_name(kind) == name) return kind;
    throw std::invalid_argument("unknown family name: " + std::string(name));
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: order must be at least 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: order must be at least 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: order must be at least 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete_graph: order must be at least 1");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int k) {
    if (k < 1) throw std::invalid_argument("empty_graph: order must be at least 1");
    return Graph(k);
}

/// Bistar S_{p,q}(u,v): adjacent u = 0 and v = 1, u carrying p-1 pendants
/// (labels 2..p) and v carrying q-1 pendants (labels p+1..p+q-1).
inline Graph bistar_graph(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("bistar_graph: p and q must be at least 1");
    Graph g(p + q);
    g.add_edge(0, 1);
    for (int i = 0; i < p - 1; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < q - 1; ++i) g.add_edge(1, p + 1 + i);
    return g;
}

inline Graph standard_graph(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path: return path_graph(spec.n);
        case FamilyKind::star: return star_graph(spec.n);
        case FamilyKind::cycle: return cycle_graph(spec.n);
        case FamilyKind::complete: return complete_graph(spec.k);
        case FamilyKind::empty_graph: return empty_graph(spec.k);
        case FamilyKind::bistar: return bistar_graph(spec.p, spec.q);
        default:
            throw std::invalid_argument("standard_graph: " + family_name(spec.kind) +
                                        " is not a standard family");
    }
}

/// K_k + P_{n-k} or K_k + S_{n-k}. Quasi vertices are the clique, labels
/// 0..k-1. Both need n >= k+2 so the residual tree has at least two
/// vertices.
inline Graph join_family(int n, int k, FamilyKind kind) {
    if (k < 1) throw std::invalid_argument("join_family: k must be at least 1");
    if (n < k + 2) throw std::invalid_argument("join_family: order must be at least k+2");
    if (kind == FamilyKind::join_path || kind == FamilyKind::path)
        return join(complete_graph(k), path_graph(n - k));
    if (kind == FamilyKind::join_star || kind == FamilyKind::star)
        return join(complete_graph(k), star_graph(n - k));
    throw std::invalid_argument("join_family: kind must be path or star");
}

/// The bullet families of the alpha < 0 maximum / 0 < alpha < 1 minimum.
/// k = 1: K_1 bullet (center, pendant) of S_{n-1}, degrees {n-1, 2, 2, 1^(n-3)}.
/// k >= 2: complement-of-K_k bullet (u, v) of the bistar S_{n-k-2,2}(u,v),
/// degrees {n-2, k+2, 2^k, 1^(n-k-2)}; needs n >= k+4 so the bistar side
/// p = n-k-2 is at least 2.
inline Graph bullet_family(int n, int k) {
    if (k < 1) throw std::invalid_argument("bullet_family: k must be at least 1");
    if (k == 1) {
        if (n < 4) throw std::invalid_argument("bullet_family: k = 1 needs n >= 4");
        // center of S_{n-1} is 0, first pendant is 1
        return bullet(empty_graph(1), star_graph(n - 1), 0, 1);
    }
    if (n < k + 4) throw std::invalid_argument("bullet_family: k >= 2 needs n >= k+4");
    return bullet(empty_graph(k), bistar_graph(n - k - 2, 2), 0, 1);
}

/// Member of T_k(n) with degree multiset exactly {2^(n-2k+2), 3^(2k-2)};
/// k = 1 gives the cycle C_n. For k >= 2: path v_1..v_(n-k) on labels
/// 0..n-k-1, quasi vertex z_1 attached to v_1 and v_2, z_i (2 <= i < k) to
/// the internal pair v_(2i-1), v_(2i), and z_k to v_(n-k-1), v_(n-k). The k
/// triangles are vertex disjoint, which pins the tree deletion number at k,
/// and needs the 2k-2 internal attachment points distinct, i.e. n >= 3k.
/// Quasi vertices take the highest labels n-k..n-1.
inline Graph degree23_family(int n, int k) {
    if (k < 1) throw std::invalid_argument("degree23_family: k must be at least 1");
    if (k == 1) {
        if (n < 3) throw std::invalid_argument("degree23_family: k = 1 needs n >= 3");
        return cycle_graph(n);
    }
    if (n < 3 * k)
        throw std::invalid_argument(
            "degree23_family: this constructor needs n >= 3k to place disjoint "
            "triangles (the bound itself may hold for smaller n)");
    Graph out(n);
    for (int v = 0; v + 1 < n - k; ++v) out.add_edge(v, v + 1);
    const int z0 = n - k;
    out.add_edge(z0, 0);
    out.add_edge(z0, 1);
    for (int i = 2; i < k; ++i) {
        out.add_edge(z0 + i - 1, 2 * i - 2);
        out.add_edge(z0 + i - 1, 2 * i - 1);
    }
    out.add_edge(n - 1, n - k - 2);
    out.add_edge(n - 1, n - k - 1);
    return out;
}

/// Dispatcher used by the CLI construct subcommand.
inline Graph construct_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::star:
        case FamilyKind::cycle:
        case FamilyKind::complete:
        case FamilyKind::empty_graph:
        case FamilyKind::bistar:
            return standard_graph(spec);
        case FamilyKind::join_path: return join_family(spec.n, spec.k, FamilyKind::join_path);
        case FamilyKind::join_star: return join_family(spec.n, spec.k, FamilyKind::join_star);
        case FamilyKind::bullet_star:
            if (spec.k != 1)
                throw std::invalid_argument("bullet_star requires k = 1");
            return bullet_family(spec.n, 1);
        case FamilyKind::bullet_bistar:
            if (spec.k < 2)
                throw std::invalid_argument("bullet_bistar requires k >= 2");
            return bullet_family(spec.n, spec.k);
        case FamilyKind::degree23: return degree23_family(spec.n, spec.k);
        case FamilyKind::join_tree:
            throw std::invalid_argument(
                "join_tree is a class (K_k joined with any tree), not a single graph");
    }
    throw std::logic_error("construct_family: unknown kind");
}

}  // namespace qtr
