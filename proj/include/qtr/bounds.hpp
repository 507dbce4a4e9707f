#pragma once

// Closed forms for every theorem bound, the difference function
// f(x) = x^alpha - (x+1)^alpha, the almost-equal / constrained partition
// optima, and the extremal-tree degree classes.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtr/graph.hpp"
#include "qtr/indices.hpp"

namespace qtr {

enum class TheoremId {
    T1_min_neg,  // alpha < 0, minimum
    T2_max_neg,  // alpha < 0, maximum
    T3_min_lin,  // alpha = 1, minimum
    T3_max_lin,  // alpha = 1, maximum
    T4_min_sup,  // alpha > 1, minimum
    T4_max_sup,  // alpha > 1, maximum
    T5_max_mid,  // 0 < alpha < 1, maximum
    T6_min_mid,  // 0 < alpha < 1, minimum
};

enum class ExtremalFamily {
    join_path,          // K_k + P_{n-k}
    bullet_star,        // K_1 bullet S_{n-1}
    bullet_bistar,      // complement of K_k bullet S_{n-k-2,2}
    join_star,          // K_k + S_{n-k}
    degree23,           // multiset {2^(n-2k+2), 3^(2k-2)}
    join_tree_any,      // K_k + T for any tree T on n-k vertices
    quasi_degree2_any,  // every quasi vertex of degree 2 (T3 lower equality)
};

enum class BoundSide { lower, upper };

inline std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1_min_neg: return "T1_min_neg";
        case TheoremId::T2_max_neg: return "T2_max_neg";
        case TheoremId::T3_min_lin: return "T3_min_lin";
        case TheoremId::T3_max_lin: return "T3_max_lin";
        case TheoremId::T4_min_sup: return "T4_min_sup";
        case TheoremId::T4_max_sup: return "T4_max_sup";
        case TheoremId::T5_max_mid: return "T5_max_mid";
        case TheoremId::T6_min_mid: return "T6_min_mid";
    }
    throw std::logic_error("theorem_name: unknown id");
}

inline std::string extremal_family_name(ExtremalFamily family) {
    switch (family) {
        case ExtremalFamily::join_path: return "join_path";
        case ExtremalFamily::bullet_star: return "bullet_star";
        case ExtremalFamily::bullet_bistar: return "bullet_bistar";
        case ExtremalFamily::join_star: return "join_star";
        case ExtremalFamily::degree23: return "degree23";
        case ExtremalFamily::join_tree_any: return "join_tree_any";
        case ExtremalFamily::quasi_degree2_any: return "quasi_degree2_any";
    }
    throw std::logic_error("extremal_family_name: unknown family");
}

struct TheoremCase {
    TheoremId id{};
    int n = 0;
    int k = 0;
    Exponent alpha{1.0};
};

/// Validates the alpha regime and the (n, k) hypotheses of the theorem.
inline TheoremCase make_case(TheoremId id, int n, int k, double alpha) {
    Exponent a(alpha);
    const bool neg = alpha < 0;
    const bool lin = alpha == 1.0;
    const bool sup = alpha > 1.0;
    const bool mid = alpha > 0.0 && alpha < 1.0;
    switch (id) {
        case TheoremId::T1_min_neg:
        case TheoremId::T2_max_neg:
            if (!neg) throw std::invalid_argument(theorem_name(id) + " requires alpha < 0");
            break;
        case TheoremId::T3_min_lin:
        case TheoremId::T3_max_lin:
            if (!lin) throw std::invalid_argument(theorem_name(id) + " requires alpha = 1");
            break;
        case TheoremId::T4_min_sup:
        case TheoremId::T4_max_sup:
            if (!sup) throw std::invalid_argument(theorem_name(id) + " requires alpha > 1");
            break;
        case TheoremId::T5_max_mid:
        case TheoremId::T6_min_mid:
            if (!mid) throw std::invalid_argument(theorem_name(id) + " requires 0 < alpha < 1");
            break;
    }
    if (n < 3) throw std::invalid_argument(theorem_name(id) + " requires n >= 3");
    if (k < 1) throw std::invalid_argument(theorem_name(id) + " requires k >= 1");
    if ((id == TheoremId::T2_max_neg || id == TheoremId::T6_min_mid) && k >= 2 && n < 4)
        throw std::invalid_argument(theorem_name(id) + " with k >= 2 requires n >= 4");
    return TheoremCase{id, n, k, a};
}

struct BoundResult {
    double value = 0.0;
    ExtremalFamily family{};
    BoundSide side{};
};

inline BoundResult bound_value(const TheoremCase& c) {
    const double a = c.alpha.value();
    const double n = c.n;
    const double k = c.k;
    switch (c.id) {
        case TheoremId::T1_min_neg:
        case TheoremId::T5_max_mid: {
            double value = k * std::pow(n - 1, a) + 2 * std::pow(k + 1, a) +
                           (n - k - 2) * std::pow(k + 2, a);
            return {value, ExtremalFamily::join_path,
                    c.id == TheoremId::T1_min_neg ? BoundSide::lower : BoundSide::upper};
        }
        case TheoremId::T2_max_neg:
        case TheoremId::T6_min_mid: {
            BoundSide side = c.id == TheoremId::T2_max_neg ? BoundSide::upper : BoundSide::lower;
            if (c.k == 1) {
                double value = std::pow(n - 1, a) + std::pow(2.0, a + 1) + (n - 3);
                return {value, ExtremalFamily::bullet_star, side};
            }
            double value = std::pow(n - 2, a) + k * std::pow(2.0, a) + std::pow(k + 2, a) +
                           (n - k - 2);
            return {value, ExtremalFamily::bullet_bistar, side};
        }
        case TheoremId::T3_min_lin:
            return {2.0 * (n + k - 1), ExtremalFamily::quasi_degree2_any, BoundSide::lower};
        case TheoremId::T3_max_lin:
            return {2.0 * n * (k + 1) - k * (k + 3) - 2.0, ExtremalFamily::join_tree_any,
                    BoundSide::upper};
        case TheoremId::T4_min_sup: {
            double value = (n - 2 * k + 2) * std::pow(2.0, a) + (2 * k - 2) * std::pow(3.0, a);
            return {value, ExtremalFamily::degree23, BoundSide::lower};
        }
        case TheoremId::T4_max_sup: {
            double value = (k + 1) * std::pow(n - 1, a) + (n - k - 1) * std::pow(k + 1, a);
            return {value, ExtremalFamily::join_star, BoundSide::upper};
        }
    }
    throw std::logic_error("bound_value: unknown theorem id");
}

/// f(x) = x^alpha - (x+1)^alpha: strictly decreasing for alpha < 0 or
/// alpha > 1, strictly increasing for 0 < alpha < 1.
inline double f_delta(double x, Exponent alpha) {
    if (!(x > 0)) throw std::invalid_argument("f_delta: x must be positive");
    return std::pow(x, alpha.value()) - std::pow(x + 1, alpha.value());
}

struct PartitionOptimum {
    std::vector<int> parts;  // canonical: descending
    double value = 0.0;
};

struct Lemma7Result {
    PartitionOptimum optimum;
    std::optional<PartitionOptimum> second;  // constrained mode only
};

struct PartitionProblem {
    int parts = 0;               // number of positive integer parts
    int total = 0;               // their sum
    Exponent alpha{2.0};         // alpha outside {0, 1}
    std::optional<int> min_x2;   // constrained mode: lower bound m on x_2 (with x_1 >= x_2)
};

namespace detail {

inline double power_sum(const std::vector<int>& parts, Exponent alpha) {
    double total = 0.0;
    for (int x : parts) total += std::pow(static_cast<double>(x), alpha.value());
    return total;
}

inline void check_partition_alpha(Exponent alpha) {
    if (alpha.value() == 1.0)
        throw std::invalid_argument("partition optimum: alpha = 1 makes every split equal");
}

}  // namespace detail

/// Free mode: parts pairwise within 1 of each other; minimizes the power sum
/// for alpha < 0 or alpha > 1 and maximizes it for 0 < alpha < 1.
inline Lemma7Result lemma7_free(int parts, int total, Exponent alpha) {
    detail::check_partition_alpha(alpha);
    if (parts < 1) throw std::invalid_argument("lemma7_free: need at least one part");
    if (total < parts)
        throw std::invalid_argument("lemma7_free: total must be at least the part count");
    int q = total / parts;
    int r = total % parts;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(parts));
    for (int i = 0; i < r; ++i) out.push_back(q + 1);
    for (int i = r; i < parts; ++i) out.push_back(q);
    return {PartitionOptimum{out, detail::power_sum(out, alpha)}, std::nullopt};
}

/// Constrained mode (x_1 >= x_2 >= m, remaining parts >= 1): the optimum is
/// (p-m-n+2, m, 1, ..., 1); for alpha < 0 or alpha > 1 it maximizes, for
/// 0 < alpha < 1 it minimizes. The stated second optimum
/// (p-m-n+1, m+1, 1, ..., 1) is feasible only for p >= 2m+n; at
/// p = 2m+n-1 the only other multiset is {m, m, 2, 1^(n-3)} (needs m >= 2
/// and n >= 3), and at p = 2m+n-2 the optimum is the unique feasible
/// multiset, so no second exists.
inline Lemma7Result lemma7_constrained(int parts, int total, int m, Exponent alpha) {
    detail::check_partition_alpha(alpha);
    if (parts < 2) throw std::invalid_argument("lemma7_constrained: need at least two parts");
    if (m < 1) throw std::invalid_argument("lemma7_constrained: m must be at least 1");
    if (total < 2 * m + parts - 2)
        throw std::invalid_argument("lemma7_constrained: infeasible, need total >= 2m+n-2");

    std::vector<int> best;
    best.push_back(total - m - parts + 2);
    best.push_back(m);
    for (int i = 2; i < parts; ++i) best.push_back(1);
    Lemma7Result out{PartitionOptimum{best, detail::power_sum(best, alpha)}, std::nullopt};

    if (total >= 2 * m + parts) {
        std::vector<int> second;
        second.push_back(total - m - parts + 1);
        second.push_back(m + 1);
        for (int i = 2; i < parts; ++i) second.push_back(1);
        out.second = PartitionOptimum{second, detail::power_sum(second, alpha)};
    } else if (total == 2 * m + parts - 1 && parts >= 3 && m >= 2) {
        std::vector<int> second;
        second.push_back(m);
        second.push_back(m);
        second.push_back(2);
        for (int i = 3; i < parts; ++i) second.push_back(1);
        out.second = PartitionOptimum{second, detail::power_sum(second, alpha)};
    }
    return out;
}

inline Lemma7Result lemma7_extremal(const PartitionProblem& prob) {
    if (prob.min_x2) return lemma7_constrained(prob.parts, prob.total, *prob.min_x2, prob.alpha);
    return lemma7_free(prob.parts, prob.total, prob.alpha);
}

enum class TreeRank { min1, min2, min3, max1, max2, max3 };
enum class AlphaRegime { low, mid };  // low: alpha < 0 or alpha > 1; mid: 0 < alpha < 1

inline std::string tree_rank_name(TreeRank rank) {
    switch (rank) {
        case TreeRank::min1: return "min1";
        case TreeRank::min2: return "min2";
        case TreeRank::min3: return "min3";
        case TreeRank::max1: return "max1";
        case TreeRank::max2: return "max2";
        case TreeRank::max3: return "max3";
    }
    throw std::logic_error("tree_rank_name: unknown rank");
}

inline AlphaRegime regime_of(Exponent alpha) {
    double a = alpha.value();
    if (a < 0 || a > 1) return AlphaRegime::low;
    if (a > 0 && a < 1) return AlphaRegime::mid;
    throw std::invalid_argument("regime_of: alpha = 1 has no extremal-tree regime");
}

namespace detail {

inline DegreeMultiset path_class(int n) {
    DegreeMultiset out;
    if (n == 2) {
        out.add(1, 2);
        return out;
    }
    out.add(2, n - 2);
    out.add(1, 2);
    return out;
}

inline DegreeMultiset star_class(int n) {
    DegreeMultiset out;
    out.add(n - 1);
    out.add(1, n - 1);
    return out;
}

inline DegreeMultiset bistar_class(int p, int q) {
    DegreeMultiset out;
    out.add(p);
    out.add(q);
    out.add(1, p + q - 2);
    return out;
}

/// [3, 2^(n-4), 1^3]
inline DegreeMultiset one_branch_class(int n) {
    DegreeMultiset out;
    out.add(3);
    if (n > 4) out.add(2, n - 4);
    out.add(1, 3);
    return out;
}

/// [3^2, 2^(n-6), 1^4]
inline DegreeMultiset two_branch_class(int n) {
    DegreeMultiset out;
    out.add(3, 2);
    if (n > 6) out.add(2, n - 6);
    out.add(1, 4);
    return out;
}

}  // namespace detail

/// Degree class of the tree predicted at the given rank. Classes are degree
/// multisets, not single trees: the branching classes contain several
/// non-isomorphic trees. min2/max2 need n >= 4, min3/max3 need n >= 6.
inline DegreeMultiset tree_extremal_class(int n, TreeRank rank, AlphaRegime regime) {
    if (n < 2) throw std::invalid_argument("tree_extremal_class: order must be at least 2");
    const bool needs4 = rank == TreeRank::min2 || rank == TreeRank::max2;
    const bool needs6 = rank == TreeRank::min3 || rank == TreeRank::max3;
    if (needs4 && n < 4)
        throw std::invalid_argument("tree_extremal_class: second-rank classes need n >= 4");
    if (needs6 && n < 6)
        throw std::invalid_argument("tree_extremal_class: third-rank classes need n >= 6");

    // the mid regime swaps the min and max columns
    TreeRank effective = rank;
    if (regime == AlphaRegime::mid) {
        switch (rank) {
            case TreeRank::min1: effective = TreeRank::max1; break;
            case TreeRank::min2: effective = TreeRank::max2; break;
            case TreeRank::min3: effective = TreeRank::max3; break;
            case TreeRank::max1: effective = TreeRank::min1; break;
            case TreeRank::max2: effective = TreeRank::min2; break;
            case TreeRank::max3: effective = TreeRank::min3; break;
        }
    }
    switch (effective) {
        case TreeRank::min1: return detail::path_class(n);
        case TreeRank::min2: return detail::one_branch_class(n);
        case TreeRank::min3: return detail::two_branch_class(n);
        case TreeRank::max1: return detail::star_class(n);
        case TreeRank::max2: return detail::bistar_class(n - 2, 2);
        case TreeRank::max3: return detail::bistar_class(n - 3, 3);
    }
    throw std::logic_error("tree_extremal_class: unknown rank");
}

}  // namespace qtr
