#pragma once

// Degree-based topological indices. The zeroth-order general Randic index
// sums d(v)^alpha over vertices; alpha = 2 is the first Zagreb index and
// alpha = -1/2 the zeroth-order Randic index. The edge variant sums
// (d(u)d(v))^alpha over edges.

#include <cmath>
#include <stdexcept>

#include "qtr/graph.hpp"

namespace qtr {

inline constexpr double kDefaultTolerance = 1e-9;

inline bool approx_equal(double a, double b, double rtol = kDefaultTolerance) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rtol * std::max(scale, 1e-300);
}

/// Real exponent with the standing assumption alpha != 0.
class Exponent {
public:
    explicit Exponent(double alpha) : alpha_(alpha) {
        if (alpha == 0.0) throw std::invalid_argument("Exponent: alpha must be nonzero");
        if (!std::isfinite(alpha)) throw std::invalid_argument("Exponent: alpha must be finite");
    }

    double value() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Sum of d^alpha over the multiset, one pow per distinct degree. Graphs with
/// equal degree multisets get bit-identical values, which is what lets the
/// verifier group extremal classes by exact comparison.
inline double zeroth_order_general_randic(const DegreeMultiset& degrees, Exponent alpha) {
    double total = 0.0;
    for (auto [degree, mult] : degrees.counts()) {
        if (degree == 0 && alpha.value() < 0)
            throw std::domain_error("zeroth_order_general_randic: degree 0 with negative alpha");
        total += mult * std::pow(static_cast<double>(degree), alpha.value());
    }
    return total;
}

inline double zeroth_order_general_randic(const Graph& g, Exponent alpha) {
    return zeroth_order_general_randic(degree_multiset(g), alpha);
}

/// General Randic index over edges; alpha = -1/2 is the classical index.
inline double general_randic_edge(const Graph& g, Exponent alpha) {
    double total = 0.0;
    for (auto [u, v] : g.edges()) {
        double product = static_cast<double>(g.degree(u)) * g.degree(v);
        total += std::pow(product, alpha.value());
    }
    return total;
}

}  // namespace qtr
