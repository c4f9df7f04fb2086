#pragma once

// Fibonacci partition counting through the Zeckendorf representation.
//
// Z(n) splits into simple components (maximal runs of equal index parity).
// Each component contributes a vector of halved gaps, and the partition
// polynomial F(n;t) is the product of tridiagonal determinants D(A;t) over
// those vectors. Everything here is O(log n) arithmetic steps.

#include "fibcore.hpp"
#include "natural.hpp"
#include "polynomial.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibpart {

/// Vector of positive integers (alpha_1, ..., alpha_q) driving D(A;t).
struct AssocVector {
    std::vector<int> alphas;

    AssocVector() = default;
    explicit AssocVector(std::vector<int> a) : alphas(std::move(a)) {}
    AssocVector(std::initializer_list<int> a) : alphas(a) {}

    std::size_t size() const { return alphas.size(); }
    bool empty() const { return alphas.empty(); }
    int operator[](std::size_t r) const { return alphas[r]; }
    auto begin() const { return alphas.begin(); }
    auto end() const { return alphas.end(); }

    /// alpha_1 >= min_first and alpha_r >= 2 for r >= 2. min_first = 1 gives
    /// membership in A_1, min_first = 2 in A_2.
    bool in_family(int min_first) const {
        if (alphas.empty()) return false;
        if (alphas[0] < min_first) return false;
        for (std::size_t r = 1; r < alphas.size(); ++r) {
            if (alphas[r] < 2) return false;
        }
        return true;
    }

    friend bool operator==(const AssocVector&, const AssocVector&) = default;
    friend auto operator<=>(const AssocVector&, const AssocVector&) = default;
};

/// A_1 x ... x A_s. Empty for Z(0).
using Multivector = std::vector<AssocVector>;

inline std::string to_string(const AssocVector& a) {
    std::string s = "(";
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (r) s += ',';
        s += std::to_string(a[r]);
    }
    return s + ")";
}

inline std::string to_string(const Multivector& m) {
    if (m.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += "x";
        s += to_string(m[i]);
    }
    return s;
}

/// d(A) = alpha_1 + ... + alpha_q - q
inline long excess(const AssocVector& a) {
    long d = 0;
    for (int alpha : a) d += alpha - 1;
    return d;
}

/// Splits a nonempty 2-partition into its simple components. Inside a
/// 2-partition a parity change always comes with an odd gap, so the blocks are
/// exactly the maximal runs of equal parity.
inline std::vector<TwoPartition> canonical_form(const TwoPartition& p) {
    if (p.empty()) throw std::invalid_argument("canonical form of the empty 2-partition is undefined");
    std::vector<TwoPartition> blocks;
    std::vector<int> current{p[0]};
    for (std::size_t a = 1; a < p.size(); ++a) {
        if (parity(p[a]) != parity(p[a - 1])) {
            blocks.emplace_back(std::move(current));
            current.clear();
        }
        current.push_back(p[a]);
    }
    blocks.emplace_back(std::move(current));
    return blocks;
}

inline AssocVector assoc_vector(const TwoPartition& p) {
    if (p.empty()) throw std::invalid_argument("associated vector of the empty 2-partition is undefined");
    std::vector<int> alphas(p.size());
    alphas[0] = (p[0] - 1) / 2 + 1;
    for (std::size_t r = 1; r < p.size(); ++r) alphas[r] = (p[r] - p[r - 1]) / 2 + 1;
    return AssocVector(std::move(alphas));
}

/// alpha(I) sliced along the canonical-form block boundaries.
inline Multivector assoc_multivector(const TwoPartition& p) {
    if (p.empty()) return {};
    const auto alpha = assoc_vector(p);
    Multivector out;
    std::size_t offset = 0;
    for (const auto& block : canonical_form(p)) {
        out.emplace_back(std::vector<int>(alpha.begin() + static_cast<long>(offset),
                                          alpha.begin() + static_cast<long>(offset + block.size())));
        offset += block.size();
    }
    return out;
}

/// D(A;t) via D_r = phi_{alpha_r} D_{r-1} - t^{alpha_r + 1} D_{r-2}, D(empty) = 1.
inline IntPolynomial poly_D(std::span<const int> alphas) {
    IntPolynomial prev2;  // unused until r = 2
    IntPolynomial prev = IntPolynomial::one();
    for (std::size_t r = 0; r < alphas.size(); ++r) {
        const int alpha = alphas[r];
        IntPolynomial next = IntPolynomial::phi(alpha) * prev;
        if (r >= 1) next -= prev2.shifted(static_cast<std::size_t>(alpha + 1));
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

inline IntPolynomial poly_D(const AssocVector& a) { return poly_D(std::span<const int>(a.alphas)); }

/// D(A;1) by the integer recurrence D_r = alpha_r D_{r-1} - D_{r-2}.
inline Natural d_value(std::span<const int> alphas) {
    Natural prev2 = 0;
    Natural prev = 1;
    for (std::size_t r = 0; r < alphas.size(); ++r) {
        Natural next = alphas[r] * prev;
        if (r >= 1) next -= prev2;
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

inline Natural d_value(const AssocVector& a) { return d_value(std::span<const int>(a.alphas)); }

/// F(n;t) = D(A_1;t) ... D(A_s;t); the constant 1 for n = 0.
inline IntPolynomial fib_poly(const Natural& n) {
    IntPolynomial out = IntPolynomial::one();
    for (const auto& component : assoc_multivector(zeckendorf(n))) out *= poly_D(component);
    return out;
}

/// Number of Fibonacci partitions of n.
inline Natural count_F(const Natural& n) {
    Natural out = 1;
    for (const auto& component : assoc_multivector(zeckendorf(n))) out *= d_value(component);
    return out;
}

/// Number of Fibonacci partitions of n with exactly h parts.
inline Natural count_Fh(const Natural& n, std::size_t h) { return fib_poly(n).coefficient(h); }

/// chi(n) = F(n;-1), read off the expanded polynomial.
inline int chi_via_poly(const Natural& n) {
    return static_cast<int>(fib_poly(n).evaluate(Natural(-1)));
}

/// D(A;-1) by repeatedly shortening A:
///   alpha_q even                    -> drop the last two entries
///   alpha_q odd, alpha_{q-1} odd    -> drop the last three entries
///   alpha_q odd, alpha_{q-1} even   -> drop alpha_q and bump alpha_{q-1}
inline int d_at_minus_one(std::vector<int> a) {
    while (true) {
        const std::size_t q = a.size();
        if (q == 0) return 1;
        if (q == 1) return -parity(a[0]);
        const bool last_odd = parity(a[q - 1]) == 1;
        const bool prev_odd = parity(a[q - 2]) == 1;
        if (!last_odd) {
            a.resize(q - 2);
        } else if (prev_odd) {
            if (q == 2) return 0;  // (-1)(-1) - 1
            a.resize(q - 3);
        } else {
            a.resize(q - 1);
            a.back() += 1;
        }
    }
}

/// chi(n) via the length-reduction recursion on each component.
inline int chi_via_reduction(const Natural& n) {
    int out = 1;
    for (const auto& component : assoc_multivector(zeckendorf(n))) {
        out *= d_at_minus_one(component.alphas);
        if (out == 0) break;
    }
    return out;
}

/// chi(n) as a product over components of lambda(b)(1 - 2 lambda(a)) where
/// a/b = D(alpha_2..alpha_q) / D(alpha_1..alpha_q).
inline int chi_via_fractions(const Natural& n) {
    int out = 1;
    for (const auto& component : assoc_multivector(zeckendorf(n))) {
        const std::span<const int> all(component.alphas);
        const Natural den = d_value(all);
        const Natural num = d_value(all.subspan(1));
        out *= parity(den) * (1 - 2 * parity(num));
        if (out == 0) break;
    }
    return out;
}

/// chi(n) = F(n;-1), always in {-1, 0, 1}.
inline int chi(const Natural& n) { return chi_via_reduction(n); }

}  // namespace fibpart
