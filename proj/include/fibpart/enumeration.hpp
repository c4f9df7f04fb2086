#pragma once

// Essential k-numbers: counting (Psi, Psi_Sigma), listing, the commutative
// product, and the search for the minimal n with F(n) = k.

#include "contfrac.hpp"
#include "counting.hpp"
#include "fibcore.hpp"
#include "natural.hpp"
#include "orbits.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fibpart {

namespace detail {

inline void require_positive(std::uint64_t k, const char* what) {
    if (k == 0) throw std::invalid_argument(std::string(what) + " needs k >= 1");
}

inline std::vector<std::uint64_t> divisors(std::uint64_t k) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d) continue;
        small.push_back(d);
        if (d != k / d) large.push_back(k / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t out = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        out -= out / p;
    }
    if (n > 1) out -= out / n;
    return out;
}

inline Natural binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    Natural out = 1;
    for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

/// Every letter a/b with b | k, b >= 2, ordered by (b, a).
inline std::vector<Fraction> letters_dividing(std::uint64_t k) {
    std::vector<Fraction> out;
    for (std::uint64_t b : divisors(k)) {
        if (b < 2) continue;
        for (std::uint64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) == 1) out.emplace_back(Natural(a), Natural(b));
        }
    }
    return out;
}

}  // namespace detail

/// Number of words with delta = k: Psi(1) = 1 and
/// Psi(k) = sum over divisors r > 1 of k of Psi(k/r) phi(r).
inline Natural psi(std::uint64_t k) {
    detail::require_positive(k, "psi");
    std::map<std::uint64_t, Natural> memo;
    std::function<Natural(std::uint64_t)> go = [&](std::uint64_t m) -> Natural {
        if (m == 1) return 1;
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        Natural sum = 0;
        for (std::uint64_t r : detail::divisors(m)) {
            if (r > 1) sum += go(m / r) * detail::totient(r);
        }
        memo.emplace(m, sum);
        return sum;
    };
    return go(k);
}

/// Ordered Bell numbers: B(0) = 1, B(m) = sum_{r<m} C(m,r) B(r).
inline Natural ordered_bell(unsigned m) {
    std::vector<Natural> b{1};
    for (unsigned i = 1; i <= m; ++i) {
        Natural s = 0;
        for (unsigned r = 0; r < i; ++r) s += detail::binomial(i, r) * b[r];
        b.push_back(s);
    }
    return b[m];
}

/// Bell numbers: b(0) = 1, b(m) = sum_{r<m} C(m-1,r) b(r).
inline Natural bell(unsigned m) {
    std::vector<Natural> b{1};
    for (unsigned i = 1; i <= m; ++i) {
        Natural s = 0;
        for (unsigned r = 0; r < i; ++r) s += detail::binomial(i - 1, r) * b[r];
        b.push_back(s);
    }
    return b[m];
}

/// All words (ordered letter sequences) with denominator product k.
inline std::vector<Word> words_with_delta(std::uint64_t k) {
    detail::require_positive(k, "words_with_delta");
    const auto letters = detail::letters_dividing(k);
    std::vector<Word> out;
    std::vector<Fraction> prefix;
    std::function<void(std::uint64_t)> go = [&](std::uint64_t rest) {
        if (rest == 1) {
            out.emplace_back(prefix);
            return;
        }
        for (const auto& g : letters) {
            const auto b = static_cast<std::uint64_t>(g.den());
            if (rest % b) continue;
            prefix.push_back(g);
            go(rest / b);
            prefix.pop_back();
        }
    };
    go(k);
    return out;
}

/// Sorted set E(k) of essential numbers with F = k.
struct EssentialClass {
    std::uint64_t k = 1;
    std::vector<Natural> members;
};

inline EssentialClass list_essential(std::uint64_t k) {
    EssentialClass out{k, {}};
    for (const auto& w : words_with_delta(k)) out.members.push_back(theta(w));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

/// f_{2k} - 2, the largest essential k-number.
inline Natural max_essential(std::uint64_t k) {
    detail::require_positive(k, "max_essential");
    return fib(static_cast<int>(2 * k)) - 2;
}

/// Right-aligned comparison: the shorter vector is padded on the left with
/// +infinity and the rightmost differing entry decides. less means x < y in
/// the triangle order.
inline std::strong_ordering cmp_triangle(const AssocVector& x, const AssocVector& y) {
    const std::size_t qx = x.size();
    const std::size_t qy = y.size();
    const std::size_t q = std::max(qx, qy);
    for (std::size_t from_right = 0; from_right < q; ++from_right) {
        const bool x_pad = from_right >= qx;
        const bool y_pad = from_right >= qy;
        if (x_pad && y_pad) break;
        if (x_pad) return std::strong_ordering::greater;
        if (y_pad) return std::strong_ordering::less;
        const int xv = x[qx - 1 - from_right];
        const int yv = y[qy - 1 - from_right];
        if (xv != yv) return xv <=> yv;
    }
    return std::strong_ordering::equal;
}

/// Letters stably sorted by the triangle order of their expansions.
inline Word commutative_normal_form(const Word& w) {
    std::vector<std::pair<AssocVector, Fraction>> keyed;
    keyed.reserve(w.size());
    for (const auto& g : w) keyed.emplace_back(cf_expand(g), g);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return cmp_triangle(a.first, b.first) < 0; });
    std::vector<Fraction> letters;
    letters.reserve(keyed.size());
    for (auto& [key, g] : keyed) letters.push_back(std::move(g));
    return Word(std::move(letters));
}

/// Commutative product of essential numbers.
inline Natural circle(const Natural& n1, const Natural& n2) {
    if (!is_essential(n1)) throw std::domain_error(n1.str() + " is not an essential number");
    if (!is_essential(n2)) throw std::domain_error(n2.str() + " is not an essential number");
    return theta(commutative_normal_form(word_of(n1) * word_of(n2)));
}

/// Multisets of letters with denominator product k, each as a non-decreasing
/// sequence in (den, num) order. There are Psi_Sigma(k) of them.
inline std::vector<Word> letter_multisets(std::uint64_t k) {
    detail::require_positive(k, "letter_multisets");
    const auto letters = detail::letters_dividing(k);
    std::vector<Word> out;
    std::vector<Fraction> chosen;
    std::function<void(std::uint64_t, std::size_t)> go = [&](std::uint64_t rest, std::size_t start) {
        if (rest == 1) {
            out.emplace_back(chosen);
            return;
        }
        for (std::size_t i = start; i < letters.size(); ++i) {
            const auto b = static_cast<std::uint64_t>(letters[i].den());
            if (rest % b) continue;
            chosen.push_back(letters[i]);
            go(rest / b, i);
            chosen.pop_back();
        }
    };
    go(k, 0);
    return out;
}

/// Number of commutative essential k-numbers.
inline Natural psi_sigma(std::uint64_t k) { return letter_multisets(k).size(); }

enum class MinimalSearch {
    commutative,  ///< one candidate per letter multiset
    all_words,    ///< every word with delta = k
};

struct MinimalEssential {
    Natural value;
    Word word;
};

/// M(k), the least n with F(n) = k, together with its word.
inline MinimalEssential minimal_essential_with_word(std::uint64_t k,
                                                    MinimalSearch mode = MinimalSearch::commutative) {
    detail::require_positive(k, "minimal_essential");
    std::optional<MinimalEssential> best;
    const auto candidates = mode == MinimalSearch::commutative ? letter_multisets(k) : words_with_delta(k);
    for (const auto& raw : candidates) {
        Word w = mode == MinimalSearch::commutative ? commutative_normal_form(raw) : raw;
        Natural n = theta(w);
        if (!best || n < best->value) best = MinimalEssential{std::move(n), std::move(w)};
    }
    return *best;
}

inline Natural minimal_essential(std::uint64_t k, MinimalSearch mode = MinimalSearch::commutative) {
    return minimal_essential_with_word(k, mode).value;
}

/// k is primitive when M(k) is F-prime. k = 1 counts as primitive (M(1) = 0).
inline bool is_primitive(std::uint64_t k) {
    detail::require_positive(k, "is_primitive");
    if (k == 1) return true;
    return is_f_prime(minimal_essential(k));
}

/// L_r(k) = #{ n : f_r <= n < f_{r+1}, F(n) = k } by direct scan.
inline std::uint64_t stability_count(int r, std::uint64_t k) {
    if (r < 1) throw std::invalid_argument("stability_count needs r >= 1");
    std::uint64_t count = 0;
    const Natural target = k;
    const Natural& hi = fib(r + 1);
    for (Natural n = fib(r); n < hi; ++n) {
        if (count_F(n) == target) ++count;
    }
    return count;
}

}  // namespace fibpart
