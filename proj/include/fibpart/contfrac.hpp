#pragma once

// Continued fractions 1/(alpha_1 - 1/(alpha_2 - ... - 1/alpha_q)) and the
// words over Q/Z that name the orbits of the naturals.

#include "counting.hpp"
#include "fibcore.hpp"
#include "natural.hpp"

#include <compare>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibpart {

/// Reduced nonnegative fraction num/den with den > 0.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}

    Fraction(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ <= 0) throw std::invalid_argument("fraction denominator must be positive");
        if (num_ < 0) throw std::invalid_argument("fraction numerator must be nonnegative");
        if (gcd(num_, den_) != 1) {
            throw std::invalid_argument("fraction " + str() + " is not reduced");
        }
    }

    const Natural& num() const { return num_; }
    const Natural& den() const { return den_; }

    /// 0 < num/den < 1, i.e. a letter of a word.
    bool is_proper() const { return num_ > 0 && num_ < den_; }

    /// Fractional part; reduction is preserved.
    Fraction fractional_part() const { return Fraction(num_ % den_, den_); }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend bool operator==(const Fraction&, const Fraction&) = default;

private:
    Natural num_;
    Natural den_;
};

/// Element of the free monoid on Q/Z \ {0}; empty is the unit.
class Word {
public:
    Word() = default;

    explicit Word(std::vector<Fraction> letters) : letters_(std::move(letters)) {
        for (const auto& g : letters_) {
            if (!g.is_proper()) throw std::invalid_argument("word letter " + g.str() + " is not in (0,1)");
        }
    }

    const std::vector<Fraction>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Fraction& operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    /// Free-monoid product (concatenation).
    friend Word operator*(const Word& a, const Word& b) {
        std::vector<Fraction> out = a.letters_;
        out.insert(out.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(out));
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Fraction> letters_;
};

/// <A> = D(alpha_2..alpha_q) / D(alpha_1..alpha_q). For A in A_1 the result is
/// already in lowest terms.
inline Fraction eval_cf(const AssocVector& a) {
    if (!a.in_family(1)) throw std::invalid_argument("eval_cf needs a vector in A_1, got " + to_string(a));
    const std::span<const int> all(a.alphas);
    return Fraction(d_value(all.subspan(1)), d_value(all));
}

/// c(g): the unique vector in A_1 with <c(g)> = g, by ceiling division.
inline AssocVector cf_expand(const Fraction& g) {
    if (g.num().is_zero()) throw std::invalid_argument("cf_expand of 0 is undefined");
    Natural a = g.num();
    Natural b = g.den();
    std::vector<int> alphas;
    while (!a.is_zero()) {
        Natural alpha = (b + a - 1) / a;
        if (alpha > std::numeric_limits<int>::max()) {
            throw std::out_of_range("continued fraction entry too large");
        }
        alphas.push_back(static_cast<int>(alpha));
        Natural next = a * alpha - b;
        b = std::move(a);
        a = std::move(next);
    }
    return AssocVector(std::move(alphas));
}

/// pi(n): the word naming the orbit of n. The first letter is the fractional
/// part of <A_1> and is dropped when that part is 0.
inline Word word_of(const Natural& n) {
    const auto components = assoc_multivector(zeckendorf(n));
    std::vector<Fraction> letters;
    for (std::size_t m = 0; m < components.size(); ++m) {
        Fraction g = eval_cf(components[m]);
        if (m == 0) {
            g = g.fractional_part();
            if (g.num().is_zero()) continue;
        }
        letters.push_back(std::move(g));
    }
    return Word(std::move(letters));
}

/// Product of denominators; 1 for the unit.
inline Natural delta(const Word& w) {
    Natural out = 1;
    for (const auto& g : w) out *= g.den();
    return out;
}

/// Letters joined by '*'. The unit is written "1".
inline std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += w[i].str();
    }
    return s;
}

/// Parses frac ("*" frac)* with frac := digits "/" digits. "1" and the empty
/// string denote the unit. Letters must be reduced and lie in (0,1).
inline Word parse_word(std::string_view text) {
    if (text.empty() || text == "1") return {};
    std::vector<Fraction> letters;
    std::size_t start = 0;
    while (true) {
        const std::size_t star = text.find('*', start);
        const std::string_view token =
            text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
        const std::size_t slash = token.find('/');
        if (slash == std::string_view::npos) {
            throw std::invalid_argument("malformed word letter '" + std::string(token) + "'");
        }
        Natural a, b;
        try {
            a = parse_natural(token.substr(0, slash));
            b = parse_natural(token.substr(slash + 1));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed word letter '" + std::string(token) + "'");
        }
        if (b.is_zero() || a.is_zero() || a >= b) {
            throw std::invalid_argument("word letter '" + std::string(token) + "' is not in (0,1)");
        }
        if (gcd(a, b) != 1) {
            throw std::invalid_argument("word letter '" + std::string(token) + "' is not reduced");
        }
        letters.emplace_back(std::move(a), std::move(b));
        if (star == std::string_view::npos) break;
        start = star + 1;
    }
    return Word(std::move(letters));
}

}  // namespace fibpart
