#pragma once

#include "natural.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace fibpart {

/// Dense polynomial in t with signed arbitrary-precision coefficients.
/// coeffs()[h] is the coefficient of t^h; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Natural> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static IntPolynomial one() { return IntPolynomial({1}); }

    /// t^k
    static IntPolynomial monomial(std::size_t k, Natural c = 1) {
        std::vector<Natural> v(k + 1);
        v[k] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    /// phi_alpha(t) = t + t^2 + ... + t^alpha
    static IntPolynomial phi(int alpha) {
        std::vector<Natural> v(static_cast<std::size_t>(std::max(alpha, 0)) + 1);
        for (int h = 1; h <= alpha; ++h) v[static_cast<std::size_t>(h)] = 1;
        return IntPolynomial(std::move(v));
    }

    const std::vector<Natural>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
    long order() const {
        for (std::size_t h = 0; h < coeffs_.size(); ++h) {
            if (!coeffs_[h].is_zero()) return static_cast<long>(h);
        }
        return -1;
    }

    Natural coefficient(std::size_t h) const { return h < coeffs_.size() ? coeffs_[h] : Natural(0); }

    Natural evaluate(const Natural& t) const {
        Natural acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t h = 0; h < o.coeffs_.size(); ++h) coeffs_[h] += o.coeffs_[h];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t h = 0; h < o.coeffs_.size(); ++h) coeffs_[h] -= o.coeffs_[h];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Natural> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    /// Multiplies by t^k.
    IntPolynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Natural> out(k);
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t h = 0; h < coeffs_.size(); ++h) {
            const auto& c = coeffs_[h];
            if (c.is_zero()) continue;
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            Natural mag = abs(c);
            if (h == 0 || mag != 1) s += mag.str();
            if (h >= 1) s += "t";
            if (h >= 2) s += "^" + std::to_string(h);
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Natural> coeffs_;
};

}  // namespace fibpart
