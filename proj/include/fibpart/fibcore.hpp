#pragma once

// Fibonacci numbers indexed f_0 = f_1 = 1, f_2 = 2, f_3 = 3, f_4 = 5, ...
// and Zeckendorf (2-partition) index sets over them.

#include "natural.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibpart {

/// Largest index served by fib().
inline constexpr int max_fib_index = 4000;

namespace detail {

inline const std::vector<Natural>& fib_table() {
    static const std::vector<Natural> table = [] {
        std::vector<Natural> t(max_fib_index + 1);
        t[0] = 1;
        t[1] = 1;
        for (int i = 2; i <= max_fib_index; ++i) t[i] = t[i - 1] + t[i - 2];
        return t;
    }();
    return table;
}

}  // namespace detail

/// f_i with f_0 = f_1 = 1. f_0 only seeds the recurrence and is never a part.
inline const Natural& fib(int i) {
    if (i < 0 || i > max_fib_index) {
        throw std::out_of_range("Fibonacci index out of range: " + std::to_string(i));
    }
    return detail::fib_table()[static_cast<std::size_t>(i)];
}

/// Strictly increasing index set with consecutive gaps >= 2. The empty set is Z(0).
class TwoPartition {
public:
    TwoPartition() = default;

    explicit TwoPartition(std::vector<int> indices) : indices_(std::move(indices)) {
        for (std::size_t a = 0; a < indices_.size(); ++a) {
            if (indices_[a] < 1) {
                throw std::invalid_argument("2-partition index must be >= 1, got " +
                                            std::to_string(indices_[a]));
            }
            if (a > 0 && indices_[a] - indices_[a - 1] < 2) {
                throw std::invalid_argument("2-partition indices " + std::to_string(indices_[a - 1]) +
                                            " and " + std::to_string(indices_[a]) +
                                            " differ by less than 2");
            }
        }
    }

    TwoPartition(std::initializer_list<int> indices) : TwoPartition(std::vector<int>(indices)) {}

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    int front() const { return indices_.front(); }
    int back() const { return indices_.back(); }
    int operator[](std::size_t a) const { return indices_[a]; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
    friend auto operator<=>(const TwoPartition&, const TwoPartition&) = default;

private:
    std::vector<int> indices_;
};

/// Sum of f_i over a strict index set.
inline Natural content(std::span<const int> indices) {
    Natural sum = 0;
    for (int i : indices) {
        if (i < 1) throw std::invalid_argument("partition index must be >= 1");
        sum += fib(i);
    }
    return sum;
}

inline Natural content(const TwoPartition& p) { return content(std::span<const int>(p.indices())); }

/// Z(n): greedy largest-Fibonacci-first decomposition.
inline TwoPartition zeckendorf(Natural n) {
    if (n < 0) throw std::invalid_argument("zeckendorf of a negative number");
    const auto& table = detail::fib_table();
    if (n >= table.back()) throw std::out_of_range("number too large for the Fibonacci table");
    std::vector<int> indices;
    // table[1..] is strictly increasing; f_0 is skipped.
    auto hi = table.end();
    while (!n.is_zero()) {
        auto it = std::prev(std::upper_bound(table.begin() + 1, hi, n));
        indices.push_back(static_cast<int>(it - table.begin()));
        n -= *it;
        hi = it;
    }
    std::reverse(indices.begin(), indices.end());
    return TwoPartition(std::move(indices));
}

/// sigma^k: every index raised by k.
inline TwoPartition shift_sigma(const TwoPartition& p, int k) {
    std::vector<int> out(p.begin(), p.end());
    for (int& i : out) i += k;
    return TwoPartition(std::move(out));
}

/// mu_1(n); 0 for n = 0.
inline int mu_first(const Natural& n) {
    auto z = zeckendorf(n);
    return z.empty() ? 0 : z.front();
}

/// mu_infinity(n); 0 for n = 0.
inline int mu_last(const Natural& n) {
    auto z = zeckendorf(n);
    return z.empty() ? 0 : z.back();
}

inline std::string to_string(const TwoPartition& p) {
    std::string s = "{";
    for (std::size_t a = 0; a < p.size(); ++a) {
        if (a) s += ',';
        s += std::to_string(p[a]);
    }
    return s + "}";
}

}  // namespace fibpart
