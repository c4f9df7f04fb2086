#pragma once

// Brute-force ground truth. Nothing here goes through the Zeckendorf
// machinery: partitions are enumerated directly and chi is read off a
// truncated product expansion.

#include "fibcore.hpp"
#include "natural.hpp"
#include "polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibpart::oracle {

struct Config {
    std::uint64_t max_n = 100000;
};

/// Every strict index list {i_1 < ... < i_q}, i_1 >= 1, with f_{i_1} + ... = n.
using PartitionList = std::vector<std::vector<int>>;

namespace detail {

struct Tables {
    std::vector<std::uint64_t> value;   // value[i] = f_i, i >= 1
    std::vector<std::uint64_t> prefix;  // prefix[i] = f_1 + ... + f_i
};

inline Tables tables_up_to(std::uint64_t n) {
    Tables t{{0}, {0}};
    for (int i = 1;; ++i) {
        const auto f = static_cast<std::uint64_t>(fib(i));
        if (f > n) break;
        t.value.push_back(f);
        t.prefix.push_back(t.prefix.back() + f);
    }
    return t;
}

inline void search(const Tables& t, std::size_t top, std::uint64_t remaining, std::vector<int>& chosen,
                   PartitionList& out) {
    if (remaining == 0) {
        out.emplace_back(chosen.rbegin(), chosen.rend());
        return;
    }
    if (top == 0 || t.prefix[top] < remaining) return;
    if (t.value[top] <= remaining) {
        chosen.push_back(static_cast<int>(top));
        search(t, top - 1, remaining - t.value[top], chosen, out);
        chosen.pop_back();
    }
    search(t, top - 1, remaining, chosen, out);
}

inline std::uint64_t checked(const Natural& n, const Config& config) {
    if (n < 0 || n > config.max_n) {
        throw std::out_of_range("oracle input " + n.str() + " exceeds the configured bound " +
                                std::to_string(config.max_n));
    }
    return static_cast<std::uint64_t>(n);
}

}  // namespace detail

/// Depth-first search over f_1..f_R (f_R <= n), pruned by prefix sums.
inline PartitionList brute_partitions(const Natural& n, const Config& config = {}) {
    const std::uint64_t target = detail::checked(n, config);
    const auto t = detail::tables_up_to(target);
    PartitionList out;
    std::vector<int> chosen;
    detail::search(t, t.value.size() - 1, target, chosen, out);
    return out;
}

/// Sum of t^{#parts} over all Fibonacci partitions of n.
inline IntPolynomial brute_poly(const Natural& n, const Config& config = {}) {
    std::vector<Natural> coeffs;
    for (const auto& p : brute_partitions(n, config)) {
        if (coeffs.size() <= p.size()) coeffs.resize(p.size() + 1);
        coeffs[p.size()] += 1;
    }
    return IntPolynomial(std::move(coeffs));
}

/// Coefficients 0..N of prod_{f_i <= N} (1 - x^{f_i}).
inline std::vector<int> product_chi(std::uint64_t N) {
    if (N > 1000000) throw std::out_of_range("product_chi supports N <= 10^6");
    std::vector<std::int64_t> c(N + 1, 0);
    c[0] = 1;
    for (int i = 1;; ++i) {
        const auto f = static_cast<std::uint64_t>(fib(i));
        if (f > N) break;
        for (std::uint64_t d = N; d >= f; --d) c[d] -= c[d - f];
    }
    return {c.begin(), c.end()};
}

}  // namespace fibpart::oracle
