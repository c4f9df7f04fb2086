#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibpart {

/// Arbitrary-precision integer. Counts, contents and Fibonacci values are
/// nonnegative; polynomial coefficients may be signed.
using Natural = boost::multiprecision::cpp_int;

/// Parses a nonnegative decimal integer. Rejects signs, blanks and empty text.
inline Natural parse_natural(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a nonnegative integer: '" + std::string(text) + "'");
        }
    }
    return Natural(std::string(text));
}

inline std::string to_string(const Natural& n) { return n.str(); }

/// Number of significant bits; 0 for zero.
inline std::size_t bit_length(const Natural& n) {
    return n.is_zero() ? 0 : boost::multiprecision::msb(n) + 1;
}

/// lambda(m): 1 for odd m, 0 for even m.
constexpr int parity(long long m) { return static_cast<int>(m & 1); }

inline int parity(const Natural& n) { return boost::multiprecision::bit_test(n, 0) ? 1 : 0; }

}  // namespace fibpart
