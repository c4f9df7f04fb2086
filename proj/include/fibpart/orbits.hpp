#pragma once

// The action of Z2 x Z2 x N on the naturals generated by omega, tau and S,
// its fundamental domain (the essential numbers) and the free product on it.
//
// All three generators act on Z(n) and preserve F. omega and S are total
// except omega(0); tau is undefined on the orbit {f_r - 1} of 0, where the
// underlying construction degenerates.

#include "contfrac.hpp"
#include "counting.hpp"
#include "fibcore.hpp"
#include "natural.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibpart {

enum class OrbitGenerator { omega, tau, S };

inline std::string_view name(OrbitGenerator g) {
    switch (g) {
        case OrbitGenerator::omega: return "omega";
        case OrbitGenerator::tau: return "tau";
        case OrbitGenerator::S: return "S";
    }
    return "?";
}

namespace detail {

inline TwoPartition omega_partition(const TwoPartition& p) {
    if (p.empty()) throw std::domain_error("omega is undefined on 0");
    return shift_sigma(p, parity(p.front()) == 1 ? 1 : -1);
}

inline TwoPartition s_partition(const TwoPartition& p) {
    if (p.empty()) return TwoPartition{1};
    std::vector<int> out{2 - parity(p.front())};
    for (int i : p) out.push_back(i + 2);
    return TwoPartition(std::move(out));
}

/// J with S(J) = p, if any.
inline bool s_preimage(const TwoPartition& p, TwoPartition& out) {
    if (p.empty()) return false;
    if (p.size() == 1) {
        if (p.front() != 1) return false;
        out = TwoPartition{};
        return true;
    }
    if (p.front() != 1 && p.front() != 2) return false;
    const int j1 = p[1] - 2;
    if (2 - parity(j1) != p.front()) return false;
    std::vector<int> rest;
    for (std::size_t a = 1; a < p.size(); ++a) rest.push_back(p[a] - 2);
    out = TwoPartition(std::move(rest));
    return true;
}

inline TwoPartition tau_partition(TwoPartition p) {
    int layers = 0;
    TwoPartition inner;
    while (s_preimage(p, inner)) {
        p = std::move(inner);
        ++layers;
    }
    if (p.empty() || (p.front() <= 2 && p.size() == 1)) {
        throw std::domain_error("tau is undefined on the orbit of 0 (n = f_r - 1)");
    }
    TwoPartition image;
    if (p.front() >= 3) {
        std::vector<int> out{2 - parity(p.front())};
        for (int i : p) out.push_back(i + 1);
        image = TwoPartition(std::move(out));
    } else {
        // {1, i_1, ...} with i_1 even or {2, i_1, ...} with i_1 odd.
        std::vector<int> out;
        for (std::size_t a = 1; a < p.size(); ++a) out.push_back(p[a] - 1);
        image = TwoPartition(std::move(out));
    }
    for (int r = 0; r < layers; ++r) image = s_partition(image);
    return image;
}

}  // namespace detail

/// omega: shifts Z(n) up by one if mu_1(n) is odd, down by one if even.
inline Natural act_omega(const Natural& n) { return content(detail::omega_partition(zeckendorf(n))); }

/// S{i_1..i_q} = {2 - lambda(i_1), i_1 + 2, ..., i_q + 2}; S(0) = 1.
inline Natural act_S(const Natural& n) { return content(detail::s_partition(zeckendorf(n))); }

/// tau: strips S layers down to a base form, swaps the base form, and
/// reapplies the layers. An involution commuting with omega and S.
inline Natural act_tau(const Natural& n) {
    if (n.is_zero()) throw std::domain_error("tau is undefined on 0");
    return content(detail::tau_partition(zeckendorf(n)));
}

inline Natural act(OrbitGenerator g, const Natural& n) {
    switch (g) {
        case OrbitGenerator::omega: return act_omega(n);
        case OrbitGenerator::tau: return act_tau(n);
        case OrbitGenerator::S: return act_S(n);
    }
    throw std::logic_error("unknown generator");
}

/// epsilon(A_1 x ... x A_s): block m holds the odd prefix values
/// 2 d(alpha_1..alpha_r) + 1 of A_m, shifted past the preceding blocks by
/// 2 d(A_1) + ... + 2 d(A_{m-1}) + (m - 1).
inline TwoPartition epsilon(const Multivector& m) {
    std::vector<int> out;
    long shift = 0;
    for (std::size_t b = 0; b < m.size(); ++b) {
        const auto& a = m[b];
        if (!a.in_family(2)) throw std::invalid_argument("epsilon needs vectors in A_2, got " + to_string(a));
        long d = 0;
        for (int alpha : a) {
            d += alpha - 1;
            out.push_back(static_cast<int>(2 * d + 1 + shift));
        }
        shift += 2 * d + 1;
    }
    return TwoPartition(std::move(out));
}

/// c(g_1) x ... x c(g_s)
inline Multivector expand_word(const Word& w) {
    Multivector out;
    out.reserve(w.size());
    for (const auto& g : w) out.push_back(cf_expand(g));
    return out;
}

/// The least n with word_of(n) = w; 0 for the unit.
inline Natural theta(const Word& w) { return content(epsilon(expand_word(w))); }

/// n = 0, or mu_1(n) odd and at least 3.
inline bool is_essential(const Natural& n) {
    if (n.is_zero()) return true;
    const int mu1 = mu_first(n);
    return parity(mu1) == 1 && mu1 >= 3;
}

/// The m-th essential number floor(m tau) + floor(m tau^2) = 2 floor(m tau) + m,
/// built from Z(m) without floating point.
inline Natural essential_from_m(const Natural& m) {
    const auto z = zeckendorf(m);
    if (z.empty()) return 0;
    std::vector<int> out;
    std::size_t from = 0;
    if (parity(z.front()) == 1) {
        for (int i = 3; i <= z.front() + 2; i += 2) out.push_back(i);
        from = 1;
    }
    for (std::size_t a = from; a < z.size(); ++a) out.push_back(z[a] + 3);
    return content(out);
}

/// Inverse of essential_from_m.
inline Natural m_from_essential(const Natural& n) {
    if (!is_essential(n)) throw std::domain_error(n.str() + " is not an essential number");
    const auto z = zeckendorf(n);
    if (z.empty()) return 0;
    std::vector<int> out;
    std::size_t a = 0;
    if (z.front() == 3) {
        // Leading run 3, 5, 7, ... collapses to a single odd index.
        while (a + 1 < z.size() && z[a + 1] - z[a] == 2) ++a;
        out.push_back(z[a] - 2);
        ++a;
    }
    for (; a < z.size(); ++a) out.push_back(z[a] - 3);
    return content(TwoPartition(std::move(out)));
}

/// sigma^k(n): the content of Z(n) shifted up by k.
inline Natural sigma_power(const Natural& n, int k) { return content(shift_sigma(zeckendorf(n), k)); }

/// Free product on essential numbers: n1 * n2 = n1 + sigma^{mu_last(n1)}(n2).
inline Natural star(const Natural& n1, const Natural& n2) {
    if (!is_essential(n1)) throw std::domain_error(n1.str() + " is not an essential number");
    if (!is_essential(n2)) throw std::domain_error(n2.str() + " is not an essential number");
    return n1 + sigma_power(n2, mu_last(n1));
}

/// Essential, nonzero, and named by a single-letter word.
inline bool is_f_prime(const Natural& n) {
    return !n.is_zero() && is_essential(n) && word_of(n).size() == 1;
}

}  // namespace fibpart
