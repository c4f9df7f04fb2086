#include <fibpart/enumeration.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace fibpart;

namespace {

const std::vector<std::uint64_t> kSample{3, 8, 11, 24, 29, 63};

std::vector<Natural> nat_list(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

TEST(Psi, Examples) {
    EXPECT_EQ(psi(1), 1);
    EXPECT_EQ(psi(12), 22);
    EXPECT_THROW(psi(0), std::invalid_argument);
}

TEST(Psi, PrimePowerAndSquarefree) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        Natural pn = p;
        Natural expect = p - 1;
        for (int n = 1; n <= 4; ++n) {
            EXPECT_EQ(psi(static_cast<std::uint64_t>(pn)), expect) << p << "^" << n;
            pn *= p;
            expect *= 2 * p - 1;
        }
    }
    EXPECT_EQ(psi(2 * 3), ordered_bell(2) * 1 * 2);
    EXPECT_EQ(psi(5 * 7), ordered_bell(2) * 4 * 6);
    EXPECT_EQ(psi(2 * 3 * 5), ordered_bell(3) * 1 * 2 * 4);
    EXPECT_EQ(psi(3 * 5 * 7 * 11), ordered_bell(4) * 2 * 4 * 6 * 10);
}

TEST(Bell, Sequences) {
    const std::vector<long> ordered{1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
    const std::vector<long> plain{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (unsigned m = 0; m <= 8; ++m) {
        EXPECT_EQ(ordered_bell(m), ordered[m]) << m;
        EXPECT_EQ(bell(m), plain[m]) << m;
    }
}

TEST(ListEssential, Examples) {
    EXPECT_EQ(list_essential(5).members, nat_list({24, 29, 55, 87}));
    EXPECT_EQ(list_essential(6).members, nat_list({37, 42, 45, 50, 144, 231}));
    EXPECT_EQ(list_essential(1).members, nat_list({0}));
    EXPECT_EQ(max_essential(3), 11);
    EXPECT_EQ(max_essential(5), 87);
    EXPECT_EQ(max_essential(1), 0);
}

TEST(ListEssential, SizeAndExtremes) {
    for (std::uint64_t k = 1; k <= 30; ++k) {
        const auto cls = list_essential(k);
        ASSERT_EQ(Natural(cls.members.size()), psi(k)) << k;
        ASSERT_TRUE(std::adjacent_find(cls.members.begin(), cls.members.end(), std::greater_equal<>()) ==
                    cls.members.end())
            << k;
        for (const auto& n : cls.members) {
            ASSERT_TRUE(is_essential(n)) << n;
            ASSERT_EQ(count_F(n), k) << n;
        }
        EXPECT_EQ(cls.members.back(), max_essential(k)) << k;
        if (k >= 2) {
            EXPECT_EQ(cls.members.back(), theta(Word({Fraction(k - 1, k)}))) << k;
        }
        EXPECT_EQ(cls.members.front(), minimal_essential(k)) << k;
    }
}

TEST(ListEssential, MatchesScanOfF) {
    // Essential numbers below f_12 grouped by F.
    const Natural bound = fib(12);
    std::map<Natural, std::vector<Natural>> by_k;
    for (Natural n = 0; n < bound; ++n) {
        if (is_essential(n)) by_k[count_F(n)].push_back(n);
    }
    for (std::uint64_t k = 1; k <= 6; ++k) EXPECT_EQ(by_k[k], list_essential(k).members) << k;
}

TEST(Minimal, Examples) {
    EXPECT_EQ(minimal_essential(1), 0);
    EXPECT_EQ(minimal_essential(8), 63);
    EXPECT_EQ(format_word(minimal_essential_with_word(8).word), "3/8");
    EXPECT_EQ(minimal_essential(29), 1050);
    EXPECT_THROW(minimal_essential(0), std::invalid_argument);
}

TEST(Minimal, CommutativeSearchMatchesAllWords) {
    for (std::uint64_t k = 1; k <= 40; ++k) {
        EXPECT_EQ(minimal_essential(k, MinimalSearch::commutative), minimal_essential(k, MinimalSearch::all_words))
            << k;
    }
}

TEST(Minimal, LowerBoundWithFibonacciEquality) {
    std::set<std::uint64_t> fibs;
    for (int r = 0; fib(r) <= 30; ++r) fibs.insert(static_cast<std::uint64_t>(fib(r)));
    for (std::uint64_t k = 1; k <= 30; ++k) {
        const Natural M = minimal_essential(k);
        EXPECT_GE(M, Natural(k * k - 1)) << k;
        EXPECT_EQ(M == k * k - 1, fibs.contains(k)) << k;
    }
}

TEST(Minimal, BelowScanOfF) {
    // No n below M(k) has F(n) = k.
    std::map<Natural, Natural> first;
    for (Natural n = 0; n <= 3000; ++n) first.emplace(count_F(n), n);
    for (std::uint64_t k = 1; k <= 40; ++k) {
        const Natural M = minimal_essential(k);
        if (M <= 3000) {
            EXPECT_EQ(first.at(k), M) << k;
        }
    }
}

TEST(Primitive, Examples) {
    EXPECT_TRUE(is_primitive(1));
    EXPECT_TRUE(is_primitive(8));
    EXPECT_TRUE(is_primitive(18));
    EXPECT_FALSE(is_primitive(4));
    EXPECT_GE(minimal_essential_with_word(4).word.size(), 2u);
    for (std::uint64_t p = 2; p <= 60; ++p) {
        if (is_prime(p)) {
            EXPECT_TRUE(is_primitive(p)) << p;
        }
    }
}

TEST(Triangle, Examples) {
    EXPECT_EQ(cmp_triangle(AssocVector{3, 3}, AssocVector{3}), std::strong_ordering::less);
    EXPECT_EQ(cmp_triangle(AssocVector{2}, AssocVector{3}), std::strong_ordering::less);
    EXPECT_EQ(cmp_triangle(AssocVector{2, 5}, AssocVector{2, 5}), std::strong_ordering::equal);
    EXPECT_EQ(cmp_triangle(AssocVector{3}, AssocVector{3, 3}), std::strong_ordering::greater);
}

TEST(Triangle, TotalOnDistinctLetters) {
    std::vector<AssocVector> keys;
    for (std::uint64_t b = 2; b <= 30; ++b) {
        for (std::uint64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) == 1) keys.push_back(cf_expand(Fraction(a, b)));
        }
    }
    for (const auto& x : keys) {
        for (const auto& y : keys) {
            EXPECT_EQ(cmp_triangle(x, y) == 0, x == y);
            EXPECT_EQ(cmp_triangle(x, y), 0 <=> cmp_triangle(y, x));
        }
    }
}

TEST(NormalForm, Examples) {
    EXPECT_EQ(format_word(commutative_normal_form(parse_word("1/3*3/8"))), "3/8*1/3");
    EXPECT_EQ(format_word(commutative_normal_form(parse_word("1/2*1/4*1/2*1/3"))), "1/2*1/2*1/3*1/4");
    EXPECT_TRUE(commutative_normal_form(Word{}).empty());
}

TEST(Circle, Examples) {
    EXPECT_EQ(circle(8, 63), 673);
    EXPECT_EQ(circle(37, 92), 4341);
    EXPECT_EQ(circle(0, 29), 29);
    EXPECT_EQ(circle(29, 0), 29);
    EXPECT_THROW(circle(4, 3), std::domain_error);
}

TEST(Circle, CommutativeAssociativeMultiplicative) {
    for (auto a : kSample) {
        for (auto b : kSample) {
            EXPECT_EQ(circle(a, b), circle(b, a));
            EXPECT_EQ(count_F(circle(a, b)), count_F(a) * count_F(b));
            EXPECT_EQ(count_F(star(a, b)), count_F(a) * count_F(b));
            for (auto c : kSample) {
                EXPECT_EQ(circle(circle(a, b), c), circle(a, circle(b, c)));
                EXPECT_EQ(star(star(a, b), c), star(a, star(b, c)));
            }
        }
    }
    EXPECT_NE(star(11, 29), star(29, 11));
}

TEST(Circle, IsLeastOverPermutations) {
    for (auto a : kSample) {
        for (auto b : kSample) {
            for (auto c : kSample) {
                std::vector<Fraction> letters;
                for (auto x : {a, b, c}) {
                    for (const auto& g : word_of(x)) letters.push_back(g);
                }
                std::vector<std::size_t> order(letters.size());
                std::iota(order.begin(), order.end(), 0);
                std::optional<Natural> best;
                do {
                    std::vector<Fraction> perm;
                    for (auto i : order) perm.push_back(letters[i]);
                    const Natural n = theta(Word(perm));
                    if (!best || n < *best) best = n;
                } while (std::next_permutation(order.begin(), order.end()));
                EXPECT_EQ(circle(circle(a, b), c), *best);
            }
        }
    }
}

TEST(PsiSigma, ClosedForms) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        EXPECT_EQ(psi_sigma(p), p - 1);
        EXPECT_EQ(2 * psi_sigma(p * p), 3 * p * (p - 1)) << p;
        if (p <= 5) {
            EXPECT_EQ(6 * psi_sigma(p * p * p), p * (p - 1) * (13 * p - 5)) << p;
            EXPECT_EQ(24 * psi_sigma(p * p * p * p), p * (p - 1) * (73 * p * p - 45 * p + 14)) << p;
        }
    }
    for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {3, 5}, {5, 7}, {2, 11}}) {
        EXPECT_EQ(psi_sigma(p * q), bell(2) * (p - 1) * (q - 1));
    }
    EXPECT_EQ(psi_sigma(2 * 3 * 5), bell(3) * 1 * 2 * 4);
    EXPECT_EQ(psi_sigma(1), 1);
}

TEST(PsiSigma, CountsDistinctCommutativeNumbers) {
    for (std::uint64_t k = 1; k <= 30; ++k) {
        std::set<Natural> values;
        for (const auto& w : letter_multisets(k)) values.insert(theta(commutative_normal_form(w)));
        EXPECT_EQ(Natural(values.size()), psi_sigma(k)) << k;
    }
}

TEST(Stability, Examples) {
    EXPECT_EQ(stability_count(10, 1), 1u);
    EXPECT_EQ(stability_count(10, 2), 2u);
    EXPECT_EQ(stability_count(12, 6), 12u);
    EXPECT_THROW(stability_count(0, 1), std::invalid_argument);
}

TEST(Stability, TwicePsi) {
    for (std::uint64_t k = 2; k <= 6; ++k) {
        for (int r = static_cast<int>(2 * k); r <= static_cast<int>(2 * k + 3); ++r) {
            EXPECT_EQ(Natural(stability_count(r, k)), 2 * psi(k)) << r << "," << k;
        }
    }
    for (int r = 2; r <= 12; ++r) EXPECT_EQ(stability_count(r, 1), 1u) << r;
}
