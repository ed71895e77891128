#include <gtest/gtest.h>

#include <random>

#include "isoclass/arith.hpp"
#include "oracles.hpp"

using namespace isoclass;

TEST(Arith, PrimalityMatchesTrialDivision)
{
    for (std::int64_t n = -5; n <= 2000; ++n)
        EXPECT_EQ(arith::is_prime(n), oracle::is_prime(n)) << n;
    EXPECT_FALSE(arith::is_odd_prime(2));
    EXPECT_TRUE(arith::is_odd_prime(23));
}

TEST(Arith, LegendreMatchesListOfSquares)
{
    for (std::int64_t p : {3, 5, 7, 11, 13, 23, 41, 97})
        for (std::int64_t a = -60; a <= 60; ++a)
            EXPECT_EQ(arith::legendre(a, p), oracle::legendre(a, p)) << a << " mod " << p;
}

TEST(Arith, LegendreExamples)
{
    EXPECT_EQ(arith::legendre(1, 5), 1);
    EXPECT_EQ(arith::legendre(2, 5), -1);
    EXPECT_EQ(arith::legendre(-4, 5), 1);
    EXPECT_THROW(arith::legendre(3, 9), argument_error);
    EXPECT_THROW(arith::legendre(3, 2), argument_error);
}

TEST(Arith, LegendreIsMultiplicative)
{
    for (std::int64_t p : {3, 5, 7, 13, 23})
        for (std::int64_t a = 1; a < 40; ++a)
            for (std::int64_t b = 1; b < 40; ++b)
                if (a % p != 0 && b % p != 0)
                    EXPECT_EQ(arith::legendre(a * b, p), arith::legendre(a, p) * arith::legendre(b, p));
}

TEST(Arith, MinusOnePower)
{
    for (std::int64_t p : {3, 5, 7, 13})
        for (int e = 0; e < 6; ++e) {
            int expected = 1;
            for (int i = 0; i < e; ++i)
                expected *= oracle::legendre(-1, p);
            EXPECT_EQ(arith::minus_one_power_symbol(p, e), expected);
        }
}

TEST(Arith, Valuation)
{
    EXPECT_EQ(arith::valuation(50, 5), 2);
    EXPECT_EQ(arith::valuation(7, 3), 0);
    EXPECT_EQ(arith::valuation(300, 5), 2);
    EXPECT_EQ(arith::valuation(-81, 3), 4);
    EXPECT_THROW(arith::valuation(0, 3), argument_error);
    for (std::int64_t n = 1; n < 3000; ++n)
        for (std::int64_t p : {2, 3, 5, 7}) {
            std::int64_t q = arith::prime_to_part(n, p);
            EXPECT_NE(q % p, 0);
            for (int i = 0; i < arith::valuation(n, p); ++i)
                q *= p;
            EXPECT_EQ(q, n);
        }
}

TEST(Arith, MoebiusSumsToDelta)
{
    EXPECT_EQ(arith::moebius(1), 1);
    EXPECT_EQ(arith::moebius(4), 0);
    EXPECT_EQ(arith::moebius(6), 1);
    EXPECT_EQ(arith::moebius(30), -1);
    for (std::int64_t n = 1; n <= 2000; ++n) {
        std::int64_t s = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                s += arith::moebius(d);
        EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
    }
}

TEST(Arith, FactorizationReconstructs)
{
    for (std::int64_t n = 1; n <= 5000; ++n) {
        std::int64_t prod = 1;
        for (const auto& [q, e] : arith::factorize(n)) {
            EXPECT_TRUE(oracle::is_prime(q));
            for (int i = 0; i < e; ++i)
                prod *= q;
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Arith, DivisorsAreSortedAndComplete)
{
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::vector<std::int64_t> expected;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                expected.push_back(d);
        EXPECT_EQ(arith::divisors(n), expected);
    }
}

TEST(Arith, PrimitiveRootHasFullOrder)
{
    for (std::int64_t p = 3; p < 400; ++p) {
        if (!oracle::is_prime(p))
            continue;
        const std::int64_t g = arith::primitive_root(p);
        std::set<std::int64_t> seen;
        std::int64_t x = 1;
        for (std::int64_t k = 0; k < p - 1; ++k) {
            seen.insert(x);
            x = x * g % p;
        }
        EXPECT_EQ(static_cast<std::int64_t>(seen.size()), p - 1) << p;
    }
}

TEST(Arith, DeterminantMatchesLeibniz)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        std::vector<std::vector<long>> raw(n, std::vector<long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = raw[i][j] = entry(rng);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        long expected = 0;
        do {
            long term = 1;
            int inversions = 0;
            for (std::size_t i = 0; i < n; ++i) {
                term *= raw[i][perm[i]];
                for (std::size_t j = i + 1; j < n; ++j)
                    inversions += perm[i] > perm[j];
            }
            expected += inversions % 2 ? -term : term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(arith::determinant(m), expected);
    }
}
