#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "isoclass/unimodular.hpp"

using namespace isoclass;

namespace {

IsometryInvariants inv(Parity parity, int lp, int lm, std::int64_t p, int sp, int sm, int n)
{
    return {p, parity, lp, lm, sp, sm, n};
}

} // namespace

TEST(IsometryExists, Examples)
{
    EXPECT_TRUE(unimodular::isometry_exists(inv(Parity::even, 3, 19, 3, 2, 10, 4)));
    EXPECT_TRUE(unimodular::isometry_exists(inv(Parity::even, 4, 20, 23, 2, 20, 1)));
    for (int sm = 0; sm <= 19; ++sm)
        for (int n = 0; n <= 22; ++n)
            EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::even, 3, 19, 23, 2, sm, n)));
    for (int sm = 0; sm <= 4; ++sm)
        for (int n = 0; n <= 4; ++n)
            EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::odd, 1, 1, 3, 2, sm, n)));
}

TEST(IsometryExists, TotalOnGarbage)
{
    EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::even, 3, 19, 4, 2, 10, 4)));
    EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::even, -3, 19, 3, 2, 10, 4)));
    EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::even, 3, 19, 3, 2, 10, -1)));
    EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::even, 3, 18, 3, 2, 10, 4)));   // no even unimodular lattice
}

TEST(IsometryExists, MatchesSmallKnownIsometries)
{
    // E8 as a module over Z[zeta_3] and Z[zeta_5]: fixed point free, coinvariant unimodular
    EXPECT_TRUE(unimodular::isometry_exists(inv(Parity::even, 8, 0, 3, 8, 0, 0)));
    EXPECT_TRUE(unimodular::isometry_exists(inv(Parity::even, 8, 0, 5, 8, 0, 0)));
    // a fixed point free isometry of U + U has unimodular coinvariant lattice
    EXPECT_TRUE(unimodular::isometry_exists(inv(Parity::even, 2, 2, 3, 2, 2, 0)));
    EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::even, 2, 2, 3, 2, 2, 2)));
    // Coxeter element of A6 inside E8: coinvariant A6, invariant lattice of determinant 7
    EXPECT_TRUE(unimodular::isometry_exists(inv(Parity::even, 8, 0, 7, 6, 0, 1)));
    EXPECT_FALSE(unimodular::isometry_exists(inv(Parity::even, 8, 0, 7, 6, 0, 0)));
}

TEST(IsometryInvariants, MDerivation)
{
    EXPECT_EQ(inv(Parity::even, 3, 19, 3, 2, 10, 4).m(), 1);
    EXPECT_EQ(inv(Parity::even, 4, 20, 23, 2, 20, 1).m(), 0);
    EXPECT_FALSE(inv(Parity::even, 3, 19, 5, 2, 1, 0).m());
    EXPECT_FALSE(inv(Parity::even, 3, 19, 3, 2, 10, 13).m());
    EXPECT_EQ(inv(Parity::even, 3, 19, 3, 2, 10, 4).invariant_rank(), 10);
}

TEST(FixedPointFree, Examples)
{
    EXPECT_TRUE(unimodular::fixed_point_free_exists(3, 2, 0, 1, 0));
    EXPECT_TRUE(unimodular::fixed_point_free_exists(3, 2, 2, 0, 1));
    EXPECT_FALSE(unimodular::fixed_point_free_exists(3, 2, 10, 0, 2));
    EXPECT_FALSE(unimodular::fixed_point_free_exists(5, 1, 3, 1, 0));
    EXPECT_FALSE(unimodular::fixed_point_free_exists(5, 2, 2, 1, 1));   // rank 4 != 3 * 4
}

TEST(K3Exists, Examples)
{
    EXPECT_FALSE(unimodular::k3_exists(23, 2, 1));
    EXPECT_TRUE(unimodular::k3_exists(3, 10, 0));
    EXPECT_FALSE(unimodular::k3_exists(3, 22, 0));
    EXPECT_TRUE(unimodular::k3_exists(19, 4, 1));
    EXPECT_TRUE(unimodular::k3_exists(13, 10, 1));
    EXPECT_FALSE(unimodular::k3_exists(4, 10, 0));
}

TEST(K3Exists, AgreesWithUnimodularRoute)
{
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23})
        for (int r = 1; r <= 21; ++r)
            for (int a = 0; a <= 21; ++a)
                EXPECT_EQ(unimodular::k3_exists(p, r, a), unimodular::isometry_exists(unimodular::k3_invariants(p, r, a)))
                    << p << " " << r << " " << a;
}

TEST(K3Exists, ThirteenHasTheKnownTriples)
{
    // Order 13: 22 - r divisible by 12 gives r = 10 only, with a = 1
    std::set<std::pair<int, int>> found;
    for (int r = 1; r <= 21; ++r)
        for (int a = 0; a <= 21; ++a)
            if (unimodular::k3_exists(13, r, a))
                found.insert({r, a});
    EXPECT_EQ(found, (std::set<std::pair<int, int>>{{10, 1}}));
}

TEST(SignatureCollections, Examples)
{
    EXPECT_EQ(unimodular::enumerate_signature_collections(3, 2, 10), (std::vector<SignatureCollection>{{{2, 10}}}));
    EXPECT_EQ(unimodular::enumerate_signature_collections(5, 2, 2),
              (std::vector<SignatureCollection>{{{0, 2}, {2, 0}}, {{2, 0}, {0, 2}}}));
    EXPECT_TRUE(unimodular::enumerate_signature_collections(5, 2, 1).empty());
    EXPECT_THROW(unimodular::enumerate_signature_collections(9, 2, 2), argument_error);
}

TEST(SignatureCollections, CountsMatchBruteForce)
{
    for (std::int64_t p : {5, 7, 11, 13})
        for (int sp = 0; sp <= 12; sp += 2)
            for (int sm = 0; sm <= 24; sm += 2) {
                const int slots = static_cast<int>((p - 1) / 2);
                const auto got = unimodular::enumerate_signature_collections(p, sp, sm);
                // brute force over all tuples of even k+ in [0, per_slot]
                std::set<SignatureCollection> expected;
                if ((sp + sm) % slots == 0 && ((sp + sm) / slots) % 2 == 0) {
                    const int per = (sp + sm) / slots;
                    std::vector<int> k(static_cast<std::size_t>(slots), 0);
                    while (true) {
                        int total = 0;
                        for (int v : k)
                            total += v;
                        if (total == sp) {
                            SignatureCollection c;
                            for (int v : k)
                                c.emplace_back(v, per - v);
                            expected.insert(c);
                        }
                        std::size_t i = 0;
                        while (i < k.size() && k[i] + 2 > per)
                            k[i++] = 0;
                        if (i == k.size())
                            break;
                        k[i] += 2;
                    }
                }
                EXPECT_EQ(std::set<SignatureCollection>(got.begin(), got.end()), expected);
                EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
                for (const auto& c : got) {
                    int tp = 0, tm = 0;
                    for (auto [a, b] : c) {
                        tp += a;
                        tm += b;
                    }
                    EXPECT_EQ(tp, sp);
                    EXPECT_EQ(tm, sm);
                }
            }
}
