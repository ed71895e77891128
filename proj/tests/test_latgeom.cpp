#include <gtest/gtest.h>

#include <random>

#include "isoclass/latgeom.hpp"
#include "oracles.hpp"

using namespace isoclass;

namespace {

const IntMatrix a2{{2, 1}, {1, 2}}, k7{{2, 1}, {1, 4}}, f23a{{2, 1}, {1, 12}}, f23b{{4, 1}, {1, 6}};

} // namespace

TEST(GramLattice, Validation)
{
    EXPECT_THROW(GramLattice({{2, 1}, {0, 2}}), argument_error);
    EXPECT_THROW(GramLattice({{2, 2}, {2, 2}}), argument_error);
    EXPECT_THROW(GramLattice({{2, 1}}), argument_error);
    const GramLattice l(a2);
    EXPECT_EQ(l.rank(), 2u);
    EXPECT_EQ(l.determinant(), 3);
    EXPECT_TRUE(l.is_even());
    EXPECT_TRUE(l.is_positive_definite());
    EXPECT_FALSE(GramLattice({{2, 1}, {1, -2}}).is_positive_definite());
    EXPECT_FALSE(GramLattice({{1, 0}, {0, 2}}).is_even());
}

TEST(EnumerateVectors, Examples)
{
    EXPECT_EQ(latgeom::enumerate_vectors(GramLattice(a2), 2).size(), 6u);
    EXPECT_TRUE(latgeom::enumerate_vectors(GramLattice(a2), 1).empty());
    EXPECT_TRUE(latgeom::enumerate_vectors(GramLattice(f23b), 2).empty());
    EXPECT_THROW(latgeom::enumerate_vectors(GramLattice({{2, 1}, {1, -2}}), 2), unsupported_error);
}

TEST(EnumerateVectors, MatchesBoxSearchOnBinaryForms)
{
    for (const auto& g : {a2, k7, f23a, f23b, IntMatrix{{6, 3}, {3, 10}}, IntMatrix{{2, 0}, {0, 2}}})
        for (std::int64_t n = 1; n <= 300; ++n) {
            auto expected = oracle::binary_vectors(g, n);
            std::sort(expected.begin(), expected.end());
            EXPECT_EQ(latgeom::enumerate_vectors(GramLattice(g), n), expected) << n;
        }
}

TEST(EnumerateVectors, MatchesBoxSearchInRankThreeAndFour)
{
    const IntMatrix a3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    const IntMatrix d4{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    for (const auto& g : {a3, d4}) {
        const auto n = static_cast<std::int64_t>(g.size());
        std::map<std::int64_t, std::size_t> counts;
        std::vector<std::int64_t> x(static_cast<std::size_t>(n), -4);
        while (true) {
            counts[oracle::norm(g, x)]++;
            std::size_t i = 0;
            while (i < x.size() && x[i] == 4)
                x[i++] = -4;
            if (i == x.size())
                break;
            ++x[i];
        }
        // vectors of norm <= 4 have coordinates bounded by 4 in these bases
        for (std::int64_t norm : {2, 4})
            EXPECT_EQ(latgeom::enumerate_vectors(GramLattice(g), norm).size(), counts[norm]);
    }
    // root counts: |A3| = 12, |D4| = 24
    EXPECT_EQ(latgeom::enumerate_vectors(GramLattice(a3), 2).size(), 12u);
    EXPECT_EQ(latgeom::enumerate_vectors(GramLattice(d4), 2).size(), 24u);
}

TEST(IsometryGroup, OrdersMatchBruteForce)
{
    for (const auto& g : {a2, k7, f23a, f23b, IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{2, 0}, {0, 4}}}) {
        auto expected = oracle::binary_isometries(g);
        std::sort(expected.begin(), expected.end());
        auto got = latgeom::isometry_group(GramLattice(g));
        EXPECT_EQ(got, expected);
        std::size_t det_one = 0;
        for (const auto& t : expected)
            det_one += t[0][0] * t[1][1] - t[0][1] * t[1][0] == 1;
        EXPECT_EQ(latgeom::special_isometry_group(GramLattice(g)).size(), det_one);
    }
    EXPECT_EQ(latgeom::isometry_group(GramLattice(a2)).size(), 12u);
    EXPECT_EQ(latgeom::special_isometry_group(GramLattice(a2)).size(), 6u);
    EXPECT_EQ(latgeom::isometry_group(GramLattice(k7)).size(), 4u);
    EXPECT_EQ(latgeom::special_isometry_group(GramLattice(k7)).size(), 2u);
    EXPECT_EQ(latgeom::isometry_group(GramLattice(f23a)).size(), 4u);
    EXPECT_EQ(latgeom::isometry_group(GramLattice(f23b)).size(), 2u);
}

TEST(IsometryGroup, IsClosedUnderComposition)
{
    for (const auto& g : {a2, k7, f23a, f23b}) {
        const GramLattice l(g);
        const auto group = latgeom::isometry_group(l);
        const std::set<IntMatrix> elements(group.begin(), group.end());
        for (const auto& s : group)
            for (const auto& t : group) {
                EXPECT_TRUE(elements.contains(latgeom::multiply(s, t)));
                EXPECT_TRUE(latgeom::preserves_form(l, latgeom::multiply(s, t)));
            }
    }
}

TEST(Divisibility, Examples)
{
    EXPECT_EQ(latgeom::vector_divisibility(GramLattice(a2), {1, 0}), 1);
    EXPECT_EQ(latgeom::vector_divisibility(GramLattice(a2), {1, 1}), 3);
    EXPECT_EQ(latgeom::vector_divisibility(GramLattice(IntMatrix{{6}}), {1}), 6);
    EXPECT_THROW(latgeom::vector_divisibility(GramLattice(a2), {0, 0}), argument_error);
}

TEST(OrbitDecomposition, Examples)
{
    const GramLattice l(a2);
    const auto o = latgeom::group_of(l, GroupKind::O);
    const auto so = latgeom::group_of(l, GroupKind::SO);
    auto orbits = latgeom::orbit_decomposition(l, o, 2, true);
    ASSERT_EQ(orbits.size(), 1u);
    EXPECT_EQ(orbits[0].size, 6);
    EXPECT_EQ(latgeom::orbit_decomposition(l, so, 14, true).size(), 2u);
    orbits = latgeom::orbit_decomposition(l, o, 6, true);
    ASSERT_EQ(orbits.size(), 1u);
    EXPECT_EQ(orbits[0].divisibility, 3);
    EXPECT_THROW(latgeom::orbit_decomposition(l, {}, 2, true), argument_error);
}

TEST(OrbitDecomposition, PartitionsAndHasConstantDivisibility)
{
    for (const auto& g : {a2, k7, f23a, f23b})
        for (auto kind : {GroupKind::O, GroupKind::SO}) {
            const GramLattice l(g);
            const auto group = latgeom::group_of(l, kind);
            for (std::int64_t n = 2; n <= 400; n += 2) {
                const auto orbits = latgeom::orbit_decomposition(l, group, n, true);
                std::size_t total = 0;
                for (const auto& orbit : orbits) {
                    total += static_cast<std::size_t>(orbit.size);
                    EXPECT_EQ(group.size() % static_cast<std::size_t>(orbit.size), 0u);
                    for (const auto& t : group) {
                        const auto y = latgeom::act(t, orbit.representative);
                        EXPECT_EQ(oracle::divisibility(g, y), orbit.divisibility);
                        EXPECT_EQ(oracle::norm(g, y), n);
                    }
                }
                std::size_t primitive = 0;
                for (const auto& x : oracle::binary_vectors(g, n))
                    primitive += oracle::primitive(x);
                EXPECT_EQ(total, primitive);
            }
        }
}

TEST(FixedNormSet, Examples)
{
    const GramLattice k(k7);
    EXPECT_TRUE(latgeom::fixed_norm_set(k, latgeom::special_isometry_group(k), 1000).empty());
    const GramLattice a(a2);
    const auto s = latgeom::fixed_norm_set(a, latgeom::isometry_group(a), 1000);
    EXPECT_EQ(s, (std::set<std::int64_t>{1, 3}));
    const GramLattice f(f23b);
    EXPECT_TRUE(latgeom::fixed_norm_set(f, latgeom::isometry_group(f), 1000).empty());
}

TEST(FixedNormSet, OrbitFormulaHoldsOffTheSet)
{
    for (const auto& g : {a2, k7, f23a, f23b})
        for (auto kind : {GroupKind::O, GroupKind::SO}) {
            const GramLattice l(g);
            const auto group = latgeom::group_of(l, kind);
            const auto exceptional = latgeom::fixed_norm_set(l, group, 300);
            for (std::int64_t k = 1; k <= 300; ++k) {
                std::size_t primitive = 0;
                for (const auto& x : oracle::binary_vectors(g, 2 * k))
                    primitive += oracle::primitive(x);
                const auto orbits = latgeom::orbit_decomposition(l, group, 2 * k, true);
                if (!exceptional.contains(k)) {
                    EXPECT_EQ(orbits.size() * group.size(), primitive) << k;
                }
            }
        }
}
