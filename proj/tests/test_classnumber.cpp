#include <gtest/gtest.h>

#include <cmath>

#include "isoclass/classnumber.hpp"
#include "oracles.hpp"

using namespace isoclass;

TEST(RelativeClassNumber, SmallPrimes)
{
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19})
        EXPECT_EQ(classnumber::relative_class_number(p), 1) << p;
    EXPECT_EQ(classnumber::relative_class_number(23), 3);
    EXPECT_EQ(classnumber::relative_class_number(29), 8);
    EXPECT_EQ(classnumber::relative_class_number(31), 9);
    EXPECT_EQ(classnumber::relative_class_number(37), 37);
    EXPECT_EQ(classnumber::relative_class_number(41), 121);
}

TEST(RelativeClassNumber, MatchesFloatingPointFormula)
{
    for (std::int64_t p = 3; p <= 73; ++p) {
        if (!oracle::is_prime(p))
            continue;
        const long double approx = oracle::relative_class_number_float(p);
        const Integer exact = classnumber::relative_class_number(p);
        EXPECT_NEAR(static_cast<double>(approx), exact.get_d(), 1e-6 * exact.get_d() + 1e-3) << p;
    }
}

TEST(RelativeClassNumber, LargePrimesAreIntegral)
{
    // 2^3 * 17 * 11853470598257, via the determinant route
    EXPECT_EQ(classnumber::relative_class_number(113), Integer("1612072001362952"));
    EXPECT_GT(classnumber::relative_class_number(199), 0);
}

TEST(RelativeClassNumber, Errors)
{
    EXPECT_THROW(classnumber::relative_class_number(2), argument_error);
    EXPECT_THROW(classnumber::relative_class_number(15), argument_error);
    EXPECT_THROW(classnumber::relative_class_number(211), unsupported_error);
}

TEST(ConjugacyClassCount, Examples)
{
    EXPECT_EQ(classnumber::conjugacy_class_count(3, 1, 1), 1);
    EXPECT_EQ(classnumber::conjugacy_class_count(23, 1, 2), 6);
    EXPECT_EQ(classnumber::conjugacy_class_count(5, 2, 1), 2);
    EXPECT_THROW(classnumber::conjugacy_class_count(5, 2, 0), argument_error);
}

TEST(InvariantGenusClasses, Table)
{
    EXPECT_EQ(classnumber::invariant_genus_classes(4, 20, 23, 1, 0), 2);
    EXPECT_EQ(classnumber::invariant_genus_classes(4, 20, 3, 1, 5), 1);
    EXPECT_EQ(classnumber::invariant_genus_classes(3, 19, 19, 1, 0), 1);
    EXPECT_THROW(classnumber::invariant_genus_classes(2, 10, 3, 1, 0), unsupported_error);
}
