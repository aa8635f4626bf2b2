#include <gtest/gtest.h>

#include "beckline/geometry.hpp"
#include "beckline/random.hpp"
#include "oracle.hpp"

using namespace beckline;
using oracle::pt;

namespace {

CanonicalLine L(long a, long b, long c) { return CanonicalLine{Integer(a), Integer(b), Integer(c)}; }

ExactPoint random_point(Rng& rng, long long box, long long max_den) {
    const long long dx = rng.uniform(1, max_den), dy = rng.uniform(1, max_den);
    return pt(Rational(rng.uniform(-box, box), dx), Rational(rng.uniform(-box, box), dy));
}

} // namespace

TEST(LineThrough, Examples) {
    EXPECT_EQ(line_through(pt(0, 0), pt(1, 1)), L(1, -1, 0));
    EXPECT_EQ(line_through(pt(0, 0), pt(0, 1)), L(1, 0, 0));
    EXPECT_EQ(line_through(pt(Rational(1, 2), Rational(0)), pt(Rational(0), Rational(1, 3))), L(2, 3, -1));
    EXPECT_EQ(line_through(pt(0, 5), pt(3, 5)), L(0, 1, -5));
}

TEST(LineThrough, IdenticalPointsThrow) {
    EXPECT_THROW(line_through(pt(1, 2), pt(1, 2)), identical_points_error);
    // color does not make points different
    EXPECT_THROW(line_through(ExactPoint(1, 2, Color::Red), ExactPoint(1, 2, Color::Blue)), identical_points_error);
}

TEST(Incident, Examples) {
    EXPECT_TRUE(incident(L(1, -1, 0), pt(2, 2)));
    EXPECT_FALSE(incident(L(1, -1, 0), pt(2, 3)));
    EXPECT_TRUE(incident(L(2, 3, -1), pt(Rational(1, 2), Rational(0))));
}

TEST(Collinear, Examples) {
    EXPECT_TRUE(collinear(pt(0, 0), pt(1, 1), pt(2, 2)));
    EXPECT_FALSE(collinear(pt(0, 0), pt(1, 0), pt(0, 1)));
    EXPECT_TRUE(collinear(pt(0, 0), pt(1, 2), pt(2, 4)));
    EXPECT_TRUE(collinear(pt(3, 4), pt(3, 4), pt(7, 1)));
}

TEST(Canonicalize, RejectsDegenerate) {
    EXPECT_THROW(canonicalize(Integer(0), Integer(0), Integer(3)), domain_error);
}

TEST(ExactPoint, LowestTermsAndEquality) {
    ExactPoint p(Rational(-2, 4), Rational(6, 3));
    EXPECT_EQ(boost::multiprecision::numerator(p.x), -1);
    EXPECT_EQ(boost::multiprecision::denominator(p.x), 2);
    EXPECT_EQ(p, pt(Rational(-1, 2), Rational(2)));
}

TEST(GeometryProperties, SymmetryIncidenceAndNormalization) {
    Rng rng(20240601);
    for (int trial = 0; trial < 2000; ++trial) {
        const ExactPoint p = random_point(rng, 6, 3), q = random_point(rng, 6, 3), s = random_point(rng, 6, 3);
        if (p == q) continue;
        const CanonicalLine l = line_through(p, q);
        ASSERT_EQ(l, line_through(q, p));
        ASSERT_EQ(incident(l, s), collinear(p, q, s));
        ASSERT_TRUE(incident(l, p) && incident(l, q));

        ASSERT_TRUE(l.a > 0 || (l.a == 0 && l.b > 0));
        ASSERT_EQ(gcd(gcd(abs(l.a), abs(l.b)), abs(l.c)), 1);
        ASSERT_EQ(canonicalize(l.a, l.b, l.c), l);

        const Rational lambda(rng.uniform(-9, 9) | 1, rng.uniform(1, 7));
        ASSERT_EQ(canonicalize(Rational(lambda * l.a), Rational(lambda * l.b), Rational(lambda * l.c)), l);
    }
}
