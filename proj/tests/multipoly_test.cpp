#include <gtest/gtest.h>

#include <random>

#include "apostol/multipoly.hpp"
#include "oracles.hpp"

namespace apostol {
namespace {

const MultiPoly x = MultiPoly::var(VarId::X);
const MultiPoly y = MultiPoly::var(VarId::Y);
const MultiPoly la = MultiPoly::var(VarId::LA);
const MultiPoly lb = MultiPoly::var(VarId::LB);

TEST(Rational, CanonicalForm) {
    Rational q(6, -4);
    EXPECT_EQ(q.numerator(), "-3");
    EXPECT_EQ(q.denominator(), "2");
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational(0, 7).str(), "0");
    EXPECT_EQ(Rational(0, 7).denominator(), "1");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
}

TEST(Rational, ParseRejectsMalformed) {
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("3/-4"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("-"), std::invalid_argument);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, PowersAndBinomials) {
    EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_EQ(binomial(6, 2), Rational(15));
    EXPECT_EQ(binomial(2, 3), Rational(0));
    EXPECT_EQ(factorial(5), Rational(120));
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(MultiPoly, AddCancelsAndMerges) {
    EXPECT_EQ((x + 1) + (-x + 2), MultiPoly(3));
    MultiPoly p = x * y - Rational(1, 3) * la;
    EXPECT_EQ(p + MultiPoly(), p);
    EXPECT_EQ(x * y + x * y, MultiPoly(2) * (x * y));
    EXPECT_EQ((x * y + x * y).str(), "2*x*y");
}

TEST(MultiPoly, Multiply) {
    EXPECT_EQ((x + y) * (x - y), x * x - y * y);
    MultiPoly p = x * x - lb + Rational(1, 7);
    EXPECT_EQ(p * MultiPoly(1), p);
    EXPECT_EQ((x - Rational(1, 2)) * MultiPoly(2), MultiPoly(2) * x - 1);
    EXPECT_TRUE((p * MultiPoly(0)).is_zero());
}

TEST(MultiPoly, Substitute) {
    MultiPoly b2 = x * x - x + Rational(1, 6);
    EXPECT_EQ(substitute(b2, {{VarId::X, Rational(0)}}), MultiPoly(Rational(1, 6)));
    EXPECT_EQ(substitute(la * x + lb, {{VarId::LA, Rational(0)}, {VarId::LB, Rational(1)}}), MultiPoly(1));
    EXPECT_EQ(substitute(b2, {}), b2);
}

TEST(MultiPoly, EqualityIsCanonical) {
    EXPECT_EQ((x + 1).pow(2), x * x + MultiPoly(2) * x + 1);
    EXPECT_FALSE(x == y);
    EXPECT_EQ(MultiPoly(), MultiPoly(0) * x);
    EXPECT_TRUE((x - x).terms().empty());
}

TEST(MultiPoly, GradedLexPrinting) {
    EXPECT_EQ((x * x - x + Rational(1, 6)).str(), "x^2 - x + 1/6");
    EXPECT_EQ((x * x + MultiPoly(2) * y).str(), "x^2 + 2*y");
    EXPECT_EQ((y * y + x * y).str(), "x*y + y^2");
    EXPECT_EQ((Rational(-1, 2) * lb + la).str(), "La - 1/2*Lb");
    EXPECT_EQ(MultiPoly().str(), "0");
    EXPECT_EQ((Rational(-1, 6) + x * x * x).latex(), "x^{3} - \\frac{1}{6}");
}

TEST(MultiPoly, ScaleVariable) {
    MultiPoly p = x * x * y + x - 3;
    EXPECT_EQ(p.scale_variable(VarId::X, Rational(2)), MultiPoly(4) * x * x * y + MultiPoly(2) * x - 3);
    EXPECT_EQ(p.scale_variable(VarId::X, Rational(2)),
              substitute(p, {}).scale_variable(VarId::X, Rational(2)));
}

void expect_canonical(const MultiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        ASSERT_FALSE(c.is_zero());
        ASSERT_EQ(Rational::parse(c.str()), c);
    }
}

TEST(MultiPolyProperty, RingAxioms) {
    std::mt19937 rng(20240501);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly p = oracle::random_poly(rng);
        MultiPoly q = oracle::random_poly(rng);
        MultiPoly s = oracle::random_poly(rng);
        ASSERT_EQ((p + q) + s, p + (q + s));
        ASSERT_EQ((p * q) * s, p * (q * s));
        ASSERT_EQ(p + q, q + p);
        ASSERT_EQ(p * q, q * p);
        ASSERT_EQ(p * (q + s), p * q + p * s);
        ASSERT_TRUE((p + (-p)).is_zero());
        expect_canonical(p * q + s);
        expect_canonical(p - p);
    }
}

TEST(MultiPolyProperty, SubstitutionIsRingHomomorphism) {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly p = oracle::random_poly(rng);
        MultiPoly q = oracle::random_poly(rng);
        Bindings b;
        for (VarId v : kAllVars) {
            if (rng() % 2 == 0) b[v] = oracle::random_rational(rng);
        }
        ASSERT_EQ(substitute(p * q, b), substitute(p, b) * substitute(q, b));
        ASSERT_EQ(substitute(p + q, b), substitute(p, b) + substitute(q, b));
        for (const auto& [v, value] : b) ASSERT_EQ(substitute(p, b).degree(v), 0U);
    }
}

}  // namespace
}  // namespace apostol
