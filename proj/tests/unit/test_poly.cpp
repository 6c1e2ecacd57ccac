#include <gtest/gtest.h>

#include "ldio/error.hpp"
#include "ldio/poly.hpp"
#include "random_values.hpp"

namespace ldio {
namespace {

const Poly T = Poly::variable();

TEST(Poly, Normalization) {
  EXPECT_EQ(Poly(std::vector<Rational>{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_TRUE(Poly(std::vector<Rational>{0, 0}).is_zero());
  EXPECT_EQ((T + 1) - T - 1, Poly());
}

TEST(Poly, Multiply) {
  EXPECT_EQ((T + 1) * (T - 1), T * T - 1);
  const Poly p = T * T + 2 * T + 19;
  EXPECT_EQ(p * Poly(1), p);
  EXPECT_EQ(p * Poly(), Poly());
}

TEST(Poly, Gcd) {
  EXPECT_EQ(poly_gcd(T * T - 1, T - 1), T - 1);
  EXPECT_EQ(poly_gcd(T * T + 1, T + 3), Poly(1));
  EXPECT_EQ(poly_gcd((T + 1).pow(2) * (T - 2), (T + 1) * (T + 5)), T + 1);
  EXPECT_EQ(poly_gcd(Poly(), 3 * T + 6), T + 2) << "monic";
  try {
    poly_gcd(Poly(), Poly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
}

TEST(Poly, DivRem) {
  auto [q1, r1] = poly_divrem(T * T - 1, T - 1);
  EXPECT_EQ(q1, T + 1);
  EXPECT_EQ(r1, Poly());
  auto [q2, r2] = poly_divrem(T * T + 1, T - 1);
  EXPECT_EQ(q2, T + 1);
  EXPECT_EQ(r2, Poly(2));
  EXPECT_THROW(poly_divrem(T, Poly()), Error);
  EXPECT_EQ(exact_quotient(T * T - 1, T + 1), T - 1);
  try {
    exact_quotient(T * T + 1, T + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonzeroRemainder);
  }
}

TEST(Poly, Sqrt) {
  EXPECT_EQ(poly_sqrt_exact(T * T + 2 * T + 1), T + 1);
  EXPECT_EQ(poly_sqrt_exact(T.pow(4)), T * T);
  EXPECT_EQ(poly_sqrt_exact(T * T + 1), std::nullopt);
  EXPECT_EQ(poly_sqrt_exact(T.pow(3)), std::nullopt);
  EXPECT_EQ(poly_sqrt_exact(-(T * T)), std::nullopt);
  EXPECT_EQ(poly_sqrt_exact(Poly()), Poly());
  EXPECT_EQ(poly_sqrt_exact(Rational::parse("9/4") * T * T), Rational::parse("3/2") * T);
}

TEST(Poly, EvaluateAndScale) {
  const Poly p = T * T * T - 2 * T + 5;
  EXPECT_EQ(p(Rational(2)), Rational(9));
  EXPECT_EQ(p(Rational::parse("-1/2")), Rational::parse("47/8"));
  const Rational k = Rational::parse("3/2");
  EXPECT_EQ(p.scaled_argument(k)(Rational(4)), p(k * 4));
}

TEST(Poly, ToString) {
  EXPECT_EQ(to_string(T * T - Rational::parse("1/2") * T + 3), "T^2-1/2*T+3");
  EXPECT_EQ(to_string(Poly()), "0");
  EXPECT_EQ(to_string(-T, 'r'), "-r");
}

TEST(PolyProperty, DivRemReconstructs) {
  testing::Draw draw(21);
  for (int i = 0; i < 300; ++i) {
    const Poly num = draw.poly_up_to(8);
    const Poly den = draw.poly_up_to(4);
    auto [quo, rem] = poly_divrem(num, den);
    ASSERT_EQ(quo * den + rem, num);
    ASSERT_LT(rem.degree(), den.degree());
  }
}

TEST(PolyProperty, GcdOfCommonFactor) {
  testing::Draw draw(22);
  for (int i = 0; i < 200; ++i) {
    const Poly h = draw.poly(static_cast<int>(draw.integer(1, 3)));
    const Poly a = draw.poly_up_to(4), b = draw.poly_up_to(4);
    const Poly g = poly_gcd(a * h, b * h);
    ASSERT_EQ(g.leading(), Rational(1));
    ASSERT_TRUE(poly_divrem(g, h.monic()).remainder.is_zero()) << to_string(g) << " vs " << to_string(h);
    ASSERT_TRUE(poly_divrem(a * h, g).remainder.is_zero());
    ASSERT_TRUE(poly_divrem(b * h, g).remainder.is_zero());
  }
}

TEST(PolyProperty, SqrtOfSquare) {
  testing::Draw draw(23);
  for (int i = 0; i < 200; ++i) {
    const Poly p = draw.poly_up_to(6) * draw.nonzero_rational(9, 9);
    const Poly expected = p.leading().sign() > 0 ? p : -p;
    ASSERT_EQ(poly_sqrt_exact(p * p), expected);
  }
}

TEST(PolyProperty, EvaluationIsMultiplicative) {
  testing::Draw draw(24);
  for (int i = 0; i < 200; ++i) {
    const Poly a = draw.poly_up_to(5), b = draw.poly_up_to(5);
    const Rational x = draw.rational();
    ASSERT_EQ((a * b)(x), a(x) * b(x));
    ASSERT_EQ((a + b)(x), a(x) + b(x));
  }
}

}  // namespace
}  // namespace ldio
