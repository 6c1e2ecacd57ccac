#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ldio {

using Integer = mpz_class;

/// Exact rational number in lowest terms.
///
/// The denominator is always positive and gcd(|num|, den) = 1, so two values
/// are equal iff their stored numerator and denominator are equal. Zero is
/// stored as 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design of a number type

  Rational(const Integer& n) : value_(n) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p", "p/q" or "-p/q" (decimal, no whitespace).
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  /// "p/q", with "/q" omitted when q = 1 and the sign on the numerator.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// r with r*r = n, or nothing when n is not a perfect square.
/// Throws Errc::NegativeInput for n < 0.
std::optional<Integer> int_sqrt_exact(const Integer& n);

/// The nonnegative r with r*r = x when x is the square of a rational.
std::optional<Rational> rat_sqrt_exact(const Rational& x);

}  // namespace ldio
