#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldio/rational.hpp"

namespace ldio {

/// Dense univariate polynomial over Q, coefficient i multiplies T^i.
/// The zero polynomial has no stored coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& constant);  // NOLINT
  template <std::signed_integral I>
  Poly(I constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly monomial(const Rational& coeff, unsigned exponent);
  static Poly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of T^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Poly monic() const;
  /// p(k*T)
  Poly scaled_argument(const Rational& k) const;
  Poly pow(unsigned exponent) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& k);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& k) { return lhs *= k; }
  friend Poly operator*(const Rational& k, Poly rhs) { return rhs *= k; }
  template <std::signed_integral I>
  friend Poly operator*(Poly lhs, I k) { return lhs *= Rational(k); }
  template <std::signed_integral I>
  friend Poly operator*(I k, Poly rhs) { return rhs *= Rational(k); }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// num = quotient*den + remainder, deg remainder < deg den.
/// Throws Errc::DivisionByZero when den is zero.
DivRem poly_divrem(const Poly& num, const Poly& den);

/// Quotient of an exact division; Errc::NonzeroRemainder if den does not divide num.
Poly exact_quotient(const Poly& num, const Poly& den);

/// Monic gcd via primitive pseudo-remainder sequences over Z.
/// Throws Errc::BothZero when both inputs are zero.
Poly poly_gcd(const Poly& lhs, const Poly& rhs);

/// s with s*s = p and nonnegative leading coefficient, if one exists over Q.
std::optional<Poly> poly_sqrt_exact(const Poly& p);

/// Descending exponents with explicit '*' and '^', e.g. "T^2-1/2*T+3".
std::string to_string(const Poly& p, char var = 'T');

}  // namespace ldio
