#pragma once

#include <optional>
#include <string>

#include "ldio/poly.hpp"

namespace ldio {

/// Element of Q(T): num/den with gcd(num, den) = 1 and den monic.
/// Zero is 0/1, so equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}                    // NOLINT
  /// Reduces num/den; throws Errc::DivisionByZero when den is zero.
  RatFunc(const Poly& num, const Poly& den);

  /// The indeterminate T.
  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc inverse() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  RatFunc& operator*=(const Rational& k);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void make_den_monic();

  Poly num_;
  Poly den_;
};

/// Exact value num(t0)/den(t0); throws Errc::PoleAtPoint when den(t0) = 0.
Rational specialize(const RatFunc& x, const Rational& t0);

/// Canonical square root: numerator with positive leading coefficient.
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& x);

/// "(num)/(den)" in the Poly text form.
std::string to_string(const RatFunc& x, char var = 'T');

}  // namespace ldio
