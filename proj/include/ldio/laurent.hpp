#pragma once

#include <map>

#include "ldio/field_value.hpp"
#include "ldio/poly.hpp"

namespace ldio {

/// Finite sum of a_k x^k over integer k, possibly negative. Only nonzero
/// coefficients are stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms, char var = 'x');

  const Terms& terms() const { return terms_; }
  char variable() const { return var_; }
  LaurentPoly with_variable(char var) const;

  bool is_zero() const { return terms_.empty(); }
  /// Both require a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;
  Rational coeff(int k) const;

  /// Adds c*x^k, dropping the term if it cancels.
  void add_term(int k, const Rational& c);

  /// Throws Errc::EvalAtZeroPole at x = 0 when negative exponents exist.
  Rational operator()(const Rational& x) const;
  FieldValue operator()(const FieldValue& x) const;

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  Terms terms_;
  char var_ = 'x';
};

struct LaurentSplit {
  Poly numerator;
  unsigned shift;
};

/// numerator(x) = x^shift * f(x) with shift = -min(0, min_exp).
/// Throws Errc::ZeroPolynomial for f = 0.
LaurentSplit laurent_split(const LaurentPoly& f);

/// (x+r1)(x+r2)(x+r3) / x^shift
LaurentPoly laurent_from_factored_cubic(const Rational& r1, const Rational& r2,
                                        const Rational& r3, unsigned shift, char var = 'x');

}  // namespace ldio
