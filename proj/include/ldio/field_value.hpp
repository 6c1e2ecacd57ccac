#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ldio/ratfunc.hpp"

namespace ldio {

enum class FieldTag { Q, QT };

/// An element of either Q or Q(T). Binary operations require both operands
/// to carry the same tag and throw Errc::TagMismatch otherwise. A bare
/// Rational operand is a scalar and combines with either field.
class FieldValue {
 public:
  FieldValue() : value_(Rational()) {}
  FieldValue(const Rational& r) : value_(r) {}  // NOLINT
  FieldValue(const RatFunc& f) : value_(f) {}   // NOLINT
  template <std::signed_integral I>
  FieldValue(I n) : value_(Rational(n)) {}  // NOLINT

  FieldTag tag() const { return value_.index() == 0 ? FieldTag::Q : FieldTag::QT; }
  bool is_rational() const { return tag() == FieldTag::Q; }

  /// Throw Errc::TagMismatch when the value lives in the other field.
  const Rational& rational() const;
  const RatFunc& ratfunc() const;

  bool is_zero() const;
  /// The constant k embedded in this value's field.
  FieldValue lift(const Rational& k) const;

  FieldValue operator-() const;
  FieldValue& operator+=(const FieldValue& rhs);
  FieldValue& operator-=(const FieldValue& rhs);
  FieldValue& operator*=(const FieldValue& rhs);
  FieldValue& operator/=(const FieldValue& rhs);
  FieldValue& operator*=(const Rational& k);
  FieldValue& operator+=(const Rational& k);

  friend FieldValue operator+(FieldValue lhs, const FieldValue& rhs) { return lhs += rhs; }
  friend FieldValue operator-(FieldValue lhs, const FieldValue& rhs) { return lhs -= rhs; }
  friend FieldValue operator*(FieldValue lhs, const FieldValue& rhs) { return lhs *= rhs; }
  friend FieldValue operator/(FieldValue lhs, const FieldValue& rhs) { return lhs /= rhs; }
  friend FieldValue operator*(FieldValue lhs, const Rational& k) { return lhs *= k; }
  friend FieldValue operator*(const Rational& k, FieldValue rhs) { return rhs *= k; }
  friend FieldValue operator+(FieldValue lhs, const Rational& k) { return lhs += k; }

  /// Exact equality; throws Errc::TagMismatch across fields.
  friend bool operator==(const FieldValue& lhs, const FieldValue& rhs);

  FieldValue pow(unsigned exponent) const;

  /// Rationals as "p/q", rational functions as "(num)/(den)".
  std::string str(char var = 'T') const;

 private:
  std::variant<Rational, RatFunc> value_;
};

void require_same_tag(const FieldValue& lhs, const FieldValue& rhs);

/// Square root in the value's own field, canonicalized to the nonnegative
/// (Q) or positive-leading-coefficient (Q(T)) root.
std::optional<FieldValue> field_sqrt(const FieldValue& x);

}  // namespace ldio
