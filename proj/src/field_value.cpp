#include "ldio/field_value.hpp"

#include "ldio/error.hpp"

namespace ldio {

void require_same_tag(const FieldValue& lhs, const FieldValue& rhs) {
  if (lhs.tag() != rhs.tag()) {
    throw Error(Errc::TagMismatch, "arithmetic mixes values from Q and Q(T)");
  }
}

const Rational& FieldValue::rational() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(Errc::TagMismatch, "expected a value in Q, got one in Q(T)");
}

const RatFunc& FieldValue::ratfunc() const {
  if (auto* f = std::get_if<RatFunc>(&value_)) return *f;
  throw Error(Errc::TagMismatch, "expected a value in Q(T), got one in Q");
}

bool FieldValue::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

FieldValue FieldValue::lift(const Rational& k) const {
  if (is_rational()) return FieldValue(k);
  return FieldValue(RatFunc(k));
}

FieldValue FieldValue::operator-() const {
  return std::visit([](const auto& v) { return FieldValue(-v); }, value_);
}

FieldValue& FieldValue::operator+=(const FieldValue& rhs) {
  require_same_tag(*this, rhs);
  if (is_rational()) {
    std::get<Rational>(value_) += rhs.rational();
  } else {
    std::get<RatFunc>(value_) += rhs.ratfunc();
  }
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& rhs) {
  require_same_tag(*this, rhs);
  if (is_rational()) {
    std::get<Rational>(value_) -= rhs.rational();
  } else {
    std::get<RatFunc>(value_) -= rhs.ratfunc();
  }
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& rhs) {
  require_same_tag(*this, rhs);
  if (is_rational()) {
    std::get<Rational>(value_) *= rhs.rational();
  } else {
    std::get<RatFunc>(value_) *= rhs.ratfunc();
  }
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& rhs) {
  require_same_tag(*this, rhs);
  if (is_rational()) {
    std::get<Rational>(value_) /= rhs.rational();
  } else {
    std::get<RatFunc>(value_) /= rhs.ratfunc();
  }
  return *this;
}

FieldValue& FieldValue::operator*=(const Rational& k) {
  std::visit([&k](auto& v) { v *= k; }, value_);
  return *this;
}

FieldValue& FieldValue::operator+=(const Rational& k) {
  if (is_rational()) {
    std::get<Rational>(value_) += k;
  } else {
    std::get<RatFunc>(value_) += RatFunc(k);
  }
  return *this;
}

bool operator==(const FieldValue& lhs, const FieldValue& rhs) {
  require_same_tag(lhs, rhs);
  return lhs.value_ == rhs.value_;
}

FieldValue FieldValue::pow(unsigned exponent) const {
  FieldValue result = lift(Rational(1));
  FieldValue base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string FieldValue::str(char var) const {
  if (is_rational()) return rational().str();
  return to_string(ratfunc(), var);
}

std::optional<FieldValue> field_sqrt(const FieldValue& x) {
  if (x.is_rational()) {
    auto root = rat_sqrt_exact(x.rational());
    if (!root) return std::nullopt;
    return FieldValue(*root);
  }
  auto root = ratfunc_sqrt(x.ratfunc());
  if (!root) return std::nullopt;
  return FieldValue(*root);
}

}  // namespace ldio
