#include "ldio/rational.hpp"

#include <ostream>

#include "ldio/error.hpp"

namespace ldio {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::BothZero: return "BothZero";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::TagMismatch: return "TagMismatch";
    case Errc::EvalAtZeroPole: return "EvalAtZeroPole";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::ZeroV: return "ZeroV";
    case Errc::LeadingNotSquare: return "LeadingNotSquare";
    case Errc::Degenerate: return "Degenerate";
    case Errc::DenominatorZero: return "DenominatorZero";
    case Errc::ZeroT: return "ZeroT";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NonzeroRemainder: return "NonzeroRemainder";
    case Errc::DegenerateConic: return "DegenerateConic";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::EmptyOutput: return "EmptyOutput";
    case Errc::BadShardIndex: return "BadShardIndex";
    case Errc::ParseError: return "ParseError";
    case Errc::WrongVariable: return "WrongVariable";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : Error(Errc::ParseError, message), offset_(offset), expected_(std::move(expected)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError(0, {"rational literal"},
                     "not a rational literal: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(unsigned exponent) const {
  Rational out;
  mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return out;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  std::string out = value_.get_num().get_str();
  if (value_.get_den() != 1) {
    out += '/';
    out += value_.get_den().get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Integer> int_sqrt_exact(const Integer& n) {
  if (n < 0) throw Error(Errc::NegativeInput, "square root of a negative integer");
  Integer root;
  Integer rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

std::optional<Rational> rat_sqrt_exact(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto num = int_sqrt_exact(x.numerator());
  if (!num) return std::nullopt;
  auto den = int_sqrt_exact(x.denominator());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace ldio
