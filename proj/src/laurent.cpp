#include "ldio/laurent.hpp"

#include "ldio/error.hpp"

namespace ldio {

LaurentPoly::LaurentPoly(Terms terms, char var) : var_(var) {
  for (auto& [k, c] : terms) {
    if (!c.is_zero()) terms_.emplace(k, std::move(c));
  }
}

LaurentPoly LaurentPoly::with_variable(char var) const {
  LaurentPoly out = *this;
  out.var_ = var;
  return out;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "zero Laurent polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "zero Laurent polynomial has no exponents");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::add_term(int k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational LaurentPoly::operator()(const Rational& x) const {
  return (*this)(FieldValue(x)).rational();
}

FieldValue LaurentPoly::operator()(const FieldValue& x) const {
  if (terms_.empty()) return x.lift(Rational());
  if (x.is_zero() && min_exp() < 0) {
    throw Error(Errc::EvalAtZeroPole, "Laurent polynomial with negative exponents evaluated at 0");
  }
  // Horner on the numerator, then divide by x^shift.
  const int lo = std::min(0, min_exp());
  FieldValue acc = x.lift(Rational());
  for (int k = max_exp(); k >= lo; --k) {
    acc *= x;
    acc += coeff(k);
  }
  if (lo < 0) acc /= x.pow(static_cast<unsigned>(-lo));
  return acc;
}

LaurentSplit laurent_split(const LaurentPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot split the zero Laurent polynomial");
  const int lo = std::min(0, f.min_exp());
  std::vector<Rational> coeffs(f.max_exp() - lo + 1);
  for (const auto& [k, c] : f.terms()) coeffs[k - lo] = c;
  return {Poly(std::move(coeffs)), static_cast<unsigned>(-lo)};
}

LaurentPoly laurent_from_factored_cubic(const Rational& r1, const Rational& r2,
                                        const Rational& r3, unsigned shift, char var) {
  const int s = static_cast<int>(shift);
  LaurentPoly out({}, var);
  out.add_term(3 - s, Rational(1));
  out.add_term(2 - s, r1 + r2 + r3);
  out.add_term(1 - s, r1 * r2 + r1 * r3 + r2 * r3);
  out.add_term(-s, r1 * r2 * r3);
  return out;
}

}  // namespace ldio
