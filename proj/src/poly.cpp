#include "ldio/poly.hpp"

#include <utility>

#include "ldio/error.hpp"

namespace ldio {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Clears denominators and removes the content; the result is an integer
// polynomial with positive leading coefficient, associate to p over Q.
IntPoly primitive_part(const Poly& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) {
    Integer den = c.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer scaled = lcm / c.denominator();
    out.push_back(c.numerator() * scaled);
  }
  make_primitive(out);
  return out;
}

// Replaces r by a nonzero integer multiple of (r mod b), then makes it primitive.
void pseudo_remainder(IntPoly& r, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lc_b = b.back();
  Integer g, mr, mb;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    mpz_gcd(g.get_mpz_t(), r.back().get_mpz_t(), lc_b.get_mpz_t());
    mpz_divexact(mr.get_mpz_t(), lc_b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(mb.get_mpz_t(), r.back().get_mpz_t(), g.get_mpz_t());
    if (mr != 1) {
      for (auto& c : r) c *= mr;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      mpz_submul(r[i + shift].get_mpz_t(), mb.get_mpz_t(), b[i].get_mpz_t());
    }
    trim(r);
  }
  make_primitive(r);
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& coeff, unsigned exponent) {
  Poly out;
  if (coeff.is_zero()) return out;
  out.coeffs_.assign(exponent + 1, Rational());
  out.coeffs_[exponent] = coeff;
  return out;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

const Rational& Poly::leading() const {
  static const Rational zero;
  return coeffs_.empty() ? zero : coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::scaled_argument(const Rational& k) const {
  Poly out = *this;
  Rational power(1);
  for (auto& c : out.coeffs_) {
    c *= power;
    power *= k;
  }
  out.normalize();
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& k) {
  if (k.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= k;
  return *this;
}

DivRem poly_divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly(), num};
  const int dd = den.degree();
  const Rational inv_lead = den.leading().inverse();
  std::vector<Rational> rem(num.coefficients().begin(), num.coefficients().end());
  std::vector<Rational> quot(num.degree() - dd + 1);
  for (int k = num.degree() - dd; k >= 0; --k) {
    const Rational factor = rem[k + dd] * inv_lead;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= factor * den.coefficients()[i];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& num, const Poly& den) {
  auto [q, r] = poly_divrem(num, den);
  if (!r.is_zero()) throw Error(Errc::NonzeroRemainder, "polynomial division is not exact");
  return q;
}

Poly poly_gcd(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  if (lhs.is_zero()) return rhs.monic();
  if (rhs.is_zero()) return lhs.monic();
  if (lhs.degree() == 0 || rhs.degree() == 0) return Poly(Rational(1));

  IntPoly a = primitive_part(lhs);
  IntPoly b = primitive_part(rhs);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Poly(Rational(1));
    pseudo_remainder(a, b);
    std::swap(a, b);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a) coeffs.emplace_back(c, a.back());
  return Poly(std::move(coeffs));
}

std::optional<Poly> poly_sqrt_exact(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (p.degree() % 2 != 0) return std::nullopt;
  auto lead_root = rat_sqrt_exact(p.leading());
  if (!lead_root) return std::nullopt;

  const int m = p.degree() / 2;
  std::vector<Rational> s(m + 1);
  s[m] = *lead_root;
  const Rational inv_two_lead = (Rational(2) * s[m]).inverse();
  // Match the coefficient of T^(m+k) from the top down; only s[k+1..m] are known.
  for (int k = m - 1; k >= 0; --k) {
    Rational acc = p.coeff(m + k);
    for (int i = k + 1; i < m; ++i) acc -= s[i] * s[m + k - i];
    s[k] = acc * inv_two_lead;
  }
  Poly root(std::move(s));
  if (root * root != p) return std::nullopt;
  return root;
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = c.str();
    } else {
      std::string power(1, var);
      if (k > 1) power += "^" + std::to_string(k);
      if (c == Rational(1)) {
        term = power;
      } else if (c == Rational(-1)) {
        term = "-" + power;
      } else {
        term = c.str() + "*" + power;
      }
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

}  // namespace ldio
