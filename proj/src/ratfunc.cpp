#include "ldio/ratfunc.hpp"

#include "ldio/error.hpp"

namespace ldio {

namespace {

bool is_one(const Poly& p) { return p.degree() == 0 && p.leading() == Rational(1); }

}  // namespace

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = poly_gcd(num, den);
  if (is_one(g)) {
    num_ = num;
    den_ = den;
  } else {
    num_ = exact_quotient(num, g);
    den_ = exact_quotient(den, g);
  }
  make_den_monic();
}

void RatFunc::make_den_monic() {
  const Rational& lead = den_.leading();
  if (lead == Rational(1)) return;
  const Rational inv = lead.inverse();
  num_ *= inv;
  den_ *= inv;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero rational function");
  RatFunc out(den_, num_, Reduced{});
  out.make_den_monic();
  return out;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

// Addition and multiplication follow Henrici: only the gcds that can be
// nontrivial for reduced operands are computed.
RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    return *this = RatFunc(num_ + rhs.num_, den_);
  }
  if (is_one(den_)) {
    num_ = num_ * rhs.den_ + rhs.num_;
    den_ = rhs.den_;
    return *this;
  }
  if (is_one(rhs.den_)) {
    num_ += rhs.num_ * den_;
    return *this;
  }
  Poly g = poly_gcd(den_, rhs.den_);
  if (is_one(g)) {
    Poly num = num_ * rhs.den_ + rhs.num_ * den_;
    Poly den = den_ * rhs.den_;
    return *this = RatFunc(std::move(num), std::move(den), Reduced{});
  }
  Poly lhs_cofactor = exact_quotient(den_, g);
  Poly rhs_cofactor = exact_quotient(rhs.den_, g);
  Poly num = num_ * rhs_cofactor + rhs.num_ * lhs_cofactor;
  if (num.is_zero()) return *this = RatFunc();
  Poly h = poly_gcd(num, g);
  Poly den = lhs_cofactor * rhs.den_;
  if (!is_one(h)) {
    num = exact_quotient(num, h);
    den = exact_quotient(den, h);
  }
  *this = RatFunc(std::move(num), std::move(den), Reduced{});
  make_den_monic();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFunc();
  Poly g1 = poly_gcd(num_, rhs.den_);
  Poly g2 = poly_gcd(rhs.num_, den_);
  Poly n1 = is_one(g1) ? num_ : exact_quotient(num_, g1);
  Poly d2 = is_one(g1) ? rhs.den_ : exact_quotient(rhs.den_, g1);
  Poly n2 = is_one(g2) ? rhs.num_ : exact_quotient(rhs.num_, g2);
  Poly d1 = is_one(g2) ? den_ : exact_quotient(den_, g2);
  *this = RatFunc(n1 * n2, d1 * d2, Reduced{});
  make_den_monic();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "rational function division by zero");
  return *this *= rhs.inverse();
}

RatFunc& RatFunc::operator*=(const Rational& k) {
  if (k.is_zero()) return *this = RatFunc();
  num_ *= k;
  return *this;
}

Rational specialize(const RatFunc& x, const Rational& t0) {
  Rational den = x.den()(t0);
  if (den.is_zero()) {
    throw Error(Errc::PoleAtPoint, "rational function has a pole at T = " + t0.str());
  }
  return x.num()(t0) / den;
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& x) {
  if (x.is_zero()) return x;
  // x = c * N / D with N, D monic and coprime; x is a square iff c is a
  // rational square and N, D are squares of monic polynomials.
  const Rational c = x.num().leading();
  auto c_root = rat_sqrt_exact(c);
  if (!c_root) return std::nullopt;
  auto n_root = poly_sqrt_exact(x.num().monic());
  if (!n_root) return std::nullopt;
  auto d_root = poly_sqrt_exact(x.den());
  if (!d_root) return std::nullopt;
  return RatFunc(*n_root * *c_root, *d_root);
}

std::string to_string(const RatFunc& x, char var) {
  return "(" + to_string(x.num(), var) + ")/(" + to_string(x.den(), var) + ")";
}

}  // namespace ldio
