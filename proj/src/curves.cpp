#include "ldio/curves.hpp"

#include <algorithm>
#include <optional>

#include "ldio/error.hpp"

namespace ldio {

QuarticCurve::QuarticCurve(std::array<FieldValue, 5> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_tag(coeffs_[0], c);
  if (coeffs_[4].is_zero()) throw Error(Errc::InvalidParams, "quartic curve with zero t^4 coefficient");
}

FieldValue QuarticCurve::operator()(const FieldValue& t) const {
  require_same_tag(coeffs_[0], t);
  FieldValue acc = coeffs_[4];
  for (int i = 3; i >= 0; --i) {
    acc *= t;
    acc += coeffs_[i];
  }
  return acc;
}

bool quartic_contains(const QuarticCurve& curve, const FieldValue& t, const FieldValue& v) {
  require_same_tag(t, v);
  return v * v == curve(t);
}

CurvePoint::CurvePoint(const QuarticCurve& curve, FieldValue t, FieldValue v)
    : t_(std::move(t)), v_(std::move(v)) {
  if (!quartic_contains(curve, t_, v_)) {
    throw Error(Errc::NotOnCurve, "point (" + t_.str() + ", " + v_.str() + ") is not on the quartic");
  }
}

QuarticCurve quartic_translate(const QuarticCurve& curve, const FieldValue& t0) {
  require_same_tag(curve.c(0), t0);
  // Synthetic division by (s - t0) repeated: Taylor shift of the coefficients.
  std::array<FieldValue, 5> c = curve.coefficients();
  if (t0.is_zero()) return curve;
  for (int k = 0; k < 4; ++k) {
    for (int i = 3; i >= k; --i) c[i] += c[i + 1] * t0;
  }
  return QuarticCurve(std::move(c));
}

FermatStep fermat_step(const QuarticCurve& curve, const CurvePoint& base, Branch branch) {
  require_same_tag(curve.c(0), base.t());
  const FieldValue& v0 = base.v();
  if (v0.is_zero()) throw Error(Errc::ZeroV, "Fermat step needs a base point with v != 0");

  const QuarticCurve shifted = quartic_translate(curve, base.t());
  auto root = field_sqrt(shifted.c(4));
  if (!root) {
    throw Error(Errc::LeadingNotSquare, "leading coefficient " + shifted.c(4).str() + " is not a square");
  }
  const FieldValue p = branch == Branch::Negative ? -*root : *root;
  const FieldValue q = shifted.c(3) / (p * Rational(2));
  FieldValue a2 = q * q + p * v0 * Rational(2) - shifted.c(2);
  FieldValue a1 = q * v0 * Rational(2) - shifted.c(1);
  if (a2.is_zero()) throw Error(Errc::Degenerate, "Fermat step: quadratic residual vanishes");
  const FieldValue s = -a1 / a2;
  if (s.is_zero()) throw Error(Errc::Degenerate, "Fermat step: forced root coincides with the base point");

  FieldValue v = (p * s + q) * s + v0;
  FieldValue t = s + base.t();
  return FermatStep{CurvePoint(curve, std::move(t), std::move(v)),
                    FermatStepTrace{p, q, std::move(a1), std::move(a2)}};
}

namespace {

std::optional<CurvePoint> fresh_step(const QuarticCurve& curve, const CurvePoint& from,
                                     Branch branch, const std::vector<CurvePoint>& seen) {
  try {
    CurvePoint next = fermat_step(curve, from, branch).point;
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) return std::nullopt;
    return next;
  } catch (const Error& err) {
    if (err.code() == Errc::Degenerate) return std::nullopt;
    throw;
  }
}

}  // namespace

std::vector<CurvePoint> iterate_fermat(const QuarticCurve& curve, const CurvePoint& base, int n,
                                       Branch first) {
  const Branch second = first == Branch::Negative ? Branch::Positive : Branch::Negative;
  if (n < 1) throw Error(Errc::InvalidParams, "iterate_fermat needs a positive step count");
  std::vector<CurvePoint> seen{base};
  for (int i = 0; i < n; ++i) {
    const CurvePoint& from = seen.back();
    auto next = fresh_step(curve, from, first, seen);
    if (!next) next = fresh_step(curve, from, second, seen);
    if (!next) {
      throw Error(Errc::Degenerate, "Fermat ascent stalls at step " + std::to_string(i + 1) +
                                        ": both branches are degenerate");
    }
    seen.push_back(std::move(*next));
  }
  seen.erase(seen.begin());
  return seen;
}

Conic::Conic(FieldValue a, FieldValue b, FieldValue c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  require_same_tag(a_, b_);
  require_same_tag(a_, c_);
  if (a_.is_zero()) throw Error(Errc::DegenerateConic, "degenerate conic: A=0");
}

FieldValue Conic::operator()(const FieldValue& t) const { return (a_ * t + b_) * t + c_; }

bool conic_contains(const Conic& conic, const FieldValue& t, const FieldValue& s) {
  require_same_tag(conic.A(), t);
  require_same_tag(t, s);
  return s * s == conic(t);
}

ConicPoint::ConicPoint(const Conic& conic, FieldValue t, FieldValue s)
    : t_(std::move(t)), s_(std::move(s)) {
  if (!conic_contains(conic, t_, s_)) {
    throw Error(Errc::NotOnCurve, "point (" + t_.str() + ", " + s_.str() + ") is not on the conic");
  }
}

ConicPoint conic_parametrize(const Conic& conic, const ConicPoint& base, const FieldValue& r) {
  require_same_tag(conic.A(), r);
  const FieldValue r2 = r * r;
  const FieldValue den = r2 - conic.A();
  if (den.is_zero()) throw Error(Errc::DenominatorZero, "line slope r satisfies r^2 = A");
  const FieldValue& t0 = base.T();
  const FieldValue& s0 = base.S();
  FieldValue t = (r2 * t0 - s0 * r * Rational(2) + conic.A() * t0 + conic.B()) / den;
  FieldValue s = s0 + r * (t - t0);
  return ConicPoint(conic, std::move(t), std::move(s));
}

}  // namespace ldio
