#pragma once

#include <array>
#include <vector>

#include "ldio/field_value.hpp"

namespace ldio {

/// v^2 = c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0 over Q or Q(T).
class QuarticCurve {
 public:
  /// coeffs[i] multiplies t^i. Requires a shared field tag and c4 != 0.
  explicit QuarticCurve(std::array<FieldValue, 5> coeffs);

  const FieldValue& c(std::size_t i) const { return coeffs_[i]; }
  const std::array<FieldValue, 5>& coefficients() const { return coeffs_; }
  FieldTag tag() const { return coeffs_[0].tag(); }

  FieldValue operator()(const FieldValue& t) const;

  friend bool operator==(const QuarticCurve&, const QuarticCurve&) = default;

 private:
  std::array<FieldValue, 5> coeffs_;
};

/// A point known to lie on a particular quartic; the constructor checks it.
class CurvePoint {
 public:
  /// Throws Errc::NotOnCurve when v^2 != q(t).
  CurvePoint(const QuarticCurve& curve, FieldValue t, FieldValue v);

  const FieldValue& t() const { return t_; }
  const FieldValue& v() const { return v_; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  FieldValue t_;
  FieldValue v_;
};

/// The quantities of one Fermat step, expressed on the curve translated so
/// the base point sits at t = 0: v = p s^2 + q s + v0 kills the s^4 and s^3
/// terms, leaving residual_quadratic * s^2 + residual_linear * s.
struct FermatStepTrace {
  FieldValue p;
  FieldValue q;
  FieldValue residual_linear;
  FieldValue residual_quadratic;
};

enum class Branch { Negative, Positive };

struct FermatStep {
  CurvePoint point;
  FermatStepTrace trace;
};

bool quartic_contains(const QuarticCurve& curve, const FieldValue& t, const FieldValue& v);

/// Coefficients of q(s + t0).
QuarticCurve quartic_translate(const QuarticCurve& curve, const FieldValue& t0);

/// One tangent-style ascent from base. The default Negative branch takes
/// p = -sqrt(c4).
///
/// Errors: Errc::ZeroV when base.v = 0, Errc::LeadingNotSquare when c4 has
/// no square root in the field, Errc::Degenerate when the forced root
/// coincides with the base (or the quadratic residual vanishes).
FermatStep fermat_step(const QuarticCurve& curve, const CurvePoint& base,
                       Branch branch = Branch::Negative);

/// n successive ascent points starting from base. Each stage tries `first`
/// and falls back to the other branch when the result is degenerate or
/// repeats an earlier point.
std::vector<CurvePoint> iterate_fermat(const QuarticCurve& curve, const CurvePoint& base, int n,
                                       Branch first = Branch::Negative);

/// S^2 = A T^2 + B T + C
class Conic {
 public:
  /// Requires a shared field tag and A != 0.
  Conic(FieldValue a, FieldValue b, FieldValue c);

  const FieldValue& A() const { return a_; }
  const FieldValue& B() const { return b_; }
  const FieldValue& C() const { return c_; }
  FieldTag tag() const { return a_.tag(); }

  FieldValue operator()(const FieldValue& t) const;

 private:
  FieldValue a_;
  FieldValue b_;
  FieldValue c_;
};

class ConicPoint {
 public:
  /// Throws Errc::NotOnCurve when S^2 != A T^2 + B T + C.
  ConicPoint(const Conic& conic, FieldValue t, FieldValue s);

  const FieldValue& T() const { return t_; }
  const FieldValue& S() const { return s_; }

  friend bool operator==(const ConicPoint&, const ConicPoint&) = default;

 private:
  FieldValue t_;
  FieldValue s_;
};

bool conic_contains(const Conic& conic, const FieldValue& t, const FieldValue& s);

/// Second intersection of the line S = S0 + r (T - T0) with the conic.
/// Throws Errc::DenominatorZero when r^2 = A.
ConicPoint conic_parametrize(const Conic& conic, const ConicPoint& base, const FieldValue& r);

}  // namespace ldio
