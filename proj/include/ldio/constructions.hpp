#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ldio/curves.hpp"
#include "ldio/laurent.hpp"

namespace ldio {

/// Which family of (f, g) and which curve model:
///   Thm11  f = x+a+b/x,            g = y^2+cy+d+e/y      quartic in t, x = tT, y = T
///   Thm12  f = x+a+b/x,            g = y+c+d/y+e/y^2     quartic in t, x = tT, y = T
///   Thm13  f = (x+a)(x+b)(x+c)/x,  g = (y+d)(y+e)(y+cd/a)/y    conic, x = T, y = dT/a
///   Thm14  f = (x+a)(x+b)(x+c)/x,  g = (y+d)(y+e)(y+cd/a)/y^2  quartic in T, x = T, y = dT/a
enum class Kind { Thm11, Thm12, Thm13, Thm14 };

/// Plus: z^2 = f(x)^2 + g(y)^2.  Minus: z^2 = f(x)^2 - g(y)^2.
enum class Sign { Plus, Minus };

std::string_view kind_name(Kind kind);
std::string_view sign_name(Sign sign);
Kind parse_kind(std::string_view text);
Sign parse_sign(std::string_view text);

struct ConstructionParams {
  Kind kind = Kind::Thm11;
  Sign sign = Sign::Plus;
  Rational a{1}, b{1}, c{1}, d{1}, e{1};

  /// Throws Errc::InvalidParams when any of a..e is zero.
  void validate() const;
};

LaurentPoly family_f(const ConstructionParams& params);
LaurentPoly family_g(const ConstructionParams& params);

/// Thm11/Thm12 live either over Q with T fixed to a nonzero rational, or
/// over Q(T) with T the indeterminate.
class FieldChoice {
 public:
  static FieldChoice symbolic() { return FieldChoice(std::nullopt); }
  static FieldChoice at(const Rational& t0) { return FieldChoice(t0); }

  bool is_symbolic() const { return !t0_; }
  const std::optional<Rational>& t0() const { return t0_; }
  FieldValue parameter() const;

 private:
  explicit FieldChoice(std::optional<Rational> t0) : t0_(std::move(t0)) {}
  std::optional<Rational> t0_;
};

struct QuarticConstruction {
  ConstructionParams params;
  /// Value of T for Thm11/Thm12 (a rational or the indeterminate); unused for Thm14.
  FieldValue parameter;
  QuarticCurve curve;
  CurvePoint base;
  /// The branch giving p = -(natural root of c4): -T^2 for Thm11, -T^3 for
  /// Thm12 and -a for Thm14. It differs from Negative when that root
  /// specializes to a negative number.
  Branch branch = Branch::Negative;
};

struct ConicConstruction {
  ConstructionParams params;
  Conic conic;
  ConicPoint base;
};

/// q(t) = (t^2 T^2 + a t T + b)^2 +- t^2 N_g(T)^2, base (0, b).
QuarticConstruction build_quartic_thm11(const ConstructionParams& params, const FieldChoice& field);
/// q(t) = (t^2 T^3 + a t T^2 + b T)^2 +- t^2 N_g(T)^2, base (0, bT).
QuarticConstruction build_quartic_thm12(const ConstructionParams& params, const FieldChoice& field);
/// Plus: base (-b, ade - bd^2). Minus: base (-ae/d, a^2(bd - ae)/d), where g vanishes.
/// Throws Errc::DegenerateConic for A = 0 or a collapsed conic (zero discriminant).
ConicConstruction build_conic_thm13(const ConstructionParams& params);
/// a^2 T^2 (T+b)^2 +- (dT + ae)^2 over Q. Plus: base (0, ae). Minus: base
/// (-ae/d, -a^2 e (bd - ae)/d^2), where dT + ae vanishes.
QuarticConstruction build_quartic_thm14(const ConstructionParams& params);

struct Solution {
  FieldValue x;
  FieldValue y;
  FieldValue z;
  bool nontrivial = false;
  Sign sign = Sign::Plus;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct VerifyReport {
  bool equation_holds = false;
  bool nontrivial = false;
};

/// f(x) g(y) != 0 and f(x)^2 != g(y)^2.
bool check_nontrivial(const LaurentPoly& f, const LaurentPoly& g, const FieldValue& x,
                      const FieldValue& y);

VerifyReport verify_solution(const LaurentPoly& f, const LaurentPoly& g, Sign sign,
                             const FieldValue& x, const FieldValue& y, const FieldValue& z);

/// Undo the substitution of the construction and recompute z from the point.
/// Throws Errc::ZeroDivisor when the substitution cannot be inverted.
Solution lift_to_solution(const QuarticConstruction& construction, const CurvePoint& point);
Solution lift_to_solution(const ConicConstruction& construction, const ConicPoint& point);

/// The Thm13 conic and base point lifted to Q(r), the point hit by the line
/// of slope r, and the solution it lifts to, all as functions of r.
struct ConicFamily {
  ConicConstruction construction;
  ConicPoint point;
  Solution solution;
};

/// Same errors as build_conic_thm13.
ConicFamily parametrize_thm13(const ConstructionParams& params);

struct GenerateOptions {
  int steps = 1;
  FieldChoice field = FieldChoice::at(Rational(1));
  /// Line slopes for Thm13.
  std::vector<Rational> r_values;
};

/// Builds the curve for params.kind, ascends (or sweeps r), lifts every
/// point, and keeps the verified nontrivial solutions in generation order.
/// Throws Errc::EmptyOutput when nothing survives.
std::vector<Solution> generate_solutions(const ConstructionParams& params,
                                         const GenerateOptions& options);

}  // namespace ldio
