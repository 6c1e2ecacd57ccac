#include "ldio/constructions.hpp"

#include <algorithm>
#include <string>

#include "ldio/error.hpp"

namespace ldio {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Thm11: return "thm11";
    case Kind::Thm12: return "thm12";
    case Kind::Thm13: return "thm13";
    case Kind::Thm14: return "thm14";
  }
  return "?";
}

std::string_view sign_name(Sign sign) { return sign == Sign::Plus ? "plus" : "minus"; }

Kind parse_kind(std::string_view text) {
  for (Kind k : {Kind::Thm11, Kind::Thm12, Kind::Thm13, Kind::Thm14}) {
    if (text == kind_name(k)) return k;
  }
  throw Error(Errc::InvalidParams, "unknown construction kind '" + std::string(text) + "'");
}

Sign parse_sign(std::string_view text) {
  if (text == "plus") return Sign::Plus;
  if (text == "minus") return Sign::Minus;
  throw Error(Errc::InvalidParams, "sign must be 'plus' or 'minus', got '" + std::string(text) + "'");
}

void ConstructionParams::validate() const {
  const std::pair<char, const Rational*> named[] = {{'a', &a}, {'b', &b}, {'c', &c}, {'d', &d}, {'e', &e}};
  for (const auto& [name, value] : named) {
    if (value->is_zero()) {
      throw Error(Errc::InvalidParams, std::string("parameter ") + name + " must be nonzero");
    }
  }
}

LaurentPoly family_f(const ConstructionParams& params) {
  switch (params.kind) {
    case Kind::Thm11:
    case Kind::Thm12:
      return LaurentPoly({{1, Rational(1)}, {0, params.a}, {-1, params.b}}, 'x');
    case Kind::Thm13:
    case Kind::Thm14:
      return laurent_from_factored_cubic(params.a, params.b, params.c, 1, 'x');
  }
  throw Error(Errc::InvalidParams, "unknown kind");
}

LaurentPoly family_g(const ConstructionParams& params) {
  switch (params.kind) {
    case Kind::Thm11:
      return LaurentPoly({{2, Rational(1)}, {1, params.c}, {0, params.d}, {-1, params.e}}, 'y');
    case Kind::Thm12:
      return LaurentPoly({{1, Rational(1)}, {0, params.c}, {-1, params.d}, {-2, params.e}}, 'y');
    case Kind::Thm13:
      return laurent_from_factored_cubic(params.d, params.e, params.c * params.d / params.a, 1, 'y');
    case Kind::Thm14:
      return laurent_from_factored_cubic(params.d, params.e, params.c * params.d / params.a, 2, 'y');
  }
  throw Error(Errc::InvalidParams, "unknown kind");
}

FieldValue FieldChoice::parameter() const {
  if (t0_) return FieldValue(*t0_);
  return FieldValue(RatFunc::variable());
}

namespace {

void require_kind(const ConstructionParams& params, Kind kind) {
  params.validate();
  if (params.kind != kind) {
    throw Error(Errc::InvalidParams, "construction for " + std::string(kind_name(kind)) +
                                         " called with kind " + std::string(kind_name(params.kind)));
  }
}

Branch branch_for_root(const FieldValue& leading, const FieldValue& natural_root) {
  auto root = field_sqrt(leading);
  return root && *root == natural_root ? Branch::Negative : Branch::Positive;
}

FieldValue eval_poly(const Poly& p, const FieldValue& x) {
  FieldValue acc = x.lift(Rational());
  for (int k = p.degree(); k >= 0; --k) {
    acc *= x;
    acc += p.coefficients()[k];
  }
  return acc;
}

Rational sign_factor(Sign sign) { return sign == Sign::Plus ? Rational(1) : Rational(-1); }

// Thm11 and Thm12 share one shape: with f = N_f(x)/x and g = N_g(y)/y^s,
// substituting x = tT, y = T and clearing t^2 T^(2s) gives
//   (T^(s-1) N_f(tT))^2 +- t^2 N_g(T)^2 = (T^s t z)^2.
QuarticConstruction build_tT_quartic(const ConstructionParams& params, const FieldChoice& field) {
  const FieldValue T = field.parameter();
  if (T.is_zero()) throw Error(Errc::ZeroT, "the parameter T must be nonzero");

  const LaurentSplit fs = laurent_split(family_f(params));
  const LaurentSplit gs = laurent_split(family_g(params));
  const FieldValue scale = T.pow(gs.shift - 1);

  std::array<FieldValue, 3> inner;  // coefficients of t^0..t^2
  for (int k = 0; k < 3; ++k) inner[k] = scale * T.pow(k) * fs.numerator.coeff(k);

  std::array<FieldValue, 5> q;
  for (auto& c : q) c = T.lift(Rational());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) q[i + j] += inner[i] * inner[j];
  }
  const FieldValue ng = eval_poly(gs.numerator, T);
  q[2] += ng * ng * sign_factor(params.sign);

  QuarticCurve curve(q);
  CurvePoint base(curve, T.lift(Rational()), inner[0]);
  return QuarticConstruction{params, T, std::move(curve), std::move(base), branch_for_root(q[4], inner[2])};
}

// Thm13/Thm14 clear denominators of f(T)^2 +- g(kT)^2 with k = d/a and strip
// the common square factor (T+a)^2 (T+c)^2. The division must be exact.
Poly reduced_model(const ConstructionParams& params, const Rational& lead_scale) {
  const LaurentSplit fs = laurent_split(family_f(params));
  const LaurentSplit gs = laurent_split(family_g(params));
  const Rational k = params.d / params.a;
  // Multiply f^2 +- g^2 by lead_scale * T^(2 gs.shift):
  //   f(T)^2 T^(2 gs.shift) = N_f(T)^2 T^(2 (gs.shift - fs.shift))
  //   g(kT)^2 T^(2 gs.shift) = N_g(kT)^2 / k^(2 gs.shift)
  Poly f_part = fs.numerator * fs.numerator * Poly::monomial(Rational(1), 2 * (gs.shift - fs.shift));
  Poly g_num = gs.numerator.scaled_argument(k);
  Poly g_part = g_num * g_num * k.pow(2 * gs.shift).inverse();
  Poly lhs = (f_part + g_part * sign_factor(params.sign)) * lead_scale;

  Poly common = Poly({params.a, Rational(1)}) * Poly({params.c, Rational(1)});
  auto [quotient, remainder] = poly_divrem(lhs, common * common);
  if (!remainder.is_zero()) {
    throw Error(Errc::NonzeroRemainder, "curve model does not factor through (T+a)^2 (T+c)^2");
  }
  return quotient;
}

void require_nonzero(const FieldValue& value, const char* what) {
  if (value.is_zero()) throw Error(Errc::ZeroDivisor, std::string("cannot lift point: ") + what);
}

Solution finish_solution(const ConstructionParams& params, FieldValue x, FieldValue y, FieldValue z) {
  const LaurentPoly f = family_f(params);
  const LaurentPoly g = family_g(params);
  const VerifyReport report = verify_solution(f, g, params.sign, x, y, z);
  if (!report.equation_holds) {
    throw Error(Errc::VerificationFailed, "lifted point fails z^2 = f(x)^2 " +
                                              std::string(params.sign == Sign::Plus ? "+" : "-") +
                                              " g(y)^2 at x = " + x.str() + ", y = " + y.str());
  }
  return Solution{std::move(x), std::move(y), std::move(z), report.nontrivial, params.sign};
}

}  // namespace

QuarticConstruction build_quartic_thm11(const ConstructionParams& params, const FieldChoice& field) {
  require_kind(params, Kind::Thm11);
  return build_tT_quartic(params, field);
}

QuarticConstruction build_quartic_thm12(const ConstructionParams& params, const FieldChoice& field) {
  require_kind(params, Kind::Thm12);
  return build_tT_quartic(params, field);
}

ConicConstruction build_conic_thm13(const ConstructionParams& params) {
  require_kind(params, Kind::Thm13);
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& d = params.d;
  const Rational& e = params.e;
  const Poly model = reduced_model(params, a.pow(4));
  const Rational A = model.coeff(2);
  const Rational B = model.coeff(1);
  const Rational C = model.coeff(0);
  if (A.is_zero()) throw Error(Errc::DegenerateConic, "degenerate conic: A=0");
  if (B * B == Rational(4) * A * C) {
    throw Error(Errc::DegenerateConic, "degenerate conic: collapsed to a square (ae = bd)");
  }
  Conic conic(A, B, C);
  if (params.sign == Sign::Plus) {
    ConicPoint base(conic, -b, a * d * e - b * d * d);
    return ConicConstruction{params, std::move(conic), std::move(base)};
  }
  ConicPoint base(conic, -a * e / d, a * a * (b * d - a * e) / d);
  return ConicConstruction{params, std::move(conic), std::move(base)};
}

QuarticConstruction build_quartic_thm14(const ConstructionParams& params) {
  require_kind(params, Kind::Thm14);
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& d = params.d;
  const Rational& e = params.e;
  const Poly model = reduced_model(params, a * a);
  std::array<FieldValue, 5> q;
  for (int i = 0; i < 5; ++i) q[i] = model.coeff(i);
  QuarticCurve curve(q);
  FieldValue t0 = params.sign == Sign::Plus ? Rational() : -a * e / d;
  FieldValue s0 = params.sign == Sign::Plus ? a * e : -a * a * e * (b * d - a * e) / (d * d);
  if (s0.is_zero()) {
    throw Error(Errc::Degenerate, "base point has S = 0 (ae = bd); no tangent ascent available");
  }
  CurvePoint base(curve, std::move(t0), std::move(s0));
  const Branch branch = branch_for_root(curve.c(4), FieldValue(a));
  return QuarticConstruction{params, FieldValue(Rational()), std::move(curve), std::move(base), branch};
}

bool check_nontrivial(const LaurentPoly& f, const LaurentPoly& g, const FieldValue& x,
                      const FieldValue& y) {
  const FieldValue fx = f(x);
  const FieldValue gy = g(y);
  return !(fx * gy).is_zero() && !(fx * fx == gy * gy);
}

VerifyReport verify_solution(const LaurentPoly& f, const LaurentPoly& g, Sign sign,
                             const FieldValue& x, const FieldValue& y, const FieldValue& z) {
  require_same_tag(x, y);
  require_same_tag(x, z);
  const FieldValue fx = f(x);
  const FieldValue gy = g(y);
  const FieldValue f2 = fx * fx;
  const FieldValue g2 = gy * gy;
  const FieldValue rhs = sign == Sign::Plus ? f2 + g2 : f2 - g2;
  VerifyReport report;
  report.equation_holds = z * z == rhs;
  report.nontrivial = !(fx * gy).is_zero() && !(f2 == g2);
  return report;
}

Solution lift_to_solution(const QuarticConstruction& construction, const CurvePoint& point) {
  const ConstructionParams& params = construction.params;
  const FieldValue& t = point.t();
  if (params.kind == Kind::Thm14) {
    const Rational& a = params.a;
    require_nonzero(t, "T = 0");
    const FieldValue factor = (t + a) * (t + params.c);
    require_nonzero(factor, "T is -a or -c");
    FieldValue z = factor * point.v() / (t * t * a);
    return finish_solution(params, t, t * (params.d / a), std::move(z));
  }
  const FieldValue& T = construction.parameter;
  require_nonzero(t, "t = 0");
  require_nonzero(T, "T = 0");
  // v = T^s t z with s = 1 for Thm11 and s = 2 for Thm12.
  const unsigned s = params.kind == Kind::Thm11 ? 1 : 2;
  FieldValue z = point.v() / (T.pow(s) * t);
  return finish_solution(params, t * T, T, std::move(z));
}

Solution lift_to_solution(const ConicConstruction& construction, const ConicPoint& point) {
  const ConstructionParams& params = construction.params;
  const Rational& a = params.a;
  const FieldValue& T = point.T();
  require_nonzero(T, "T = 0");
  const FieldValue factor = (T + a) * (T + params.c);
  require_nonzero(factor, "T is -a or -c");
  FieldValue z = factor * point.S() / (T * (a * a));
  return finish_solution(params, T, T * (params.d / a), std::move(z));
}

ConicFamily parametrize_thm13(const ConstructionParams& params) {
  const ConicConstruction numeric = build_conic_thm13(params);
  const FieldValue r(RatFunc::variable());
  auto lift = [&](const FieldValue& v) { return r.lift(v.rational()); };
  Conic conic(lift(numeric.conic.A()), lift(numeric.conic.B()), lift(numeric.conic.C()));
  ConicPoint base(conic, lift(numeric.base.T()), lift(numeric.base.S()));
  ConicConstruction construction{params, std::move(conic), std::move(base)};
  ConicPoint point = conic_parametrize(construction.conic, construction.base, r);
  Solution solution = lift_to_solution(construction, point);
  return ConicFamily{std::move(construction), std::move(point), std::move(solution)};
}

namespace {

template <class Construction, class Point>
void keep_if_useful(std::vector<Solution>& out, const Construction& construction, const Point& point) {
  try {
    Solution sol = lift_to_solution(construction, point);
    if (!sol.nontrivial) return;
    if (std::find(out.begin(), out.end(), sol) != out.end()) return;
    out.push_back(std::move(sol));
  } catch (const Error& err) {
    if (err.code() != Errc::ZeroDivisor) throw;
  }
}

}  // namespace

std::vector<Solution> generate_solutions(const ConstructionParams& params,
                                         const GenerateOptions& options) {
  params.validate();
  if (options.steps < 1 && params.kind != Kind::Thm13) {
    throw Error(Errc::InvalidParams, "steps must be positive");
  }
  std::vector<Solution> out;
  switch (params.kind) {
    case Kind::Thm11:
    case Kind::Thm12:
    case Kind::Thm14: {
      const QuarticConstruction qc = params.kind == Kind::Thm11   ? build_quartic_thm11(params, options.field)
                                     : params.kind == Kind::Thm12 ? build_quartic_thm12(params, options.field)
                                                                  : build_quartic_thm14(params);
      for (const auto& point : iterate_fermat(qc.curve, qc.base, options.steps, qc.branch)) {
        keep_if_useful(out, qc, point);
      }
      break;
    }
    case Kind::Thm13: {
      const ConicConstruction cc = build_conic_thm13(params);
      if (options.r_values.empty()) throw Error(Errc::InvalidParams, "thm13 needs at least one r value");
      for (const auto& r : options.r_values) {
        keep_if_useful(out, cc, conic_parametrize(cc.conic, cc.base, FieldValue(r)));
      }
      break;
    }
  }
  if (out.empty()) {
    throw Error(Errc::EmptyOutput, "every generated point was degenerate or trivial");
  }
  return out;
}

}  // namespace ldio
