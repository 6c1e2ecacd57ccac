#include "ldio/closed_forms.hpp"

#include <functional>
#include <initializer_list>
#include <random>

#include "ldio/error.hpp"

namespace ldio {

namespace closed_form {

namespace {

// Coefficients listed from T^0 upward.
Poly up(std::initializer_list<Rational> coeffs) { return Poly(std::vector<Rational>(coeffs)); }

Poly thm11_denominator(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  return up({e * e, 2 * d * e, 2 * c * e + d * d + 4 * b, 2 * c * d + 2 * e, c * c + 2 * d, 2 * c, 1});
}

Poly thm12_denominator(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  return up({e * e, 2 * d * e, 2 * c * e + d * d, 2 * c * d + 2 * e, c * c + 4 * b + 2 * d, 2 * c, 1});
}

}  // namespace

RatFunc thm11_t1(const ConstructionParams& p) {
  return RatFunc(Poly::monomial(-4 * p.a * p.b, 1), thm11_denominator(p));
}

RatFunc thm11_v1(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  const Rational a2 = a * a, c2 = c * c, d2 = d * d, e2 = e * e;
  Poly phi = up({
      e2 * e2,
      4 * d * e2 * e,
      2 * e2 * (2 * a2 + 2 * c * e + 3 * d2 + 4 * b),
      4 * e * (2 * a2 * d + 3 * c * d * e + d2 * d + 4 * b * d + e2),
      8 * a2 * c * e + 4 * a2 * d2 + 6 * c2 * e2 + 12 * c * d2 * e + d2 * d2 + 16 * b * c * e + 8 * b * d2 +
          12 * d * e2 + 16 * b * b,
      8 * a2 * c * d + 12 * c2 * d * e + 4 * c * d2 * d + 8 * a2 * e + 16 * b * c * d + 12 * c * e2 +
          12 * d2 * e + 16 * b * e,
      4 * a2 * c2 + 4 * c2 * c * e + 6 * c2 * d2 + 8 * a2 * d + 8 * b * c2 + 24 * c * d * e + 4 * d2 * d +
          16 * b * d + 6 * e2,
      4 * c2 * c * d + 8 * a2 * c + 12 * c2 * e + 12 * c * d2 + 16 * b * c + 12 * d * e,
      c2 * c2 + 12 * c2 * d + 4 * a2 + 12 * c * e + 6 * d2 + 8 * b,
      4 * c2 * c + 12 * c * d + 4 * e,
      6 * c2 + 4 * d,
      4 * c,
      1,
  });
  const Poly den = thm11_denominator(p);
  return RatFunc(phi * b, den * den);
}

RatFunc thm12_t1(const ConstructionParams& p) {
  return RatFunc(Poly::monomial(-4 * p.a * p.b, 3), thm12_denominator(p));
}

RatFunc thm12_v1(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  const Rational a2 = a * a, c2 = c * c, d2 = d * d, e2 = e * e;
  Poly phi = up({
      e2 * e2,
      4 * d * e2 * e,
      2 * e2 * (2 * c * e + 3 * d2),
      4 * e * (3 * c * d * e + d2 * d + e2),
      4 * a2 * e2 + 6 * c2 * e2 + 12 * c * d2 * e + d2 * d2 + 8 * b * e2 + 12 * d * e2,
      8 * a2 * d * e + 12 * c2 * d * e + 4 * c * d2 * d + 16 * b * d * e + 12 * c * e2 + 12 * d2 * e,
      8 * a2 * c * e + 4 * a2 * d2 + 4 * c2 * c * e + 6 * c2 * d2 + 16 * b * c * e + 8 * b * d2 +
          24 * c * d * e + 4 * d2 * d + 6 * e2,
      8 * a2 * c * d + 4 * c2 * c * d + 8 * a2 * e + 16 * b * c * d + 12 * c2 * e + 12 * c * d2 +
          16 * b * e + 12 * d * e,
      4 * a2 * c2 + c2 * c2 + 8 * a2 * d + 8 * b * c2 + 12 * c2 * d + 16 * b * b + 16 * b * d +
          12 * c * e + 6 * d2,
      8 * a2 * c + 4 * c2 * c + 16 * b * c + 12 * c * d + 4 * e,
      4 * a2 + 6 * c2 + 8 * b + 4 * d,
      4 * c,
      1,
  });
  const Poly den = thm12_denominator(p);
  return RatFunc(phi * Poly::monomial(b, 1), den * den);
}

namespace {

Poly thm13_T_numerator(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  const Rational a4 = a.pow(4), d4 = d.pow(4);
  return up({-a4 * b - 2 * a * d.pow(3) * e + b * d4, 2 * d * (a * e - b * d), b});
}

Poly thm13_denominator(const ConstructionParams& p) {
  return up({p.a.pow(4) + p.d.pow(4), 0, -1});
}

}  // namespace

RatFunc thm13_T(const ConstructionParams& p) { return RatFunc(thm13_T_numerator(p), thm13_denominator(p)); }

RatFunc thm13_S(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  Poly num = up({a.pow(4) + d.pow(4), -2 * d * d, 1}) * (d * (a * e - b * d));
  return RatFunc(num, thm13_denominator(p));
}

RatFunc thm13_x(const ConstructionParams& p) { return thm13_T(p); }

RatFunc thm13_y(const ConstructionParams& p) {
  return RatFunc(thm13_T_numerator(p) * p.d, thm13_denominator(p) * p.a);
}

RatFunc thm13_z(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  const Rational a4 = a.pow(4), d3 = d.pow(3), d4 = d.pow(4);
  Poly z1 = up({a4 + d4, -2 * d * d, 1}) * (d * (a * e - b * d));
  z1 *= up({a4 * b - a4 * c + 2 * a * d3 * e - b * d4 - c * d4, -2 * a * d * e + 2 * b * d * d, c - b});
  z1 *= up({a.pow(5) - a4 * b + a * d4 - 2 * a * d3 * e + b * d4, 2 * a * d * e - 2 * b * d * d, b - a});
  const Poly den = thm13_denominator(p);
  Poly z2 = den * den * (a * a);
  z2 *= up({a4 * b + 2 * a * d3 * e - b * d4, -2 * a * d * e + 2 * b * d * d, -b});
  return RatFunc(z1, z2);
}

Rational thm14_T1(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  return -2 * a * e * (a * b + d) / (2 * a * a * e + d * d);
}

Rational thm14_S1(const ConstructionParams& p) {
  const auto& [kind, sign, a, b, c, d, e] = p;
  const Rational den = 2 * a * a * e + d * d;
  return a * e *
         (4 * a.pow(4) * e * e - 4 * a.pow(3) * b * d * e + 2 * a * a * b * b * d * d + 2 * a * b * d.pow(3) +
          d.pow(4)) /
         (den * den);
}

}  // namespace closed_form

bool CrossCheckReport::all_passed() const {
  for (const auto& f : formulas) {
    if (f.failed > 0) return false;
  }
  return true;
}

namespace {

class Checker {
 public:
  Checker(int trials, std::uint64_t seed) : trials_(trials), rng_(seed) {}

  CrossCheckReport run() {
    for (int i = 0; i < trials_; ++i) {
      check_tT(Kind::Thm11);
      check_tT(Kind::Thm12);
      check_thm13();
      check_thm14();
    }
    return std::move(report_);
  }

 private:
  int nonzero() {
    std::uniform_int_distribution<int> dist(-10, 9);
    int v = dist(rng_);
    return v >= 0 ? v + 1 : v;
  }

  ConstructionParams draw(Kind kind) {
    ConstructionParams p;
    p.kind = kind;
    p.sign = Sign::Plus;
    p.a = nonzero();
    p.b = nonzero();
    p.c = nonzero();
    p.d = nonzero();
    p.e = nonzero();
    return p;
  }

  static std::string describe(const ConstructionParams& p) {
    return "(a,b,c,d,e)=(" + p.a.str() + "," + p.b.str() + "," + p.c.str() + "," + p.d.str() + "," +
           p.e.str() + ")";
  }

  FormulaTally& tally(const std::string& name) {
    for (auto& f : report_.formulas) {
      if (f.name == name) return f;
    }
    report_.formulas.push_back(FormulaTally{name, 0, 0, {}});
    return report_.formulas.back();
  }

  // Runs one comparison; exceptions count as failures.
  void record(const std::string& name, const std::string& where, const std::function<bool()>& check) {
    FormulaTally& t = tally(name);
    bool ok = false;
    std::string why;
    try {
      ok = check();
    } catch (const std::exception& err) {
      why = std::string(" (") + err.what() + ")";
    }
    if (ok) {
      ++t.passed;
    } else {
      ++t.failed;
      if (t.counterexample.empty()) t.counterexample = where + why;
    }
  }

  void check_tT(Kind kind) {
    const ConstructionParams p = draw(kind);
    const std::string label = kind == Kind::Thm11 ? "thm11" : "thm12";
    const std::string where = describe(p) + " T symbolic";
    auto build = [&](const FieldChoice& field) {
      return kind == Kind::Thm11 ? build_quartic_thm11(p, field) : build_quartic_thm12(p, field);
    };
    std::optional<FermatStep> symbolic;
    try {
      const QuarticConstruction qc = build(FieldChoice::symbolic());
      symbolic = fermat_step(qc.curve, qc.base, qc.branch);
    } catch (const std::exception&) {
    }
    const RatFunc t1 = kind == Kind::Thm11 ? closed_form::thm11_t1(p) : closed_form::thm12_t1(p);
    const RatFunc v1 = kind == Kind::Thm11 ? closed_form::thm11_v1(p) : closed_form::thm12_v1(p);
    record(label + ".t1", where, [&] { return symbolic && symbolic->point.t().ratfunc() == t1; });
    record(label + ".v1", where, [&] { return symbolic && symbolic->point.v().ratfunc() == v1; });

    for (int j = 0; j < 5; ++j) {
      Rational t0 = nonzero();
      while (t1.den()(t0).is_zero() || v1.den()(t0).is_zero()) t0 = nonzero();
      record(label + ".specialize", describe(p) + " T=" + t0.str(), [&] {
        const QuarticConstruction qc = build(FieldChoice::at(t0));
        const FermatStep step = fermat_step(qc.curve, qc.base, qc.branch);
        return step.point.t().rational() == specialize(t1, t0) &&
               step.point.v().rational() == specialize(v1, t0);
      });
    }
  }

  void check_thm13() {
    ConstructionParams p = draw(Kind::Thm13);
    while (p.a * p.e == p.b * p.d) p = draw(Kind::Thm13);
    const std::string where = describe(p) + " r symbolic";
    const ConicConstruction cc = build_conic_thm13(p);

    // The same conic over Q(r), swept by the indeterminate slope r.
    auto lift_qt = [](const FieldValue& v) { return FieldValue(RatFunc(v.rational())); };
    const Conic conic_qt(lift_qt(cc.conic.A()), lift_qt(cc.conic.B()), lift_qt(cc.conic.C()));
    const ConicConstruction symbolic{p, conic_qt, ConicPoint(conic_qt, lift_qt(cc.base.T()), lift_qt(cc.base.S()))};
    std::optional<ConicPoint> point;
    std::optional<Solution> sol;
    try {
      point = conic_parametrize(symbolic.conic, symbolic.base, FieldValue(RatFunc::variable()));
      sol = lift_to_solution(symbolic, *point);
    } catch (const std::exception&) {
    }
    record("thm13.T", where, [&] { return point && point->T().ratfunc() == closed_form::thm13_T(p); });
    record("thm13.S", where, [&] { return point && point->S().ratfunc() == closed_form::thm13_S(p); });
    record("thm13.x", where, [&] { return sol && sol->x.ratfunc() == closed_form::thm13_x(p); });
    record("thm13.y", where, [&] { return sol && sol->y.ratfunc() == closed_form::thm13_y(p); });
    record("thm13.z", where, [&] { return sol && sol->z.ratfunc() == closed_form::thm13_z(p); });

    const RatFunc x = closed_form::thm13_x(p);
    const RatFunc z = closed_form::thm13_z(p);
    for (int j = 0; j < 5; ++j) {
      Rational r0 = nonzero();
      auto unusable = [&](const Rational& r) {
        if (x.den()(r).is_zero() || z.den()(r).is_zero()) return true;
        const Rational xr = specialize(x, r);
        return xr.is_zero() || xr == -p.a || xr == -p.c;
      };
      int guard = 0;
      while (unusable(r0) && ++guard < 100) r0 = nonzero();
      record("thm13.specialize", describe(p) + " r=" + r0.str(), [&] {
        const ConicPoint pt = conic_parametrize(cc.conic, cc.base, FieldValue(r0));
        const Solution s = lift_to_solution(cc, pt);
        return s.x.rational() == specialize(x, r0) && s.z.rational() == specialize(z, r0);
      });
    }
  }

  void check_thm14() {
    ConstructionParams p = draw(Kind::Thm14);
    auto degenerate = [](const ConstructionParams& q) {
      return (2 * q.a * q.a * q.e + q.d * q.d).is_zero() || (q.a * q.b + q.d).is_zero();
    };
    while (degenerate(p)) p = draw(Kind::Thm14);
    const std::string where = describe(p);
    std::optional<FermatStep> step;
    try {
      const QuarticConstruction qc = build_quartic_thm14(p);
      step = fermat_step(qc.curve, qc.base, qc.branch);
    } catch (const std::exception&) {
    }
    record("thm14.T1", where, [&] { return step && step->point.t().rational() == closed_form::thm14_T1(p); });
    record("thm14.S1", where, [&] { return step && step->point.v().rational() == closed_form::thm14_S1(p); });
  }

  int trials_;
  std::mt19937_64 rng_;
  CrossCheckReport report_;
};

}  // namespace

CrossCheckReport run_cross_checks(int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(Errc::InvalidParams, "trials must be at least 1");
  return Checker(trials, seed).run();
}

}  // namespace ldio
