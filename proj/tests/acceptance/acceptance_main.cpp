// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "ldio/closed_forms.hpp"
#include "ldio/error.hpp"
#include "ldio/expr_io.hpp"
#include "random_values.hpp"

using namespace ldio;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collects failed checks for one criterion; only the first few are printed.
class Verdict {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  std::string note;

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
};

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidParams;  // sentinel: nothing thrown
}

bool threw(const std::function<void()>& f, Errc code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

FieldValue q(const char* text) { return FieldValue(Rational::parse(text)); }

int cli_exit(std::vector<std::string> args, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

// 1. thm14 first ascent point at (a, b, d, e) = (1, 1, 1, 1).
void criterion_thm14_point(Verdict& v) {
  const ConstructionParams p{Kind::Thm14, Sign::Plus, 1, 1, 2, 1, 1};
  const QuarticConstruction warm = build_quartic_thm14(p);
  fermat_step(warm.curve, warm.base, warm.branch);

  const auto start = Clock::now();
  const QuarticConstruction qc = build_quartic_thm14(p);
  const FermatStep step = fermat_step(qc.curve, qc.base, qc.branch);
  const double elapsed = ms_since(start);

  v.check(qc.base.t() == q("0") && qc.base.v() == q("1"), "base point is (0, ae) = (0, 1)");
  v.check(step.point.t() == q("-4/3"), "T1 = -4/3, got " + step.point.t().str());
  v.check(step.point.v() == q("5/9"), "S1 = 5/9, got " + step.point.v().str());
  v.check(step.point.t() == FieldValue(closed_form::thm14_T1(p)), "T1 equals -2ae(ab+d)/(2a^2e+d^2)");
  v.check(step.point.v() == FieldValue(closed_form::thm14_S1(p)), "S1 equals the closed form");
  v.check(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " ms >= 1 ms");
  v.note = "(-4/3, 5/9) in " + std::to_string(elapsed) + " ms";
}

// 2. thm11 worked chain with all parameters 1 and T = 1.
void criterion_thm11_chain(Verdict& v) {
  const ConstructionParams p;
  const auto start = Clock::now();
  const QuarticConstruction qc = build_quartic_thm11(p, FieldChoice::at(1));
  const FermatStep step = fermat_step(qc.curve, qc.base, qc.branch);
  const Solution sol = lift_to_solution(qc, step.point);
  const double elapsed = ms_since(start);

  const std::array<FieldValue, 5> expected{q("1"), q("2"), q("19"), q("2"), q("1")};
  v.check(qc.curve.coefficients() == expected, "curve is t^4+2t^3+19t^2+2t+1");
  v.check(step.point.t() == q("-1/5") && step.point.v() == q("29/25"), "first point (-1/5, 29/25)");
  v.check(step.point.t().rational() == specialize(closed_form::thm11_t1(p), 1), "t1 matches closed form");
  v.check(step.point.v().rational() == specialize(closed_form::thm11_v1(p), 1), "v1 matches phi1/psi1");
  v.check(step.point.v() == q("464/400"), "v1 = 464/400");
  v.check(sol.x == q("-1/5") && sol.y == q("1") && (sol.z == q("29/5") || sol.z == q("-29/5")),
          "lifted solution (-1/5, 1, +-29/5)");
  const LaurentPoly f = family_f(p), g = family_g(p);
  const Rational fx = f(Rational::parse("-1/5")), gy = g(Rational(1));
  v.check(fx * fx == Rational::parse("441/25") && gy * gy == Rational::parse("400/25"), "441/25 and 400/25");
  v.check(fx * fx + gy * gy == Rational::parse("841/25"), "sum 841/25");
  const VerifyReport r = verify_solution(f, g, Sign::Plus, sol.x, sol.y, sol.z);
  v.check(r.equation_holds && r.nontrivial, "solution verifies and is nontrivial");
  v.check(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " ms >= 10 ms");
  v.note = "z = " + sol.z.str() + " in " + std::to_string(elapsed) + " ms";
}

// 3. Symbolic closed-form cross-check, 25 seeded draws.
void criterion_cross_check(Verdict& v) {
  const auto start = Clock::now();
  const CrossCheckReport report = run_cross_checks(25, 42);
  const double elapsed = ms_since(start);
  int comparisons = 0;
  for (const auto& f : report.formulas) {
    comparisons += f.passed + f.failed;
    v.check(f.failed == 0, f.name + " failed " + std::to_string(f.failed) + "x, first at " + f.counterexample);
  }
  for (const char* name : {"thm11.t1", "thm11.v1", "thm12.t1", "thm12.v1", "thm13.T", "thm13.S", "thm13.x",
                           "thm13.y", "thm13.z", "thm14.T1", "thm14.S1"}) {
    const bool present = std::any_of(report.formulas.begin(), report.formulas.end(),
                                     [&](const FormulaTally& f) { return f.name == name && f.passed == 25; });
    v.check(present, std::string(name) + " not checked 25 times");
  }
  v.check(elapsed < 60000.0, "runtime " + std::to_string(elapsed) + " ms >= 60 s");
  v.note = std::to_string(report.formulas.size()) + " formulas, " + std::to_string(comparisons) +
           " comparisons in " + std::to_string(elapsed) + " ms";
}

// ZeroV: the ascent landed on a point with v = 0, where the step is undefined.
bool documented_degeneracy(Errc c) {
  return c == Errc::Degenerate || c == Errc::ZeroV || c == Errc::DegenerateConic || c == Errc::DenominatorZero ||
         c == Errc::EmptyOutput;
}

// 4. Solution validity sweep: 200 draws x 4 kinds x 2 signs, 3 steps or 3 slopes.
void criterion_validity_sweep(Verdict& v) {
  testing::Draw draw(2024);
  const auto start = Clock::now();
  int runs = 0, produced = 0, solutions = 0;
  std::map<std::string, int> skipped;

  auto run_one = [&](const ConstructionParams& p, const GenerateOptions& opt) {
    ++runs;
    std::vector<Solution> sols;
    try {
      sols = generate_solutions(p, opt);
    } catch (const Error& e) {
      v.check(documented_degeneracy(e.code()), std::string(kind_name(p.kind)) + ": " + e.what());
      ++skipped[std::string(errc_name(e.code()))];
      return;
    }
    ++produced;
    const LaurentPoly f = family_f(p), g = family_g(p);
    for (std::size_t i = 0; i < sols.size(); ++i) {
      ++solutions;
      const VerifyReport r = verify_solution(f, g, p.sign, sols[i].x, sols[i].y, sols[i].z);
      v.check(r.equation_holds, "equation fails for " + std::string(kind_name(p.kind)));
      v.check(r.nontrivial, "trivial solution for " + std::string(kind_name(p.kind)));
      for (std::size_t j = 0; j < i; ++j) v.check(!(sols[i] == sols[j]), "repeated solution");
    }
  };

  for (int i = 0; i < 200; ++i) {
    for (Kind kind : {Kind::Thm11, Kind::Thm12, Kind::Thm13, Kind::Thm14}) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        ConstructionParams p{kind, sign, draw.nonzero(-10, 10), draw.nonzero(-10, 10), draw.nonzero(-10, 10),
                             draw.nonzero(-10, 10), draw.nonzero(-10, 10)};
        GenerateOptions opt;
        opt.steps = 3;
        opt.field = FieldChoice::at(draw.nonzero_rational(10, 5));
        for (int k = 0; k < 3; ++k) opt.r_values.push_back(draw.rational(30, 7));
        run_one(p, opt);
      }
    }
  }
  // Over Q(T) as well, on a smaller sweep.
  for (int i = 0; i < 10; ++i) {
    for (Kind kind : {Kind::Thm11, Kind::Thm12}) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        ConstructionParams p{kind, sign, draw.nonzero(-10, 10), draw.nonzero(-10, 10), draw.nonzero(-10, 10),
                             draw.nonzero(-10, 10), draw.nonzero(-10, 10)};
        GenerateOptions opt;
        opt.steps = 3;
        opt.field = FieldChoice::symbolic();
        run_one(p, opt);
      }
    }
  }
  const double elapsed = ms_since(start);
  v.check(produced * 10 >= runs * 9, "too many degenerate runs: " + std::to_string(runs - produced));
  v.check(elapsed < 300000.0, "runtime " + std::to_string(elapsed) + " ms >= 5 min");
  std::string skips;
  for (const auto& [name, count] : skipped) skips += " " + name + "=" + std::to_string(count);
  v.note = std::to_string(runs) + " runs, " + std::to_string(solutions) + " solutions verified, skipped:" +
           (skips.empty() ? " none" : skips) + ", " + std::to_string(elapsed) + " ms";
}

// 5. Degeneracies are reported, and surface as exit code 3.
void criterion_degeneracy(Verdict& v) {
  const QuarticCurve c({FieldValue(1), FieldValue(0), FieldValue(0), FieldValue(0), FieldValue(1)});
  const CurvePoint base(c, q("0"), q("1"));
  v.check(threw([&] { fermat_step(c, base, Branch::Negative); }, Errc::Degenerate), "t^4+1 negative branch");
  v.check(threw([&] { fermat_step(c, base, Branch::Positive); }, Errc::Degenerate), "t^4+1 positive branch");
  v.check(threw([&] { iterate_fermat(c, base, 1); }, Errc::Degenerate), "t^4+1 iteration");

  const ConstructionParams collapsed{Kind::Thm13, Sign::Plus, 2, 3, 1, 4, 6};  // ae = bd = 12
  v.check(code_of([&] { build_conic_thm13(collapsed); }) == Errc::DegenerateConic, "thm13 with ae = bd");
  const ConstructionParams flat{Kind::Thm13, Sign::Minus, 1, 1, 1, -1, 2};  // a^4 = d^4
  v.check(code_of([&] { build_conic_thm13(flat); }) == Errc::DegenerateConic, "thm13 minus with a^4 = d^4");

  std::string err;
  v.check(cli_exit({"generate", "--kind", "thm13", "--params", "a=2,b=3,c=1,d=4,e=6", "--r", "1"}, &err) == 3,
          "CLI exit 3 for collapsed conic");
  v.check(err.find("collapsed") != std::string::npos, "collapsed-conic message");
  v.check(cli_exit({"generate", "--kind", "thm13", "--sign", "minus", "--params", "a=1,b=1,c=1,d=1,e=2"}, &err) ==
              3,
          "CLI exit 3 for A = 0");
  v.check(err.find("degenerate conic: A=0") != std::string::npos, "A=0 message");
  // The curve t^4 + 1 is not one of the families; the family-level analogue of
  // a stalled ascent is the thm14 minus model at a=b=d=e=1.
  v.check(cli_exit({"generate", "--kind", "thm14", "--sign", "minus", "--params", "a=1,b=1,c=2,d=1,e=1"}) == 3,
          "CLI exit 3 for a stalled ascent");
  v.note = "Degenerate / DegenerateConic raised; CLI exit 3 in all three cases";
}

// 6. Field layer: square detection, canonical reduction, specialization.
void criterion_field(Verdict& v) {
  testing::Draw draw(6);
  const Poly T = Poly::variable();
  int squares = 0, non_squares = 0;
  while (squares < 200) {
    const RatFunc x = draw.ratfunc(6, 9);
    if (x.is_zero()) continue;
    const RatFunc sq = x * x;
    const auto root = field_sqrt(FieldValue(sq));
    v.check(root.has_value(), "square not detected: " + to_string(sq));
    if (root) v.check(*root * *root == FieldValue(sq), "root does not square back");
    ++squares;

    const long k = draw.integer(-9, 9);
    RatFunc twist = draw.coin() ? RatFunc(T - k) : RatFunc(T * T + (k * k + 1));
    if (draw.coin()) twist *= Rational(draw.coin() ? 2 : -1);
    const RatFunc ns = sq * twist;
    v.check(!field_sqrt(FieldValue(ns)).has_value(), "non-square accepted: " + to_string(ns));
    ++non_squares;
  }

  for (int i = 0; i < 200; ++i) {
    const RatFunc x = draw.ratfunc(), y = draw.ratfunc(), z = draw.ratfunc();
    const RatFunc lhs = (x + y) * z, rhs = x * z + y * z;
    v.check(lhs.num() == rhs.num() && lhs.den() == rhs.den(), "two routes, two representations");
    v.check(lhs.den().leading() == Rational(1), "denominator not monic");
    if (!lhs.is_zero()) v.check(poly_gcd(lhs.num(), lhs.den()) == Poly(1), "not reduced");
  }

  int morphism = 0;
  while (morphism < 100) {
    const RatFunc x = draw.ratfunc(4), y = draw.ratfunc(4);
    const Rational t0 = draw.rational(9, 5);
    try {
      const Rational sx = specialize(x, t0), sy = specialize(y, t0);
      v.check(specialize(x * y, t0) == sx * sy, "specialize(xy) != specialize(x) specialize(y)");
      v.check(specialize(x + y, t0) == sx + sy, "specialize(x+y) != sum");
      ++morphism;
    } catch (const Error& e) {
      v.check(e.code() == Errc::PoleAtPoint, e.what());
    }
  }
  v.note = std::to_string(squares) + " squares, " + std::to_string(non_squares) + " non-squares, " +
           std::to_string(morphism) + " specialization pairs";
}

std::vector<SearchHit> naive_search(const SearchConfig& c) {
  std::vector<SearchHit> out;
  for (long x = -c.bound; x <= c.bound; ++x) {
    for (long y = -c.bound; y <= c.bound; ++y) {
      if (x == 0 || y == 0) continue;
      const Rational fx = c.f(Rational(x)), gy = c.g(Rational(y));
      const Rational w = c.sign == Sign::Plus ? fx * fx + gy * gy : fx * fx - gy * gy;
      if (w < Rational()) continue;
      const auto z = rat_sqrt_exact(w);
      if (!z || (c.require_integer_z && !z->is_integer())) continue;
      const bool nontrivial = !(fx * gy).is_zero() && fx * fx != gy * gy;
      if (c.require_nontrivial && !nontrivial) continue;
      out.push_back(SearchHit{x, y, *z, z->is_integer(), nontrivial});
    }
  }
  return out;
}

// 7. Search equals a naive double loop; planted hit; shard unions.
void criterion_search(Verdict& v) {
  testing::Draw draw(7);
  int total_hits = 0;
  for (int i = 0; i < 20; ++i) {
    SearchConfig c;
    c.f = LaurentPoly({{1, 1}, {0, draw.integer(-6, 6)}, {-1, draw.nonzero(-6, 6)}});
    c.g = LaurentPoly({{static_cast<int>(draw.integer(1, 2)), 1}, {0, draw.integer(-6, 6)}, {-1, draw.integer(-6, 6)}},
                      'y');
    c.sign = draw.coin() ? Sign::Plus : Sign::Minus;
    c.bound = draw.integer(1, 20);
    c.require_integer_z = draw.coin();
    const auto hits = search_integer_solutions(c);
    total_hits += static_cast<int>(hits.size());
    v.check(hits == naive_search(c), "config " + std::to_string(i) + " differs from the naive loop");
  }

  SearchConfig planted;
  planted.f = LaurentPoly({{1, 1}, {0, 2}, {-1, 1}});
  planted.g = LaurentPoly({{1, 1}, {0, 1}, {-1, 1}}, 'y');
  planted.bound = 1;
  const auto hits = search_integer_solutions(planted);
  v.check(hits.size() == 1 && hits[0].x == 1 && hits[0].y == 1 && hits[0].z == Rational(5), "planted (1, 1, 5)");

  planted.bound = 15;
  planted.require_integer_z = false;
  const auto full = search_integer_solutions(planted);
  for (int shards = 1; shards <= 8; ++shards) {
    std::vector<SearchHit> merged;
    for (int idx = 0; idx < shards; ++idx) {
      const auto part = search_sharded(planted, shards, idx);
      merged.insert(merged.end(), part.begin(), part.end());
    }
    std::sort(merged.begin(), merged.end(),
              [](const SearchHit& a, const SearchHit& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });
    v.check(merged == full, "shard union differs for " + std::to_string(shards) + " shards");
  }
  v.note = "20 configs (" + std::to_string(total_hits) + " hits), planted hit found, shards 1..8 on " +
           std::to_string(full.size()) + " hits";
}

// 8. Parser round trip and the featured shapes.
void criterion_parser(Verdict& v) {
  testing::Draw draw(8);
  for (int i = 0; i < 1000; ++i) {
    const char var = "xy"[draw.integer(0, 1)];
    const LaurentPoly f = draw.laurent(-6, 6, 99, var);
    const std::string text = print_laurent(f);
    try {
      v.check(parse_laurent(text, var) == f, "round trip changed " + text);
    } catch (const Error& e) {
      v.check(false, "could not reparse " + text + ": " + e.what());
    }
  }
  const std::vector<std::pair<std::string, LaurentPoly::Terms>> shapes{
      {"x+1+1/x", {{1, 1}, {0, 1}, {-1, 1}}},
      {"y^2+y+1+1/y", {{2, 1}, {1, 1}, {0, 1}, {-1, 1}}},
      {"y+1+1/y+1/y^2", {{1, 1}, {0, 1}, {-1, 1}, {-2, 1}}},
      {"x^2+4*x+5+2/x", {{2, 1}, {1, 4}, {0, 5}, {-1, 2}}},
      {"y+4+5/y+2/y^2", {{1, 1}, {0, 4}, {-1, 5}, {-2, 2}}},
      {"x+2+1/x", {{1, 1}, {0, 2}, {-1, 1}}},
  };
  for (const auto& [text, terms] : shapes) {
    v.check(parse_laurent(text, text[0]).terms() == terms, "shape " + text);
  }
  v.note = "1000 random polynomials, " + std::to_string(shapes.size()) + " featured shapes";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*run)(Verdict&);
  };
  const Criterion criteria[] = {
      {1, "thm14 first ascent point", criterion_thm14_point},
      {2, "thm11 worked chain", criterion_thm11_chain},
      {3, "symbolic closed-form cross-check", criterion_cross_check},
      {4, "solution validity sweep", criterion_validity_sweep},
      {5, "degeneracy handling", criterion_degeneracy},
      {6, "field-layer properties", criterion_field},
      {7, "search oracle equivalence", criterion_search},
      {8, "parser round trip", criterion_parser},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.check(false, std::string("uncaught exception: ") + e.what());
    }
    std::cout << (v.passed() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << v.note
              << "]\n";
    for (const auto& why : v.failures()) std::cout << "        " << why << "\n";
    if (v.failed() > static_cast<int>(v.failures().size())) {
      std::cout << "        ... " << v.failed() - v.failures().size() << " more\n";
    }
    if (!v.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all 8 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
