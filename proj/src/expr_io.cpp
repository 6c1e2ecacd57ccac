#include "ldio/expr_io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "ldio/error.hpp"

namespace ldio {

namespace {

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }
bool is_letter(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }

class LaurentParser {
 public:
  LaurentParser(std::string_view text, char var) : text_(text), var_(var), out_({}, var) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail({"term"}, "empty expression");
    Rational sign(1);
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? Rational(-1) : Rational(1);
    term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail({"+", "-", "end of input"}, "unexpected character");
      sign = take() == '-' ? Rational(-1) : Rational(1);
      term(sign);
    }
    return out_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // Next non-space character without consuming anything, or '\0'.
  char lookahead() const {
    std::size_t p = pos_;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    std::string message = what + " at offset " + std::to_string(pos_) + "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) message += " or ";
      message += expected[i];
    }
    throw ParseError(pos_, std::move(expected), message);
  }

  Integer integer() {
    skip_ws();
    if (at_end() || !is_digit(peek())) fail({"integer"}, "missing integer");
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 1 && digits.front() == '0') {
      pos_ = start;
      fail({"integer without leading zeros"}, "leading zero");
    }
    return Integer(digits, 10);
  }

  // var [ "^" int ], returns the exponent.
  int power() {
    skip_ws();
    if (at_end() || !is_letter(peek())) fail({std::string(1, var_)}, "missing variable");
    if (peek() != var_) {
      throw Error(Errc::WrongVariable, "variable '" + std::string(1, peek()) + "' at offset " +
                                           std::to_string(pos_) + "; expected '" + std::string(1, var_) + "'");
    }
    ++pos_;
    if (lookahead() != '^') return 1;
    skip_ws();
    ++pos_;
    const std::size_t at = pos_;
    Integer k = integer();
    if (!k.fits_sint_p() || k > 100000) {
      pos_ = at;
      fail({"small exponent"}, "exponent out of range");
    }
    return static_cast<int>(k.get_si());
  }

  void term(const Rational& sign) {
    skip_ws();
    if (at_end()) fail({"integer", std::string(1, var_)}, "missing term");
    if (is_letter(peek())) {
      out_.add_term(power(), sign);
      return;
    }
    if (!is_digit(peek())) fail({"integer", std::string(1, var_)}, "unexpected character");

    Integer num = integer();
    Integer den = 1;
    if (lookahead() == '/') {
      const std::size_t slash = pos_;
      skip_ws();
      ++pos_;
      if (is_digit(lookahead())) {
        den = integer();
        if (den == 0) {
          pos_ = slash;
          fail({"nonzero denominator"}, "division by zero");
        }
      } else {
        pos_ = slash;  // coef "/" pow, handled below
      }
    }
    const Rational coef = sign * Rational(num, den);
    const char next = lookahead();
    if (next == '*') {
      skip_ws();
      ++pos_;
      out_.add_term(power(), coef);
    } else if (next == '/') {
      skip_ws();
      ++pos_;
      out_.add_term(-power(), coef);
    } else {
      out_.add_term(0, coef);
    }
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
  LaurentPoly out_;
};

Poly to_poly(const LaurentPoly& f) {
  if (f.is_zero()) return Poly();
  if (f.min_exp() < 0) throw Error(Errc::ParseError, "expected a polynomial, found negative exponents");
  return laurent_split(f).numerator;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text, char var) { return LaurentParser(text, var).parse(); }

char detect_variable(std::string_view text, char fallback) {
  char found = '\0';
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_letter(text[i])) continue;
    if (found == '\0') {
      found = text[i];
    } else if (text[i] != found) {
      throw Error(Errc::WrongVariable, "expression mixes variables '" + std::string(1, found) + "' and '" +
                                           std::string(1, text[i]) + "' (offset " + std::to_string(i) + ")");
    }
  }
  return found == '\0' ? fallback : found;
}

std::string print_laurent(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string term;
    if (k == 0) {
      term = c.str();
    } else {
      std::string power(1, f.variable());
      const int mag = k < 0 ? -k : k;
      if (mag > 1) power += "^" + std::to_string(mag);
      if (k < 0) {
        term = c.str() + "/" + power;
      } else if (c == Rational(1)) {
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

FieldValue parse_field_value(std::string_view text, char var) {
  if (text.empty() || text.front() != '(') return Rational::parse(text);
  const auto split = text.find(")/(");
  if (split == std::string_view::npos || text.back() != ')') {
    throw ParseError(0, {"(num)/(den)"}, "malformed rational function '" + std::string(text) + "'");
  }
  const Poly num = to_poly(parse_laurent(text.substr(1, split - 1), var));
  const Poly den = to_poly(parse_laurent(text.substr(split + 3, text.size() - split - 4), var));
  return RatFunc(num, den);
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_json(const ConstructionParams& p) {
  ordered_json j;
  j["a"] = p.a.str();
  j["b"] = p.b.str();
  j["c"] = p.c.str();
  j["d"] = p.d.str();
  j["e"] = p.e.str();
  return j;
}

bool uses_T(const GenerateReport& report) {
  return report.params.kind == Kind::Thm11 || report.params.kind == Kind::Thm12;
}

bool is_symbolic(const GenerateReport& report) { return uses_T(report) && report.field.is_symbolic(); }

}  // namespace

std::string emit_json(const GenerateReport& report) {
  ordered_json doc;
  doc["kind"] = kind_name(report.params.kind);
  doc["sign"] = sign_name(report.params.sign);
  doc["params"] = params_json(report.params);
  doc["field"] = is_symbolic(report) ? "Q(T)" : "Q";
  if (uses_T(report) && !report.field.is_symbolic()) doc["T"] = report.field.t0()->str();
  ordered_json sols = ordered_json::array();
  for (const auto& s : report.solutions) {
    ordered_json js;
    js["x"] = s.x.str();
    js["y"] = s.y.str();
    js["z"] = s.z.str();
    js["nontrivial"] = s.nontrivial;
    js["verified"] = true;
    sols.push_back(std::move(js));
  }
  doc["solutions"] = std::move(sols);
  doc["format_version"] = kFormatVersion;
  return doc.dump();
}

std::string emit_json(const SearchReport& report) {
  const SearchConfig& cfg = report.config;
  ordered_json doc;
  doc["kind"] = "search";
  doc["sign"] = sign_name(cfg.sign);
  doc["f"] = print_laurent(cfg.f);
  doc["g"] = print_laurent(cfg.g);
  doc["bound"] = cfg.bound;
  doc["integer_z"] = cfg.require_integer_z;
  ordered_json sols = ordered_json::array();
  for (const auto& h : report.hits) {
    ordered_json js;
    js["x"] = std::to_string(h.x);
    js["y"] = std::to_string(h.y);
    js["z"] = h.z.str();
    js["integral_z"] = h.integral_z;
    js["nontrivial"] = h.nontrivial;
    js["verified"] = true;
    sols.push_back(std::move(js));
  }
  doc["solutions"] = std::move(sols);
  doc["format_version"] = kFormatVersion;
  return doc.dump();
}

std::string emit_json(const VerifyEmission& e) {
  ordered_json doc;
  doc["kind"] = "verify";
  doc["sign"] = sign_name(e.sign);
  doc["f"] = print_laurent(e.f);
  doc["g"] = print_laurent(e.g);
  doc["x"] = e.x.str();
  doc["y"] = e.y.str();
  doc["z"] = e.z.str();
  doc["equation_holds"] = e.report.equation_holds;
  doc["nontrivial"] = e.report.nontrivial;
  doc["format_version"] = kFormatVersion;
  return doc.dump();
}

std::string emit_json(const ParametrizeReport& report) {
  const ConicFamily& fam = report.family;
  const Conic& conic = fam.construction.conic;
  ordered_json doc;
  doc["kind"] = kind_name(report.params.kind);
  doc["sign"] = sign_name(report.params.sign);
  doc["params"] = params_json(report.params);
  doc["field"] = "Q(r)";
  doc["conic"] = {{"A", conic.A().str('r')}, {"B", conic.B().str('r')}, {"C", conic.C().str('r')}};
  doc["base"] = {{"T", fam.construction.base.T().str('r')}, {"S", fam.construction.base.S().str('r')}};
  doc["T"] = fam.point.T().str('r');
  doc["S"] = fam.point.S().str('r');
  doc["x"] = fam.solution.x.str('r');
  doc["y"] = fam.solution.y.str('r');
  doc["z"] = fam.solution.z.str('r');
  doc["nontrivial"] = fam.solution.nontrivial;
  doc["format_version"] = kFormatVersion;
  return doc.dump();
}

std::string emit_text(const GenerateReport& report) {
  std::ostringstream os;
  os << kind_name(report.params.kind) << " " << sign_name(report.params.sign) << " a=" << report.params.a
     << " b=" << report.params.b << " c=" << report.params.c << " d=" << report.params.d
     << " e=" << report.params.e << " field=" << (is_symbolic(report) ? "Q(T)" : "Q");
  if (uses_T(report) && !report.field.is_symbolic()) os << " T=" << *report.field.t0();
  os << "\n";
  for (const auto& s : report.solutions) {
    os << "x=" << s.x.str() << " y=" << s.y.str() << " z=" << s.z.str()
       << " nontrivial=" << (s.nontrivial ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string emit_text(const SearchReport& report) {
  std::ostringstream os;
  for (const auto& h : report.hits) {
    os << "x=" << h.x << " y=" << h.y << " z=" << h.z << (h.integral_z ? "" : " (rational z)")
       << (h.nontrivial ? "" : " trivial") << "\n";
  }
  os << report.hits.size() << " hit(s)\n";
  return os.str();
}

std::string emit_text(const VerifyEmission& e) {
  std::ostringstream os;
  os << "equation_holds=" << (e.report.equation_holds ? "true" : "false")
     << " nontrivial=" << (e.report.nontrivial ? "true" : "false") << "\n";
  return os.str();
}

std::string emit_text(const ParametrizeReport& report) {
  const ConicFamily& fam = report.family;
  const Conic& conic = fam.construction.conic;
  std::ostringstream os;
  os << "S^2 = " << conic.A().str('r') << "*T^2 + " << conic.B().str('r') << "*T + " << conic.C().str('r')
     << "\n";
  os << "base T=" << fam.construction.base.T().str('r') << " S=" << fam.construction.base.S().str('r') << "\n";
  os << "T(r)=" << fam.point.T().str('r') << "\n";
  os << "S(r)=" << fam.point.S().str('r') << "\n";
  os << "x(r)=" << fam.solution.x.str('r') << "\n";
  os << "y(r)=" << fam.solution.y.str('r') << "\n";
  os << "z(r)=" << fam.solution.z.str('r') << "\n";
  return os.str();
}

}  // namespace ldio
