#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldio/constructions.hpp"
#include "ldio/search.hpp"

namespace ldio {

/// Input grammar for Laurent polynomials in one declared variable:
///
///   expr  := [sign] term { sign term }
///   term  := coef [ "*" pow ] | coef "/" pow | pow
///   pow   := var [ "^" int ]
///   coef  := int [ "/" int ]
///
/// "2/x" is 2*x^-1 and "1/2/x" is (1/2)*x^-1. Whitespace is ignored and
/// repeated exponents accumulate.
///
/// Throws ParseError (with byte offset and expected tokens) on malformed
/// input and Errc::WrongVariable for a letter other than `var`.
LaurentPoly parse_laurent(std::string_view text, char var);

/// The single letter used in text, or `fallback` when there is none.
/// Throws Errc::WrongVariable when two different letters appear.
char detect_variable(std::string_view text, char fallback);

/// Descending exponents, e.g. "x+4+5/x+2/x^2"; the zero polynomial is "0".
std::string print_laurent(const LaurentPoly& f);

/// Inverse of FieldValue::str: "p/q" or "(num)/(den)" in the variable var.
FieldValue parse_field_value(std::string_view text, char var = 'T');

inline constexpr int kFormatVersion = 1;

struct GenerateReport {
  ConstructionParams params;
  FieldChoice field = FieldChoice::at(Rational(1));
  std::vector<Solution> solutions;
};

struct SearchReport {
  SearchConfig config;
  std::vector<SearchHit> hits;
};

struct VerifyEmission {
  LaurentPoly f;
  LaurentPoly g;
  Sign sign = Sign::Plus;
  FieldValue x, y, z;
  VerifyReport report;
};

struct ParametrizeReport {
  ConstructionParams params;
  ConicFamily family;
};

/// Machine-readable output. Field order is fixed; every exact value is a
/// canonical string and each document carries "format_version".
std::string emit_json(const GenerateReport& report);
std::string emit_json(const SearchReport& report);
std::string emit_json(const VerifyEmission& emission);
/// Rational functions are printed in the slope variable r.
std::string emit_json(const ParametrizeReport& report);

/// One line per solution/hit, for humans.
std::string emit_text(const GenerateReport& report);
std::string emit_text(const SearchReport& report);
std::string emit_text(const VerifyEmission& emission);
std::string emit_text(const ParametrizeReport& report);

}  // namespace ldio
