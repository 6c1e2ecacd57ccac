#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldio/constructions.hpp"

namespace ldio {

/// Published closed forms for the first new point of each construction,
/// transcribed verbatim so the engine can be checked against them. All are
/// functions of the integer (or rational) parameters a..e.
namespace closed_form {

/// Thm11 first ascent point over Q(T): t1 = -4abT / D(T), v1 = phi/psi.
RatFunc thm11_t1(const ConstructionParams& p);
RatFunc thm11_v1(const ConstructionParams& p);

/// Thm12 first ascent point over Q(T): t1 = -4abT^3 / D(T), v1 = phi/psi.
RatFunc thm12_t1(const ConstructionParams& p);
RatFunc thm12_v1(const ConstructionParams& p);

/// Thm13 line parametrization of the plus-sign conic, as functions of the
/// slope r (the indeterminate of the returned rational functions).
RatFunc thm13_T(const ConstructionParams& p);
RatFunc thm13_S(const ConstructionParams& p);
RatFunc thm13_x(const ConstructionParams& p);
RatFunc thm13_y(const ConstructionParams& p);
RatFunc thm13_z(const ConstructionParams& p);

/// Thm14 first ascent point (T1, S1) over Q.
Rational thm14_T1(const ConstructionParams& p);
Rational thm14_S1(const ConstructionParams& p);

}  // namespace closed_form

struct FormulaTally {
  std::string name;
  int passed = 0;
  int failed = 0;
  /// First failing specialization, e.g. "(a,b,c,d,e)=(1,2,-3,4,5) T=2".
  std::string counterexample;
};

struct CrossCheckReport {
  std::vector<FormulaTally> formulas;
  bool all_passed() const;
};

/// Compares the engine with every closed form at `trials` seeded random
/// draws of nonzero integers a..e in [-10, 10], with five random
/// specializations of T (or r) per draw. Throws Errc::InvalidParams for
/// trials < 1.
CrossCheckReport run_cross_checks(int trials, std::uint64_t seed);

}  // namespace ldio
