#pragma once

#include <vector>

#include "galtrunc/poly.hpp"
#include "galtrunc/series.hpp"

namespace galtrunc {

/// Reduced diagonal Pade approximant of order n, normalized for display.
///
/// The approximant is overall_sign * scale * numerator / denominator where
/// numerator and denominator are primitive integer polynomials with positive
/// leading coefficients and scale is a positive rational. The series agrees
/// with it to O(x^n); deg denominator <= floor(n/2) and
/// deg numerator + deg denominator < n.
struct PadePair {
  IntPoly numerator;
  IntPoly denominator;
  int overall_sign = 1;
  BigRat scale = 1;
  unsigned order = 0;
  SeriesId series = SeriesId::Exp;
};

/// Approximant of a truncation t (degree <= n-1) at order n, via the extended
/// Euclidean algorithm on (x^n, t) stopped at the first remainder of degree
/// <= n - 1 - floor(n/2). Throws DefectivePadeError when no genuine
/// approximant of that shape exists.
PadePair pade_from_truncation(const RatPoly& t, unsigned n, SeriesId tag = SeriesId::Exp);

PadePair pade_diagonal(SeriesId id, unsigned n);

/// Exact check that denominator * T_{n-1} - overall_sign * scale * numerator
/// vanishes modulo x^n.
bool pade_defect_check(const PadePair& p);
bool pade_defect_check(const PadePair& p, const RatPoly& truncation);

struct DivisibilityEntry {
  unsigned n = 0;
  unsigned m = 0;
  bool numerator_divides = false;
  bool denominator_divides = false;
  bool divides() const { return numerator_divides && denominator_divides; }
};

/// Every pair n | m with 1 <= n <= m <= max_order, ascending in (m, n).
/// Orders are constructed concurrently when jobs > 1.
std::vector<DivisibilityEntry> divisibility_scan(SeriesId id, unsigned max_order, unsigned jobs = 1);

}  // namespace galtrunc
