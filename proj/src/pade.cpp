#include "galtrunc/pade.hpp"

#include <future>

namespace galtrunc {

PadePair pade_from_truncation(const RatPoly& t, unsigned n, SeriesId tag) {
  require(n >= 1, "Pade order must be >= 1");
  require(t.degree() < static_cast<int>(n), "truncation degree must be < order");
  const int threshold = static_cast<int>(n) - 1 - static_cast<int>(n / 2);

  // Invariant: r_i == t_i * t (mod x^n).
  RatPoly r_prev = RatPoly::monomial(BigRat(1), static_cast<int>(n));
  RatPoly r_cur = t;
  RatPoly t_prev;  // 0
  RatPoly t_cur = RatPoly::constant(BigRat(1));
  while (r_cur.degree() > threshold) {
    auto qr = divrem(r_prev, r_cur);
    RatPoly t_next = t_prev - qr.quotient * t_cur;
    r_prev = std::move(r_cur);
    r_cur = std::move(qr.remainder);
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  if (r_cur.is_zero()) throw DefectivePadeError(n, "series vanishes to the requested order");

  RatPoly g = gcd(r_cur, t_cur);
  RatPoly num = divrem(r_cur, g).quotient;
  RatPoly den = divrem(t_cur, g).quotient;
  if (den.coeff(0) == 0) throw DefectivePadeError(n, "denominator vanishes at 0");

  auto pn = primitive_integer(num);
  auto pd = primitive_integer(den);
  BigRat ratio = pn.scale / pd.scale;
  PadePair out;
  out.numerator = std::move(pn.primitive);
  out.denominator = std::move(pd.primitive);
  out.overall_sign = sgn(ratio) < 0 ? -1 : 1;
  out.scale = abs(ratio);
  out.order = n;
  out.series = tag;
  if (!pade_defect_check(out, t)) throw DefectivePadeError(n, "approximation order lost after reduction");
  return out;
}

PadePair pade_diagonal(SeriesId id, unsigned n) {
  require(n >= 1, "Pade order must be >= 1");
  return pade_from_truncation(taylor(id, n - 1), n, id);
}

bool pade_defect_check(const PadePair& p, const RatPoly& truncation) {
  if (p.denominator.is_zero()) return false;
  BigRat factor = p.scale * p.overall_sign;
  RatPoly lhs = to_rat(p.denominator) * truncation - to_rat(p.numerator) * factor;
  return lhs.truncated(static_cast<int>(p.order)).is_zero();
}

bool pade_defect_check(const PadePair& p) {
  if (p.order == 0) return false;
  return pade_defect_check(p, taylor(p.series, p.order - 1));
}

std::vector<DivisibilityEntry> divisibility_scan(SeriesId id, unsigned max_order, unsigned jobs) {
  require(max_order >= 2, "divisibility scan needs max_order >= 2");
  std::vector<PadePair> table(max_order + 1);
  if (jobs <= 1) {
    for (unsigned n = 1; n <= max_order; ++n) table[n] = pade_diagonal(id, n);
  } else {
    std::vector<std::future<PadePair>> pending;
    for (unsigned n = 1; n <= max_order; ++n) {
      pending.push_back(std::async(std::launch::async, [id, n] { return pade_diagonal(id, n); }));
    }
    for (unsigned n = 1; n <= max_order; ++n) table[n] = pending[n - 1].get();
  }
  std::vector<DivisibilityEntry> out;
  for (unsigned m = 1; m <= max_order; ++m) {
    for (unsigned n = 1; n <= m; ++n) {
      if (m % n != 0) continue;
      DivisibilityEntry e;
      e.n = n;
      e.m = m;
      e.numerator_divides = exact_quotient(table[m].numerator, table[n].numerator).has_value();
      e.denominator_divides = exact_quotient(table[m].denominator, table[n].denominator).has_value();
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace galtrunc
