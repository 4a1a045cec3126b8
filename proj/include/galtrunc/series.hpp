#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "galtrunc/poly.hpp"

namespace galtrunc {

/// Power series with closed-form rational coefficients.
///
/// Sign conventions:
///  - LogOneMinus is -log(1-x) = x + x^2/2 + x^3/3 + ...; the overall sign of
///    the log family does not change factorizations or Galois groups.
///  - OnePlusLogOneMinus is the genuine 1 + log(1-x) = 1 - x - x^2/2 - ...,
///    where the sign does matter.
///  - Both (1+x)^(-1/2) and (1-x)^(-1/2) are available. The printed Pade
///    values x-4 / 3x-4 at order 3 come from (1-x)^(-1/2).
enum class SeriesId {
  Exp,
  LogOneMinus,
  Atanh2,  // (1/2) log((1+x)/(1-x))
  InvSqrtPlus,
  InvSqrtMinus,
  Sin,
  Cos,
  Sinh,
  SinPlusSinh,
  OnePlusSin,
  OnePlusLogOneMinus,
};

std::span<const SeriesId> all_series();
std::string_view cli_name(SeriesId id);
std::optional<SeriesId> parse_series(std::string_view name);

/// Coefficient of x^n.
BigRat series_coefficient(SeriesId id, unsigned n);

/// Truncation of degree <= n.
RatPoly taylor(SeriesId id, unsigned n);

/// n! * (truncated exponential of order n): monic, coefficients n!/k!.
IntPoly scale_to_monic_integer(unsigned n);

/// P + P' + P'' + ... + P^(deg P).
RatPoly derivative_sum_transform(const RatPoly& p);

}  // namespace galtrunc
