#include "galtrunc/series.hpp"

#include <array>

namespace galtrunc {

namespace {

constexpr std::array kAll = {
    SeriesId::Exp,    SeriesId::LogOneMinus, SeriesId::Atanh2,      SeriesId::InvSqrtPlus,
    SeriesId::InvSqrtMinus, SeriesId::Sin,   SeriesId::Cos,         SeriesId::Sinh,
    SeriesId::SinPlusSinh,  SeriesId::OnePlusSin, SeriesId::OnePlusLogOneMinus,
};

BigRat inv_factorial(unsigned n) { return BigRat(BigInt(1), factorial(n)); }

BigRat reciprocal(unsigned n) { return BigRat(BigInt(1), BigInt(n)); }

// C(2n, n) / 4^n, the coefficient of (1-x)^(-1/2).
BigRat central_binomial_ratio(unsigned n) {
  BigRat q(binomial(2 * n, n), ipow(BigInt(4), n));
  q.canonicalize();
  return q;
}

}  // namespace

std::span<const SeriesId> all_series() { return kAll; }

std::string_view cli_name(SeriesId id) {
  switch (id) {
    case SeriesId::Exp: return "exp";
    case SeriesId::LogOneMinus: return "log1m";
    case SeriesId::Atanh2: return "atanh2";
    case SeriesId::InvSqrtPlus: return "invsqrt-plus";
    case SeriesId::InvSqrtMinus: return "invsqrt-minus";
    case SeriesId::Sin: return "sin";
    case SeriesId::Cos: return "cos";
    case SeriesId::Sinh: return "sinh";
    case SeriesId::SinPlusSinh: return "sin-sinh";
    case SeriesId::OnePlusSin: return "one-plus-sin";
    case SeriesId::OnePlusLogOneMinus: return "one-plus-log1m";
  }
  return "?";
}

std::optional<SeriesId> parse_series(std::string_view name) {
  for (SeriesId id : kAll) {
    if (cli_name(id) == name) return id;
  }
  return std::nullopt;
}

BigRat series_coefficient(SeriesId id, unsigned n) {
  const bool odd = (n % 2) == 1;
  switch (id) {
    case SeriesId::Exp:
      return inv_factorial(n);
    case SeriesId::LogOneMinus:
      return n == 0 ? BigRat(0) : reciprocal(n);
    case SeriesId::Atanh2:
      return odd ? reciprocal(n) : BigRat(0);
    case SeriesId::InvSqrtMinus:
      return central_binomial_ratio(n);
    case SeriesId::InvSqrtPlus:
      return odd ? BigRat(-central_binomial_ratio(n)) : central_binomial_ratio(n);
    case SeriesId::Sin:
      if (!odd) return 0;
      return (n % 4 == 1) ? inv_factorial(n) : BigRat(-inv_factorial(n));
    case SeriesId::Cos:
      if (odd) return 0;
      return (n % 4 == 0) ? inv_factorial(n) : BigRat(-inv_factorial(n));
    case SeriesId::Sinh:
      return odd ? inv_factorial(n) : BigRat(0);
    case SeriesId::SinPlusSinh:
      return (n % 4 == 1) ? BigRat(2 * inv_factorial(n)) : BigRat(0);
    case SeriesId::OnePlusSin:
      return n == 0 ? BigRat(1) : series_coefficient(SeriesId::Sin, n);
    case SeriesId::OnePlusLogOneMinus:
      return n == 0 ? BigRat(1) : BigRat(-reciprocal(n));
  }
  return 0;
}

RatPoly taylor(SeriesId id, unsigned n) {
  std::vector<BigRat> c;
  c.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) c.push_back(series_coefficient(id, k));
  return RatPoly(std::move(c));
}

IntPoly scale_to_monic_integer(unsigned n) {
  require(n >= 1, "scale_to_monic_integer needs n >= 1");
  std::vector<BigInt> c(n + 1);
  // n!/k! built from the top down: 1, n, n(n-1), ...
  BigInt acc = 1;
  for (unsigned k = n + 1; k-- > 0;) {
    c[k] = acc;
    acc *= k;
  }
  return IntPoly(std::move(c));
}

RatPoly derivative_sum_transform(const RatPoly& p) {
  RatPoly sum = p;
  RatPoly d = derivative(p);
  while (!d.is_zero()) {
    sum += d;
    d = derivative(d);
  }
  return sum;
}

}  // namespace galtrunc
