#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galtrunc/arith.hpp"
#include "galtrunc/error.hpp"

namespace galtrunc {

/// Dense univariate polynomial with coefficients in ascending exponent order.
///
/// The coefficient vector never ends in a zero, so `degree()` is exact. The
/// zero polynomial is the empty vector and reports degree -1; callers compare
/// against that sentinel explicitly rather than doing arithmetic with it.
template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c[static_cast<std::size_t>(k)] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::size_t size() const noexcept { return c_.size(); }

  const T& leading() const {
    require(!c_.empty(), "leading coefficient of the zero polynomial");
    return c_.back();
  }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0);
  }
  const T& operator[](std::size_t i) const { return c_[i]; }
  std::span<const T> coefficients() const noexcept { return c_; }

  /// Index of the lowest nonzero coefficient (-1 for the zero polynomial).
  int valuation_at_zero() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }

  T operator()(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly operator-() const {
    std::vector<T> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] != b.c_[i]) return false;
    }
    return true;
  }

  /// Multiply by x^k.
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<T> r(static_cast<std::size_t>(k), T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  /// Drop every term of degree >= n.
  Poly truncated(int n) const {
    if (n <= 0) return Poly();
    std::vector<T> r(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(c_.size())));
    return Poly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using RatPoly = Poly<BigRat>;
using IntPoly = Poly<BigInt>;

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  if (a.degree() < 1) return Poly<T>();
  std::vector<T> r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = T(static_cast<long>(i)) * a[i];
  return Poly<T>(std::move(r));
}

/// f(x) -> f(x^k).
template <class T>
Poly<T> inflate(const Poly<T>& a, int k) {
  if (a.is_zero()) return a;
  std::vector<T> r(static_cast<std::size_t>(a.degree() * k + 1), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i * static_cast<std::size_t>(k)] = a[i];
  return Poly<T>(std::move(r));
}

// ---------------------------------------------------------------------------
// Conversions and normalization.

RatPoly to_rat(const IntPoly& a);

struct ContentPrimitive {
  BigInt content;     // > 0
  int sign;           // sign of the input leading coefficient
  IntPoly primitive;  // content 1, positive leading coefficient
};

/// a = sign * content * primitive.
ContentPrimitive content_primitive(const IntPoly& a);
BigInt content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);

struct ScaledIntPoly {
  BigRat scale;       // signed
  IntPoly primitive;  // content 1, positive leading coefficient
};

/// a = scale * primitive for a nonzero rational polynomial.
ScaledIntPoly primitive_integer(const RatPoly& a);

/// Exact integer polynomial if every coefficient is integral.
std::optional<IntPoly> to_int_exact(const RatPoly& a);

// ---------------------------------------------------------------------------
// Division and gcd.

struct RatDivRem {
  RatPoly quotient;
  RatPoly remainder;
};

RatDivRem divrem(const RatPoly& a, const RatPoly& b);

/// lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// a / b when b divides a in Z[x]; nullopt otherwise.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Primitive gcd with positive leading coefficient, via the primitive PRS.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

bool is_squarefree(const IntPoly& a);

// ---------------------------------------------------------------------------
// Resultants and discriminants.

/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a,
/// computed by the subresultant pseudo-remainder sequence.
BigInt resultant(const IntPoly& a, const IntPoly& b);
BigRat resultant(const RatPoly& a, const RatPoly& b);

/// (-1)^(n(n-1)/2) Res(a, a') / lc(a); equals lc^(2n-2) prod_{i<j} (r_i - r_j)^2.
BigInt discriminant(const IntPoly& a);
BigRat discriminant(const RatPoly& a);

// ---------------------------------------------------------------------------
// Text formats.

/// Human form, descending powers: "x^4 + 24*x^3 - 3/8*x + 5".
std::string to_string(const RatPoly& a, char var = 'x');
std::string to_string(const IntPoly& a, char var = 'x');

/// Parse the human form. Accepts implicit multiplication ("24x^3"), "**" for
/// powers, parenthesized products such as "(x-4)(x^2-12x+16)", and any
/// single-letter variable name.
RatPoly parse_poly(std::string_view text);
IntPoly parse_int_poly(std::string_view text);

/// Machine form: JSON array of decimal coefficient strings, ascending exponent.
std::string to_json_text(const RatPoly& a);
std::string to_json_text(const IntPoly& a);
std::vector<std::string> coefficient_strings(const RatPoly& a);
std::vector<std::string> coefficient_strings(const IntPoly& a);
RatPoly poly_from_strings(const std::vector<std::string>& coeffs);

/// Either form: a leading '[' selects the machine form.
RatPoly parse_any_poly(std::string_view text);

}  // namespace galtrunc
