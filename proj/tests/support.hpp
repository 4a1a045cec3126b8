#pragma once

// Shared test helpers: a small property harness, random generators and
// oracles that recompute results without going through the library code
// under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galtrunc/arith.hpp"
#include "galtrunc/poly.hpp"

namespace gt_test {

using galtrunc::BigInt;
using galtrunc::BigRat;
using galtrunc::IntPoly;
using galtrunc::RatPoly;

// ---------------------------------------------------------------------------
// Property harness.

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
  }

  /// Integer with up to `bits` random bits and a random sign.
  BigInt big(unsigned bits) {
    BigInt r = 0;
    for (unsigned b = 0; b < bits; b += 32) r = (r << 32) + BigInt(static_cast<unsigned long>(rng_() & 0xffffffffu));
    if (bits % 32) r >>= (32 - bits % 32);
    return coin() ? r : BigInt(-r);
  }

  /// Degree exactly `deg`, coefficients in [-bound, bound], nonzero leading.
  IntPoly int_poly(int deg, long bound) {
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = range(-bound, bound);
    while (c.back() == 0) c.back() = range(-bound, bound);
    return IntPoly(std::move(c));
  }

  IntPoly monic_poly(int deg, long bound) {
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = range(-bound, bound);
    c.back() = 1;
    return IntPoly(std::move(c));
  }

  BigRat rat(long bound) {
    BigRat q(BigInt(range(-bound, bound)), BigInt(range(1, bound)));
    q.canonicalize();
    return q;
  }

  RatPoly rat_poly(int deg, long bound) {
    std::vector<BigRat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = rat(bound);
    while (c.back() == 0) c.back() = rat(bound);
    return RatPoly(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure messages
};

/// Runs `body` on `cases` generators seeded from `seed` and the case index.
/// The body returns an empty string on success.
inline PropertyResult check_property(const std::string& name, std::size_t cases, std::uint64_t seed,
                                     const std::function<std::string(Gen&)>& body) {
  PropertyResult out;
  out.name = name;
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t case_seed = seed * 0x100000001b3ull + i;
    Gen g(case_seed);
    std::string why;
    try {
      why = body(g);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    ++out.cases;
    if (!why.empty()) {
      ++out.failures;
      if (out.samples.size() < 5) out.samples.push_back("case seed " + std::to_string(case_seed) + ": " + why);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinant, resultant and discriminant oracles.

/// Fraction-free Gaussian elimination (Bareiss).
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Determinant of the Sylvester matrix.
inline BigInt sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0) return galtrunc::ipow(a[0], static_cast<unsigned long>(n));
  if (n == 0) return galtrunc::ipow(b[0], static_cast<unsigned long>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[r][static_cast<std::size_t>(r + i)] = a.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b.coeff(n - i);
  }
  return bareiss_det(std::move(s));
}

inline BigInt sylvester_discriminant(const IntPoly& f) {
  const int n = f.degree();
  BigInt r = sylvester_resultant(f, galtrunc::derivative(f)) / f.leading();
  return ((n * (n - 1) / 2) % 2) ? BigInt(-r) : r;
}

/// Legendre symbol by Euler's criterion, computed on a GMP integer.
inline int euler_legendre(const BigInt& a, std::uint64_t p) {
  BigInt r;
  BigInt pp(static_cast<unsigned long>(p));
  BigInt aa = a % pp;
  if (aa < 0) aa += pp;
  if (aa == 0) return 0;
  mpz_powm(r.get_mpz_t(), aa.get_mpz_t(), BigInt((pp - 1) / 2).get_mpz_t(), pp.get_mpz_t());
  return r == 1 ? 1 : -1;
}

/// v_p(n!) by counting the multiples of p, p^2, ... one at a time.
inline long brute_factorial_valuation(std::uint64_t p, std::uint64_t n) {
  long v = 0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    std::uint64_t m = k;
    while (m % p == 0) {
      m /= p;
      ++v;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Pade oracle: nullspace of the Hankel system over Q.

/// Rational function (num, den) with den != 0 such that den * t - num has no
/// terms of degree < n, deg den <= floor(n/2), deg num <= n - 1 - floor(n/2).
/// The pair is reduced by the gcd, so it is the unique candidate for a
/// diagonal approximant; `genuine` tells whether the reduced pair still
/// reaches order n.
struct HankelPade {
  RatPoly numerator;
  RatPoly denominator;
  bool genuine = false;
};

inline HankelPade hankel_pade(const RatPoly& t, unsigned n) {
  const int m = static_cast<int>(n / 2);
  const int l = static_cast<int>(n) - 1 - m;
  // Unknowns q_0..q_m; equations: coefficient k of q*t is zero for l < k < n.
  std::vector<std::vector<BigRat>> rows;
  for (int k = l + 1; k < static_cast<int>(n); ++k) {
    std::vector<BigRat> row(static_cast<std::size_t>(m) + 1, BigRat(0));
    for (int j = 0; j <= m; ++j) row[static_cast<std::size_t>(j)] = t.coeff(k - j);
    rows.push_back(std::move(row));
  }
  // Row reduce and read off one nullspace vector.
  const std::size_t cols = static_cast<std::size_t>(m) + 1;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    BigRat inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      BigRat f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
  std::vector<BigRat> q(cols, BigRat(0));
  q[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) q[static_cast<std::size_t>(pivot_col[i])] = -rows[i][free_col];
  RatPoly den(q);
  RatPoly num = (den * t).truncated(l + 1);
  HankelPade out;
  RatPoly g = galtrunc::gcd(num, den);
  if (num.is_zero()) g = RatPoly::constant(BigRat(1));
  out.numerator = galtrunc::divrem(num, g).quotient;
  out.denominator = galtrunc::divrem(den, g).quotient;
  RatPoly defect = (out.denominator * t - out.numerator).truncated(static_cast<int>(n));
  out.genuine = defect.is_zero() && out.denominator.coeff(0) != 0;
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force arithmetic over small prime fields. Plain int vectors, ascending
// coefficients, no shared code with the library's F_p layer.

using SmallPoly = std::vector<int>;

inline void small_trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline SmallPoly small_reduce(const IntPoly& f, int p) {
  SmallPoly r;
  for (const auto& c : f.coefficients()) {
    BigInt v = c % p;
    if (v < 0) v += p;
    r.push_back(static_cast<int>(v.get_si()));
  }
  small_trim(r);
  return r;
}

/// Remainder of a by the monic polynomial b; returns true when it is zero and
/// writes the quotient.
inline bool small_divides(const SmallPoly& a, const SmallPoly& b, int p, SmallPoly& quotient) {
  SmallPoly r = a;
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return false;
  quotient.assign(r.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    const int c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quotient[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      int& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = ((slot - c * b[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  small_trim(r);
  return r.empty();
}

/// Monic irreducible polynomials over F_p of degree 1..max_deg, by sieving
/// out products of lower-degree irreducibles.
inline std::vector<SmallPoly> small_irreducibles(int p, int max_deg) {
  std::vector<SmallPoly> irr;
  for (int d = 1; d <= max_deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      SmallPoly f(static_cast<std::size_t>(d) + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      f[static_cast<std::size_t>(d)] = 1;
      bool reducible = false;
      SmallPoly q;
      for (const auto& g : irr) {
        if (2 * (static_cast<int>(g.size()) - 1) > d) break;
        if (small_divides(f, g, p, q)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) irr.push_back(std::move(f));
    }
  }
  return irr;
}

/// Monic irreducible factors with multiplicity by trial division, for a
/// polynomial whose leading coefficient is nonzero mod p. Each factor is
/// returned with its multiplicity, sorted by degree then by coefficients.
inline std::vector<std::pair<SmallPoly, int>> small_factor(const IntPoly& f, int p,
                                                           const std::vector<SmallPoly>& irr) {
  SmallPoly a = small_reduce(f, p);
  // make monic
  int lc = a.back();
  int inv = 1;
  while ((lc * inv) % p != 1) ++inv;
  for (auto& c : a) c = (c * inv) % p;
  std::vector<std::pair<SmallPoly, int>> out;
  for (const auto& g : irr) {
    if (a.size() <= 1) break;
    const int dg = static_cast<int>(g.size()) - 1;
    const int da = static_cast<int>(a.size()) - 1;
    if (2 * dg > da) break;
    int mult = 0;
    SmallPoly q;
    while (small_divides(a, g, p, q)) {
      a = q;
      ++mult;
    }
    if (mult) out.emplace_back(g, mult);
  }
  // No factor of degree <= half its degree is left, so the cofactor is
  // irreducible.
  if (a.size() > 1) out.emplace_back(a, 1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return std::lexicographical_compare(x.first.rbegin(), x.first.rend(), y.first.rbegin(), y.first.rend());
  });
  return out;
}

/// Irreducibility over Q certified by an irreducible reduction modulo one of
/// the given primes with the degree preserved. False means not certified.
inline bool certified_irreducible(const IntPoly& f, const std::map<int, std::vector<SmallPoly>>& tables) {
  if (f.degree() == 1) return true;
  for (const auto& [p, irr] : tables) {
    if (f.leading() % p == 0) continue;
    auto fac = small_factor(f, p, irr);
    if (fac.size() == 1 && fac[0].second == 1) return true;
  }
  return false;
}

inline std::string str(const IntPoly& f) { return galtrunc::to_string(f); }
inline std::string str(const RatPoly& f) { return galtrunc::to_string(f); }

}  // namespace gt_test
