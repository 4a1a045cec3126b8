#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galtrunc/modp.hpp"
#include "galtrunc/poly.hpp"

namespace galtrunc {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x9e3779b97f4a7c15ull;

/// Recombination gives up above this many modular factors.
inline constexpr int kMaxModularFactors = 24;

struct FactorEntry {
  IntPoly factor;
  int multiplicity = 1;
};

struct Factorization {
  BigInt unit{1};
  std::vector<FactorEntry> factors;  // sorted by degree, then coefficients
  std::uint64_t prime = 0;           // last modular prime used, 0 if none
  std::uint64_t seed = kDefaultFactorSeed;

  IntPoly expand() const;
  int factor_count() const;  // with multiplicity
};

struct ModPFactorization {
  std::uint64_t prime = 0;
  std::uint64_t seed = kDefaultFactorSeed;
  std::uint64_t leading = 1;  // leading coefficient of the input mod p
  std::vector<std::pair<FpPoly, int>> factors;

  /// Degrees with multiplicity, sorted descending.
  std::vector<int> degrees() const;
};

/// Rational roots of f with multiplicity, ascending.
std::vector<BigRat> rational_roots(const IntPoly& f);

/// Divisor search restricted to at most max_candidates candidates; nullopt when
/// the search would exceed that or the coefficients do not factor cheaply.
/// Expects a squarefree primitive input.
std::optional<std::vector<BigRat>> rational_roots_bounded(const IntPoly& f, std::size_t max_candidates);

/// Yun decomposition over Q: primitive factors with positive leading
/// coefficient; the product of factor^multiplicity equals f up to a constant.
std::vector<FactorEntry> squarefree_decomposition(const IntPoly& f);

ModPFactorization factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultFactorSeed);

struct HenselLift {
  std::uint64_t prime = 0;
  int exponent = 0;
  BigInt modulus;
  /// Monic, coefficients in [0, modulus); their product is congruent to
  /// lc(f)^-1 * f modulo `modulus`.
  std::vector<IntPoly> factors;
};

/// Lifts a squarefree mod-p factorization of f (p not dividing lc(f)) to p^k.
HenselLift hensel_lift(const IntPoly& f, const ModPFactorization& modp, int k);

/// C(n, floor(n/2)) * ||f||_1: bounds every coefficient of any integer divisor
/// of f whose leading coefficient divides lc(f).
BigInt mignotte_bound(const IntPoly& f);

Factorization factor_over_integers(const IntPoly& f);

/// Irreducible factor of maximal degree. Ties go to the coefficient sequence
/// that is lexicographically largest when read from the leading coefficient
/// down.
IntPoly largest_factor(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

/// Number of factor_over_integers calls made by this process.
std::uint64_t factorization_count();

/// Ordering used for factor lists: degree, then coefficients from the top.
bool factor_less(const IntPoly& a, const IntPoly& b);

}  // namespace galtrunc
