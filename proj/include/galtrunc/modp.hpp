#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "galtrunc/poly.hpp"

namespace galtrunc {

/// Polynomial over the prime field F_p, ascending coefficients in [0, p),
/// no trailing zeros. p must be below 2^63.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

int degree(const FpPoly& a);
void trim(FpPoly& a);
FpPoly reduce(const IntPoly& a, std::uint64_t p);
/// Lift to the symmetric range (-p/2, p/2].
IntPoly lift(const FpPoly& a, std::uint64_t p);

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly scale(const FpPoly& a, std::uint64_t s, std::uint64_t p);
std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly rem(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly monic(const FpPoly& a, std::uint64_t p);
FpPoly gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  FpPoly g, s, t;
};
ExtGcd ext_gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly derivative(const FpPoly& a, std::uint64_t p);
/// base^e mod m, e given as an arbitrary-precision integer.
FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& m, std::uint64_t p);
bool is_one(const FpPoly& a);

/// Squarefree factorization of a monic polynomial: pairs (factor, multiplicity).
std::vector<std::pair<FpPoly, int>> squarefree(const FpPoly& f, std::uint64_t p);

/// Distinct-degree factorization of a squarefree monic polynomial: pairs
/// (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, FpPoly>> distinct_degree(const FpPoly& f, std::uint64_t p);

/// Splits a squarefree monic product of irreducibles of degree d.
std::vector<FpPoly> equal_degree(const FpPoly& f, int d, std::uint64_t p, std::mt19937_64& rng);

/// Degrees of the irreducible factors of f mod p, sorted descending, or an
/// empty vector when p divides the leading coefficient or f is not
/// squarefree mod p.
std::vector<int> factor_degrees(const IntPoly& f, std::uint64_t p);

}  // namespace fp

}  // namespace galtrunc
