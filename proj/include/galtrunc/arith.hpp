#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace galtrunc {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt ipow(const BigInt& base, unsigned long exp);

bool is_perfect_square(const BigInt& n);
/// True iff q is the square of a rational number (q is kept canonical by GMP).
bool is_rational_square(const BigRat& q);

/// Deterministic primality for 64-bit values.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
std::uint64_t next_prime(std::uint64_t n);

/// Non-negative residue of n modulo m.
std::uint64_t mod_u64(const BigInt& n, std::uint64_t m);
/// Representative of n mod m in (-m/2, m/2].
BigInt symmetric_mod(const BigInt& n, const BigInt& m);

/// p-adic valuation of a nonzero integer.
int valuation(const BigInt& n, std::uint64_t p);
/// p-adic valuation of a nonzero rational.
int valuation(const BigRat& q, std::uint64_t p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Decimal text, "a" or "a/b".
std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);
BigInt parse_integer(std::string_view text);
BigRat parse_rational(std::string_view text);

}  // namespace galtrunc
