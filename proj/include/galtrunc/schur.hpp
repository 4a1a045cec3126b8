#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galtrunc/poly.hpp"

namespace galtrunc {

enum class CertificateKind { Eisenstein, GeneralizedEisenstein, NoRationalRoot, FullFactorization };

std::string to_string(CertificateKind kind);

/// Self-contained irreducibility proof for `polynomial`.
struct IrreducibilityCertificate {
  CertificateKind kind = CertificateKind::FullFactorization;
  std::optional<std::uint64_t> prime;
  IntPoly polynomial;
  std::vector<std::string> details;

  /// Recomputes every condition from the polynomial alone. Returns an empty
  /// string when the certificate holds, else the first failing condition.
  std::string validate() const;
};

nlohmann::json to_json(const IrreducibilityCertificate& cert);

/// Eisenstein at p: p does not divide lc(f), p divides every other
/// coefficient, p^2 does not divide f(0).
std::optional<IrreducibilityCertificate> eisenstein_certificate(const IntPoly& f, std::uint64_t p);

/// Irreducibility of Q_N from the prime p = N - 1: v_p(N!) = 1 forces an
/// irreducible p-adic factor of degree p, leaving room only for a linear
/// factor, and Q_N has no rational root. nullopt when N - 1 is not prime.
std::optional<IrreducibilityCertificate> generalized_eisenstein_scan(unsigned n);

/// Degree <= 3 without rational roots, or a full factorization over Z.
IrreducibilityCertificate fallback_certificate(const IntPoly& f);

struct DiscriminantComparison {
  unsigned n = 0;
  BigInt magnitude;          // (N!)^N
  int closed_form_sign = 1;  // (-1)^(N(N-1)/2 + N)
  int oracle_sign = 1;       // sign of the resultant-based discriminant of Q_N
  BigInt oracle_value;
  bool degenerate = false;  // N = 1: empty product

  bool magnitude_matches() const;
  bool signs_agree() const { return closed_form_sign == oracle_sign; }
};

DiscriminantComparison closed_form_disc(unsigned n);

/// Q_N' == Q_N - x^N.
bool derivative_identity_check(unsigned n);

/// "A{N}" when 4 | N, "S{N}" otherwise (with the small-degree spellings C1,
/// C2 of canonical_group_name).
std::string theorem_expectation(unsigned n);

struct SchurReport {
  unsigned n = 0;
  std::vector<IrreducibilityCertificate> certificates;
  DiscriminantComparison disc;
  bool derivative_identity = false;
  std::string expected_group;
  std::optional<nlohmann::json> galois;  // filled with all_checks
  bool matches = true;
};

SchurReport schur_report(unsigned n, bool all_checks, std::uint64_t prime_bound = 10000);
nlohmann::json to_json(const SchurReport& report);

}  // namespace galtrunc
