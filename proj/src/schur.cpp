#include "galtrunc/schur.hpp"

#include "galtrunc/factor.hpp"
#include "galtrunc/galois.hpp"
#include "galtrunc/padic.hpp"
#include "galtrunc/series.hpp"

namespace galtrunc {

using nlohmann::json;

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Eisenstein: return "Eisenstein";
    case CertificateKind::GeneralizedEisenstein: return "GeneralizedEisenstein";
    case CertificateKind::NoRationalRoot: return "NoRationalRoot";
    case CertificateKind::FullFactorization: return "FullFactorization";
  }
  return "FullFactorization";
}

namespace {

bool divisible(const BigInt& a, std::uint64_t m) { return mod_u64(a, m) == 0; }

std::string eisenstein_failure(const IntPoly& f, std::uint64_t p) {
  if (f.degree() < 1) return "constant polynomial";
  if (!is_prime(p)) return std::to_string(p) + " is not prime";
  if (divisible(f.leading(), p)) return "p divides the leading coefficient";
  for (int i = 0; i < f.degree(); ++i) {
    if (!divisible(f[static_cast<std::size_t>(i)], p)) return "p does not divide the coefficient of x^" + std::to_string(i);
  }
  if (divisible(f[0], p * p)) return "p^2 divides the constant term";
  return "";
}

// v_p(c_k) >= 1 for k < p, v_p(c_0) = 1, p does not divide c_p: the polygon
// starts with one segment of slope -1/p and length p.
std::string generalized_failure(const IntPoly& f, std::uint64_t p) {
  const int n = f.degree();
  if (n < 3) return "degree below 3";
  if (!is_prime(p)) return std::to_string(p) + " is not prime";
  if (!(2 * p > static_cast<std::uint64_t>(n) && p < static_cast<std::uint64_t>(n))) return "p outside (N/2, N)";
  if (legendre_valuation(p, static_cast<std::uint64_t>(n)) != 1) return "v_p(N!) != 1";
  if (static_cast<std::uint64_t>(n) - p != 1) return "complement of the p-adic factor has degree above 1";
  if (f[0] == 0 || valuation(f[0], p) != 1) return "v_p(f(0)) != 1";
  for (std::uint64_t k = 1; k < p; ++k) {
    if (!divisible(f[k], p)) return "p does not divide the coefficient of x^" + std::to_string(k);
  }
  if (divisible(f[p], p)) return "p divides the coefficient of x^p";
  if (!rational_roots(f).empty()) return "rational root present";
  return "";
}

}  // namespace

std::string IrreducibilityCertificate::validate() const {
  const IntPoly& f = polynomial;
  if (f.degree() < 1) return "constant polynomial";
  switch (kind) {
    case CertificateKind::Eisenstein:
      if (!prime) return "missing prime";
      return eisenstein_failure(f, *prime);
    case CertificateKind::GeneralizedEisenstein:
      if (!prime) return "missing prime";
      return generalized_failure(f, *prime);
    case CertificateKind::NoRationalRoot:
      if (f.degree() > 3) return "degree above 3";
      return rational_roots(f).empty() ? "" : "rational root present";
    case CertificateKind::FullFactorization: {
      auto fac = factor_over_integers(f);
      if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1) return "factorization has several factors";
      return fac.factors[0].factor == primitive_part(f) ? "" : "factor differs from the primitive part";
    }
  }
  return "unknown certificate kind";
}

json to_json(const IrreducibilityCertificate& cert) {
  return json{{"kind", to_string(cert.kind)},
              {"prime", cert.prime ? json(*cert.prime) : json(nullptr)},
              {"polynomial", coefficient_strings(cert.polynomial)},
              {"details", cert.details}};
}

std::optional<IrreducibilityCertificate> eisenstein_certificate(const IntPoly& f, std::uint64_t p) {
  require(f.degree() >= 1, "Eisenstein test of a constant");
  require(is_prime(p), "Eisenstein test needs a prime");
  if (!eisenstein_failure(f, p).empty()) return std::nullopt;
  IrreducibilityCertificate c;
  c.kind = CertificateKind::Eisenstein;
  c.prime = p;
  c.polynomial = f;
  c.details = {"p = " + std::to_string(p) + " does not divide lc = " + to_string(f.leading()),
               "p divides the coefficients of x^0 .. x^" + std::to_string(f.degree() - 1),
               "v_p(f(0)) = 1 with f(0) = " + to_string(f[0])};
  return c;
}

std::optional<IrreducibilityCertificate> generalized_eisenstein_scan(unsigned n) {
  require(n >= 3, "generalized Eisenstein scan needs N >= 3");
  const std::uint64_t p = n - 1;
  if (!is_prime(p)) return std::nullopt;
  IntPoly q = scale_to_monic_integer(n);
  if (!generalized_failure(q, p).empty()) return std::nullopt;
  IrreducibilityCertificate c;
  c.kind = CertificateKind::GeneralizedEisenstein;
  c.prime = p;
  c.polynomial = q;
  c.details = {"p = " + std::to_string(p) + " lies in (N/2, N) and v_p(N!) = 1",
               "p divides the coefficients of x^0 .. x^" + std::to_string(p - 1) + " and v_p(Q_N(0)) = 1",
               "p does not divide the coefficient of x^p: a p-adic factor of degree p and slope -1/p is irreducible",
               "any rational factorization leaves a cofactor of degree N - p = 1",
               "Q_N has no rational root"};
  return c;
}

IrreducibilityCertificate fallback_certificate(const IntPoly& f) {
  require(f.degree() >= 1, "certificate for a constant");
  IrreducibilityCertificate c;
  c.polynomial = f;
  if (f.degree() <= 3) {
    c.kind = CertificateKind::NoRationalRoot;
    c.details = {"degree " + std::to_string(f.degree()) + " without rational roots"};
  } else {
    c.kind = CertificateKind::FullFactorization;
    c.details = {"factorization over Z returns a single factor"};
  }
  require(c.validate().empty(), "polynomial is reducible");
  return c;
}

bool DiscriminantComparison::magnitude_matches() const { return abs(oracle_value) == magnitude; }

DiscriminantComparison closed_form_disc(unsigned n) {
  require(n >= 1, "closed_form_disc needs N >= 1");
  DiscriminantComparison d;
  d.n = n;
  d.magnitude = ipow(factorial(n), n);
  const unsigned long e = static_cast<unsigned long>(n) * (n - 1) / 2;
  d.closed_form_sign = ((e + n) % 2 == 0) ? 1 : -1;
  d.degenerate = (n == 1);
  d.oracle_value = discriminant(scale_to_monic_integer(n));
  d.oracle_sign = sgn(d.oracle_value) < 0 ? -1 : 1;
  return d;
}

bool derivative_identity_check(unsigned n) {
  require(n >= 1, "derivative identity needs N >= 1");
  IntPoly q = scale_to_monic_integer(n);
  return derivative(q) == q - IntPoly::monomial(BigInt(1), static_cast<int>(n));
}

std::string theorem_expectation(unsigned n) {
  require(n >= 1, "theorem_expectation needs N >= 1");
  return canonical_group_name((n % 4 == 0 ? "A" : "S") + std::to_string(n));
}

SchurReport schur_report(unsigned n, bool all_checks, std::uint64_t prime_bound) {
  SchurReport r;
  r.n = n;
  IntPoly q = scale_to_monic_integer(n);
  if (n >= 2 && is_prime(n)) {
    if (auto c = eisenstein_certificate(q, n)) r.certificates.push_back(*c);
  }
  if (n >= 3) {
    if (auto c = generalized_eisenstein_scan(n)) r.certificates.push_back(*c);
  }
  if (r.certificates.empty() && all_checks) r.certificates.push_back(fallback_certificate(q));
  r.disc = closed_form_disc(n);
  r.derivative_identity = derivative_identity_check(n);
  r.expected_group = theorem_expectation(n);
  r.matches = r.derivative_identity && r.disc.magnitude_matches();
  for (const auto& c : r.certificates) r.matches = r.matches && c.validate().empty();
  if (all_checks) {
    GaloisConfig cfg;
    cfg.prime_bound = prime_bound;
    auto id = classify(q, cfg);
    r.galois = to_json(id);
    r.matches = r.matches && id.group_name == r.expected_group && id.certainty.tag == CertaintyTag::Proven;
  }
  return r;
}

json to_json(const SchurReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) {
    json j = to_json(c);
    j["valid"] = c.validate().empty();
    certs.push_back(j);
  }
  json out{{"schema", "galtrunc.schur/1"},
           {"n", r.n},
           {"certificates", certs},
           {"discriminant",
            {{"magnitude", to_string(r.disc.magnitude)},
             {"oracle", to_string(r.disc.oracle_value)},
             {"magnitude_matches", r.disc.magnitude_matches()},
             {"closed_form_sign", r.disc.closed_form_sign},
             {"oracle_sign", r.disc.oracle_sign},
             {"signs_agree", r.disc.signs_agree()},
             {"degenerate", r.disc.degenerate}}},
           {"derivative_identity", r.derivative_identity},
           {"expected_group", r.expected_group},
           {"matches", r.matches}};
  if (r.galois) out["galois"] = *r.galois;
  return out;
}

}  // namespace galtrunc
