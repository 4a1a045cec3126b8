#include <doctest.h>

#include "galtrunc/factor.hpp"
#include "galtrunc/padic.hpp"
#include "galtrunc/schur.hpp"
#include "galtrunc/series.hpp"
#include "support.hpp"

using namespace galtrunc;

TEST_CASE("Legendre valuation against factor counting") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    for (std::uint64_t n = 0; n <= 200; ++n) CHECK(legendre_valuation(p, n) == gt_test::brute_factorial_valuation(p, n));
  }
}

TEST_CASE("Newton polygon of a truncated exponential") {
  NewtonPolygon np = newton_polygon(taylor(SeriesId::Exp, 10), 7);
  REQUIRE(np.vertices.size() == 3);
  CHECK(np.vertices[0] == PolygonPoint{0, 0});
  CHECK(np.vertices[1] == PolygonPoint{7, -1});
  CHECK(np.vertices[2] == PolygonPoint{10, -1});
  REQUIRE(np.segments.size() == 2);
  CHECK(np.segments[0].slope == BigRat(-1, 7));
  CHECK(np.segments[0].length == 7);
  CHECK(np.segments[1].slope == 0);
  CHECK(np.points.size() == 11);
  // At p = 2 the polygon has one vertex per power of 2 boundary.
  NewtonPolygon np2 = newton_polygon(taylor(SeriesId::Exp, 8), 2);
  CHECK(np2.vertices.back() == PolygonPoint{8, -7});
  auto shape = qp_factor_shape(taylor(SeriesId::Exp, 8), 2);
  long total = 0;
  for (const auto& s : shape) total += s.degree;
  CHECK(total == 8);
}

TEST_CASE("Newton polygon skips zero coefficients") {
  NewtonPolygon np = newton_polygon(parse_poly("x^4 + 9"), 3);
  CHECK(np.points.size() == 2);
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0].slope == BigRat(-1, 2));
}

TEST_CASE("primes strictly between n/2 and n") {
  CHECK(bertrand_prime(10) == 7);
  CHECK(bertrand_prime(14) == 13);
  for (std::uint64_t n = 3; n <= 200; ++n) {
    std::uint64_t p = bertrand_prime(n);
    CHECK(is_prime(p));
    CHECK(2 * p > n);
    CHECK(p < n);
  }
}

TEST_CASE("Eisenstein certificates for the scaled truncation") {
  for (unsigned n : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto cert = eisenstein_certificate(scale_to_monic_integer(n), n);
    REQUIRE(cert.has_value());
    CHECK(cert->validate().empty());
    CHECK(cert->kind == CertificateKind::Eisenstein);
  }
  CHECK_FALSE(eisenstein_certificate(scale_to_monic_integer(4), 2).has_value());
  CHECK_FALSE(eisenstein_certificate(parse_int_poly("x^2 + 4"), 2).has_value());
  auto cert = eisenstein_certificate(parse_int_poly("x^3 + 6x + 3"), 3);
  REQUIRE(cert.has_value());
  cert->polynomial = parse_int_poly("x^3 + 6x + 9");
  CHECK_FALSE(cert->validate().empty());
}

TEST_CASE("certificates from the prime N - 1") {
  for (unsigned n : {3u, 4u, 6u, 8u, 12u, 14u, 18u, 20u, 24u}) {
    CAPTURE(n);
    auto cert = generalized_eisenstein_scan(n);
    REQUIRE(cert.has_value());
    CHECK(cert->validate().empty());
    CHECK(cert->prime == n - 1);
    CHECK(is_irreducible(cert->polynomial));
  }
  CHECK_FALSE(generalized_eisenstein_scan(10).has_value());
  auto cert = *generalized_eisenstein_scan(8);
  cert.polynomial = parse_int_poly("(x - 1)(x^7 + 7)");
  CHECK_FALSE(cert.validate().empty());
}

TEST_CASE("fallback certificates") {
  auto small = fallback_certificate(parse_int_poly("x^3 - 2"));
  CHECK(small.kind == CertificateKind::NoRationalRoot);
  CHECK(small.validate().empty());
  auto full = fallback_certificate(parse_int_poly("x^4 + 1"));
  CHECK(full.kind == CertificateKind::FullFactorization);
  CHECK(full.validate().empty());
  CHECK_THROWS_AS(fallback_certificate(parse_int_poly("x^4 - 1")), Error);
  auto forged = full;
  forged.polynomial = parse_int_poly("x^4 - 1");
  CHECK_FALSE(forged.validate().empty());
}

TEST_CASE("discriminant of the scaled truncation") {
  for (unsigned n = 2; n <= 12; ++n) {
    auto cmp = closed_form_disc(n);
    CHECK(cmp.magnitude == ipow(factorial(n), n));
    CHECK(cmp.magnitude_matches());
    BigInt oracle = gt_test::sylvester_discriminant(scale_to_monic_integer(n));
    CHECK(cmp.oracle_value == oracle);
    CHECK(cmp.oracle_sign == ((n * (n - 1) / 2) % 2 ? -1 : 1));
    // The closed form carries an extra factor (-1)^N.
    CHECK(cmp.signs_agree() == (n % 2 == 0));
  }
  CHECK(closed_form_disc(3).oracle_value == -216);
  CHECK(closed_form_disc(1).degenerate);
}

TEST_CASE("derivative identity and the predicted group") {
  for (unsigned n = 1; n <= 30; ++n) CHECK(derivative_identity_check(n));
  CHECK(theorem_expectation(4) == "A4");
  CHECK(theorem_expectation(5) == "S5");
  CHECK(theorem_expectation(2) == "C2");
  CHECK(theorem_expectation(12) == "A12");
}

TEST_CASE("Schur report") {
  auto r = schur_report(8, true);
  CHECK(r.matches);
  CHECK(r.expected_group == "A8");
  REQUIRE(r.galois.has_value());
  CHECK((*r.galois)["group_name"] == "A8");
  CHECK_FALSE(r.certificates.empty());
  auto j = to_json(r);
  CHECK(j["schema"] == "galtrunc.schur/1");
  auto quick = schur_report(7, false);
  CHECK_FALSE(quick.galois.has_value());
}
