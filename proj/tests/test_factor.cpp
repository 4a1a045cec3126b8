#include <doctest.h>

#include "galtrunc/factor.hpp"
#include "galtrunc/modp.hpp"
#include "support.hpp"

using namespace galtrunc;
using gt_test::Gen;

TEST_CASE("prime field scalar arithmetic") {
  const std::uint64_t p = 1000000007;
  CHECK(fp::mul(p - 1, p - 1, p) == 1);
  CHECK(fp::pow(3, p - 1, p) == 1);
  for (std::uint64_t a = 1; a < 50; ++a) CHECK(fp::mul(a, fp::inv(a, p), p) == 1);
  const std::uint64_t big = 9223372036854775783ull;  // largest prime below 2^63
  CHECK(fp::mul(big - 1, big - 1, big) == 1);
}

TEST_CASE("prime field polynomial arithmetic") {
  const std::uint64_t p = 13;
  Gen g(3);
  for (int trial = 0; trial < 200; ++trial) {
    FpPoly a = fp::reduce(g.int_poly(static_cast<int>(g.range(0, 9)), 50), p);
    FpPoly b = fp::reduce(g.int_poly(static_cast<int>(g.range(0, 6)), 50), p);
    if (b.empty()) continue;
    auto [q, r] = fp::divrem(a, b, p);
    CHECK(fp::add(fp::mul(q, b, p), r, p) == a);
    CHECK(fp::degree(r) < fp::degree(b));
    auto e = fp::ext_gcd(a, b, p);
    CHECK(fp::add(fp::mul(e.s, a, p), fp::mul(e.t, b, p), p) == e.g);
    if (!e.g.empty()) CHECK(e.g.back() == 1);
  }
  FpPoly m = fp::reduce(parse_int_poly("x^5 + 2x + 1"), p);
  FpPoly base{3, 1, 7};
  FpPoly acc{1};
  for (int e = 1; e <= 40; ++e) {
    acc = fp::rem(fp::mul(acc, base, p), m, p);
    CHECK(fp::powmod(base, BigInt(e), m, p) == acc);
  }
  CHECK(fp::lift(FpPoly{12, 7}, p) == IntPoly{-1, -6});
}

TEST_CASE("modular factorization against brute force") {
  Gen g(11);
  for (int p : {2, 3, 5, 7}) {
    auto irr = gt_test::small_irreducibles(p, 4);
    for (int trial = 0; trial < 60; ++trial) {
      IntPoly f = g.int_poly(static_cast<int>(g.range(1, 8)), 30);
      if (f.leading() % p == 0) continue;
      auto mine = factor_mod_p(f, static_cast<std::uint64_t>(p));
      auto oracle = gt_test::small_factor(f, p, irr);
      REQUIRE(mine.factors.size() == oracle.size());
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        std::vector<int> ours(mine.factors[i].first.begin(), mine.factors[i].first.end());
        CHECK(ours == oracle[i].first);
        CHECK(mine.factors[i].second == oracle[i].second);
      }
    }
  }
  // Irreducible counts over F_2: 2, 1, 2, 3 for degrees 1..4.
  CHECK(gt_test::small_irreducibles(2, 4).size() == 8);
}

TEST_CASE("distinct and equal degree splitting") {
  const std::uint64_t p = 101;
  IntPoly f = parse_int_poly("(x^2 + 2)(x^2 + 3)(x - 5)(x^3 + x + 1)");
  FpPoly fm = fp::monic(fp::reduce(f, p), p);
  int total = 0;
  std::mt19937_64 rng(1);
  for (const auto& [d, prod] : fp::distinct_degree(fm, p)) {
    auto parts = fp::equal_degree(prod, d, p, rng);
    for (const auto& q : parts) CHECK(fp::degree(q) == d);
    total += static_cast<int>(parts.size()) * d;
  }
  CHECK(total == f.degree());
  CHECK(fp::factor_degrees(parse_int_poly("x^2 - 2"), 7) == std::vector<int>{1, 1});
  CHECK(fp::factor_degrees(parse_int_poly("x^2 - 2"), 5) == std::vector<int>{2});
  CHECK(fp::factor_degrees(parse_int_poly("(x-1)^2"), 5).empty());
  CHECK(fp::factor_degrees(parse_int_poly("5x^2 + 1"), 5).empty());
}

TEST_CASE("squarefree decomposition modulo p") {
  const std::uint64_t p = 3;
  // (x+1)^3 (x+2)^2 x over F_3; the cube needs the p-th root step.
  FpPoly f = fp::reduce(parse_int_poly("(x+1)^3 (x+2)^2 x"), p);
  auto sq = fp::squarefree(fp::monic(f, p), p);
  std::map<int, int> mult_degree;
  for (const auto& [part, m] : sq) mult_degree[m] += fp::degree(part);
  CHECK(mult_degree[1] == 1);
  CHECK(mult_degree[2] == 1);
  CHECK(mult_degree[3] == 1);
}

TEST_CASE("Hensel lifting reproduces f modulo p^k") {
  IntPoly f = parse_int_poly("x^4 - 10x^2 + 1");
  auto modp = factor_mod_p(f, 23);
  auto lift = hensel_lift(f, modp, 8);
  IntPoly prod = IntPoly::constant(BigInt(1));
  for (const auto& q : lift.factors) prod *= q;
  for (int i = 0; i <= 4; ++i) {
    BigInt diff = prod.coeff(i) - f.coeff(i);
    CHECK(diff % lift.modulus == 0);
  }
}

TEST_CASE("factorization over the integers") {
  auto fac = factor_over_integers(parse_int_poly("x^12 - 1"));
  CHECK(fac.factors.size() == 6);
  CHECK(fac.expand() == parse_int_poly("x^12 - 1"));
  // Irreducible over Q, reducible modulo every prime.
  CHECK(is_irreducible(parse_int_poly("x^4 - 10x^2 + 1")));
  CHECK(is_irreducible(parse_int_poly("x^4 + 1")));
  auto sd = factor_over_integers(parse_int_poly("(x^4 - 10x^2 + 1)(x^4 + 1)(2x - 3)^2"));
  REQUIRE(sd.factors.size() == 3);
  CHECK(sd.factors[0].factor == parse_int_poly("2x - 3"));
  CHECK(sd.factors[0].multiplicity == 2);
  CHECK(sd.factor_count() == 4);
  auto scaled = factor_over_integers(parse_int_poly("-6x^3 + 6x"));
  CHECK(scaled.unit == -6);
  CHECK(scaled.expand() == parse_int_poly("-6x^3 + 6x"));
  CHECK(factor_over_integers(IntPoly{BigInt(-7)}).unit == -7);
  CHECK_THROWS_AS(factor_over_integers(IntPoly()), Error);
  CHECK(largest_factor(parse_int_poly("(x^2 + 1)(x^2 + 2)(x - 1)")) == parse_int_poly("x^2 + 2"));
  CHECK(mignotte_bound(parse_int_poly("x^2 - 2")) == 6);
}

TEST_CASE("rational roots and squarefree decomposition over Q") {
  auto roots = rational_roots(parse_int_poly("(2x - 1)(x + 3)^2 (x^2 + 1)"));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -3);
  CHECK(roots[1] == -3);
  CHECK(roots[2] == BigRat(1, 2));
  auto sq = squarefree_decomposition(parse_int_poly("(x - 1)^3 (x + 2)"));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].factor == parse_int_poly("x + 2"));
  CHECK(sq[1].multiplicity == 3);
  auto bounded = rational_roots_bounded(parse_int_poly("x^3 - 2"), 1000);
  REQUIRE(bounded.has_value());
  CHECK(bounded->empty());
}

TEST_CASE("factor ordering") {
  CHECK(factor_less(parse_int_poly("x + 5"), parse_int_poly("x^2")));
  CHECK(factor_less(parse_int_poly("x^2 + 1"), parse_int_poly("x^2 + 2")));
  CHECK(factor_less(parse_int_poly("x^2 + 9"), parse_int_poly("2x^2 + 1")));
}
