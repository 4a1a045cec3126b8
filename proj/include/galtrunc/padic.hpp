#pragma once

#include <cstdint>
#include <vector>

#include "galtrunc/poly.hpp"

namespace galtrunc {

/// v_p(N!) by Legendre's sum of floor(N / p^k).
long legendre_valuation(std::uint64_t p, std::uint64_t n);

struct PolygonPoint {
  long index = 0;
  long valuation = 0;
  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonSegment {
  BigRat slope;
  long length = 0;
};

struct NewtonPolygon {
  std::uint64_t prime = 0;
  std::vector<PolygonPoint> points;    // nonzero coefficients only
  std::vector<PolygonPoint> vertices;  // lower hull, ascending index
  std::vector<PolygonSegment> segments;
};

NewtonPolygon newton_polygon(const RatPoly& f, std::uint64_t p);

struct PureFactorShape {
  long degree = 0;
  BigRat slope;
};

/// Degrees and slopes of the pure p-adic factors, one per polygon segment.
std::vector<PureFactorShape> qp_factor_shape(const RatPoly& f, std::uint64_t p);

/// Largest prime p with n/2 < p < n; such a prime divides n! exactly once.
std::uint64_t bertrand_prime(std::uint64_t n);

}  // namespace galtrunc
