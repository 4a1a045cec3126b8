#include "galtrunc/padic.hpp"

namespace galtrunc {

long legendre_valuation(std::uint64_t p, std::uint64_t n) {
  require(is_prime(p), "legendre_valuation: " + std::to_string(p) + " is not prime");
  long v = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) v += static_cast<long>(q);
  return v;
}

namespace {

// Positive when o -> a -> b turns counterclockwise.
__int128 cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
  return static_cast<__int128>(a.index - o.index) * (b.valuation - o.valuation) -
         static_cast<__int128>(a.valuation - o.valuation) * (b.index - o.index);
}

}  // namespace

NewtonPolygon newton_polygon(const RatPoly& f, std::uint64_t p) {
  require(!f.is_zero(), "Newton polygon of the zero polynomial");
  require(is_prime(p), "newton_polygon: " + std::to_string(p) + " is not prime");
  NewtonPolygon out;
  out.prime = p;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) out.points.push_back({static_cast<long>(i), valuation(f[i], p)});
  }
  // Collinear interior points are dropped so only corners remain.
  for (const auto& pt : out.points) {
    while (out.vertices.size() >= 2 && cross(out.vertices[out.vertices.size() - 2], out.vertices.back(), pt) <= 0) {
      out.vertices.pop_back();
    }
    out.vertices.push_back(pt);
  }
  for (std::size_t i = 1; i < out.vertices.size(); ++i) {
    const auto& a = out.vertices[i - 1];
    const auto& b = out.vertices[i];
    BigRat slope(BigInt(b.valuation - a.valuation), BigInt(b.index - a.index));
    slope.canonicalize();
    out.segments.push_back({slope, b.index - a.index});
  }
  return out;
}

std::vector<PureFactorShape> qp_factor_shape(const RatPoly& f, std::uint64_t p) {
  std::vector<PureFactorShape> out;
  for (const auto& s : newton_polygon(f, p).segments) out.push_back({s.length, s.slope});
  return out;
}

std::uint64_t bertrand_prime(std::uint64_t n) {
  require(n >= 3, "bertrand_prime needs n >= 3");
  for (std::uint64_t p = n - 1; 2 * p > n; --p) {
    if (is_prime(p)) return p;
  }
  throw Error("no prime in (n/2, n)");
}

}  // namespace galtrunc
