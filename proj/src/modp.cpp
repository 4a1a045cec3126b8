#include "galtrunc/modp.hpp"

#include <algorithm>

namespace galtrunc::fp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, "inverse of zero in F_p");
  return pow(a, p - 2, p);
}

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly reduce(const IntPoly& a, std::uint64_t p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_u64(a[i], p);
  trim(r);
  return r;
}

IntPoly lift(const FpPoly& a, std::uint64_t p) {
  std::vector<BigInt> c;
  c.reserve(a.size());
  for (auto v : a) {
    BigInt x(static_cast<unsigned long>(v));
    if (2 * v > p) x -= static_cast<unsigned long>(p);
    c.push_back(x);
  }
  return IntPoly(std::move(c));
}

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] += b[i];
    if (r[i] >= p) r[i] -= p;
  }
  trim(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  // Accumulate in 128 bits and reduce periodically to avoid overflow.
  const std::size_t flush = (p < (1ull << 31)) ? 64 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    if ((i + 1) % flush == 0) {
      for (auto& v : acc) v %= p;
    }
  }
  FpPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
  trim(r);
  return r;
}

FpPoly scale(const FpPoly& a, std::uint64_t s, std::uint64_t p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s, p);
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  require(!b.empty(), "division by zero polynomial over F_p");
  if (a.size() < b.size()) return {{}, a};
  FpPoly r = a;
  const int db = degree(b);
  FpPoly q(static_cast<std::size_t>(degree(a) - db + 1), 0);
  const std::uint64_t il = inv(b.back(), p);
  for (int k = degree(a); k >= db; --k) {
    std::uint64_t t = mul(r[k], il, p);
    q[k - db] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) {
      std::uint64_t s = mul(t, b[j], p);
      r[k - db + j] = (r[k - db + j] + p - s) % p;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

FpPoly rem(const FpPoly& a, const FpPoly& b, std::uint64_t p) { return divrem(a, b, p).second; }

FpPoly monic(const FpPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

FpPoly gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly x = a, y = b;
  while (!y.empty()) {
    FpPoly r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

ExtGcd ext_gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    FpPoly s2 = sub(s0, mul(q, s1, p), p);
    FpPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint64_t il = inv(r0.back(), p);
  return {scale(r0, il, p), scale(s0, il, p), scale(t0, il, p)};
}

FpPoly derivative(const FpPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p, p);
  trim(r);
  return r;
}

FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& m, std::uint64_t p) {
  FpPoly result{1 % p};
  trim(result);
  result = rem(result, m, p);
  FpPoly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

bool is_one(const FpPoly& a) { return a.size() == 1 && a[0] == 1; }

namespace {

// f(x) = g(x^p) -> g(x); valid because the Frobenius fixes F_p.
FpPoly pth_root(const FpPoly& f, std::uint64_t p) {
  FpPoly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
  trim(r);
  return r;
}

FpPoly exact_div(const FpPoly& a, const FpPoly& b, std::uint64_t p) { return divrem(a, b, p).first; }

}  // namespace

std::vector<std::pair<FpPoly, int>> squarefree(const FpPoly& f_in, std::uint64_t p) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = monic(f_in, p);
  if (degree(f) < 1) return out;
  FpPoly df = derivative(f, p);
  if (df.empty()) {
    for (auto& [g, m] : squarefree(pth_root(f, p), p)) out.emplace_back(g, m * static_cast<int>(p));
    return out;
  }
  FpPoly c = gcd(f, df, p);
  FpPoly w = exact_div(f, c, p);
  int i = 1;
  while (degree(w) > 0) {
    FpPoly y = gcd(w, c, p);
    FpPoly z = exact_div(w, y, p);
    if (degree(z) > 0) out.emplace_back(monic(z, p), i);
    ++i;
    w = std::move(y);
    c = exact_div(c, w, p);
  }
  if (degree(c) > 0) {
    for (auto& [g, m] : squarefree(pth_root(monic(c, p), p), p)) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<int, FpPoly>> distinct_degree(const FpPoly& f_in, std::uint64_t p) {
  std::vector<std::pair<int, FpPoly>> out;
  FpPoly f = monic(f_in, p);
  const BigInt pp(static_cast<unsigned long>(p));
  FpPoly h{0, 1};  // x
  h = rem(h, f, p);
  FpPoly x{0, 1};
  int d = 0;
  while (degree(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, pp, f, p);
    FpPoly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      f = exact_div(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(degree(f), f);
  return out;
}

std::vector<FpPoly> equal_degree(const FpPoly& f_in, int d, std::uint64_t p, std::mt19937_64& rng) {
  FpPoly f = monic(f_in, p);
  const int n = degree(f);
  if (n == d) return {f};
  if (d == 1 && n >= 1 && p <= 64) {
    // Tiny fields: read the roots off directly.
    std::vector<FpPoly> roots;
    for (std::uint64_t r = 0; r < p; ++r) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (mul(v, r, p) + f[i]) % p;
      if (v == 0) roots.push_back(FpPoly{(p - r) % p, 1});
    }
    return roots;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(n));
    for (auto& v : a) v = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    FpPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      FpPoly t = a, acc = a;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), f, p);
        acc = add(acc, t, p);
      }
      b = acc;
    } else {
      BigInt e = (ipow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
      b = sub(powmod(a, e, f, p), FpPoly{1}, p);
    }
    FpPoly g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree(g, d, p, rng);
      auto right = equal_degree(exact_div(f, g, p), d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<int> factor_degrees(const IntPoly& f, std::uint64_t p) {
  if (f.degree() < 1) return {};
  if (mod_u64(f.leading(), p) == 0) return {};
  FpPoly fp = monic(reduce(f, p), p);
  if (degree(gcd(fp, derivative(fp, p), p)) > 0) return {};
  std::vector<int> degs;
  for (const auto& [d, g] : distinct_degree(fp, p)) {
    for (int k = 0; k < degree(g) / d; ++k) degs.push_back(d);
  }
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

}  // namespace galtrunc::fp
