#include "galtrunc/factor.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <numeric>

namespace galtrunc {

namespace {

std::atomic<std::uint64_t> g_factorizations{0};

constexpr std::size_t kMaxDegree = 1024;
using DegreeSet = std::bitset<kMaxDegree + 1>;

// ---------------------------------------------------------------------------
// Polynomials over Z/m with nonnegative residues.

IntPoly reduce_mod(const IntPoly& a, const BigInt& m) {
  std::vector<BigInt> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly symmetric(const IntPoly& a, const BigInt& m) {
  std::vector<BigInt> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : c) v = symmetric_mod(v, m);
  return IntPoly(std::move(c));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) { return reduce_mod(a * b, m); }

// Division by a monic polynomial over Z/m.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly(), reduce_mod(a, m)};
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    BigInt t = r[static_cast<std::size_t>(k)];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    q[static_cast<std::size_t>(k - db)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {reduce_mod(IntPoly(std::move(q)), m), reduce_mod(IntPoly(std::move(r)), m)};
}

IntPoly from_fp(const FpPoly& a) {
  std::vector<BigInt> c;
  c.reserve(a.size());
  for (auto v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  require(mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0, "leading coefficient not invertible");
  return r;
}

struct LiftPair {
  IntPoly g, h;
};

// Quadratic two-factor lift: F = g*h mod p with h monic and s*g + t*h = 1.
LiftPair lift_pair(const IntPoly& F, const FpPoly& g0, const FpPoly& h0, std::uint64_t p, const BigInt& target) {
  auto eg = fp::ext_gcd(g0, h0, p);
  require(fp::is_one(eg.g), "modular factors are not coprime");
  IntPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(eg.s), t = from_fp(eg.t);
  BigInt m(static_cast<unsigned long>(p));
  while (m < target) {
    BigInt M = m * m;
    if (M > target) M = target;
    IntPoly e = reduce_mod(F - g * h, M);
    auto [q, r] = divrem_monic(mul_mod(s, e, M), h, M);
    IntPoly g1 = reduce_mod(g + t * e + q * g, M);
    IntPoly h1 = reduce_mod(h + r, M);
    IntPoly b = reduce_mod(s * g1 + t * h1 - IntPoly{BigInt(1)}, M);
    auto [c, d] = divrem_monic(mul_mod(s, b, M), h1, M);
    s = reduce_mod(s - d, M);
    t = reduce_mod(t - t * b - c * g1, M);
    g = std::move(g1);
    h = std::move(h1);
    m = M;
  }
  return {g, h};
}

FpPoly product_fp(const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p) {
  FpPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = fp::mul(r, fs[i], p);
  return r;
}

void lift_tree(const IntPoly& F, const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p,
               const BigInt& target, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(reduce_mod(F, target));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  FpPoly g0 = product_fp(fs, lo, mid, p);
  FpPoly h0 = product_fp(fs, mid, hi, p);
  auto lifted = lift_pair(F, g0, h0, p, target);
  lift_tree(lifted.g, fs, lo, mid, p, target, out);
  lift_tree(lifted.h, fs, mid, hi, p, target, out);
}

// ---------------------------------------------------------------------------
// Integer factoring by trial division, for divisor enumeration.

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(100000);
  return primes;
}

std::optional<std::vector<std::pair<BigInt, int>>> factor_integer(BigInt n) {
  std::vector<std::pair<BigInt, int>> out;
  n = abs(n);
  if (n <= 1) return out;
  for (auto p : small_primes()) {
    BigInt pp(static_cast<unsigned long>(p));
    if (pp * pp > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
    int e = static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
    out.emplace_back(pp, e);
  }
  if (n > 1) {
    const BigInt last_square = ipow(BigInt(static_cast<unsigned long>(small_primes().back())), 2);
    if (n > last_square && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

BigInt divisor_count(const std::vector<std::pair<BigInt, int>>& fac) {
  BigInt c = 1;
  for (const auto& [p, e] : fac) c *= e + 1;
  return c;
}

std::vector<BigInt> divisors(const std::vector<std::pair<BigInt, int>>& fac) {
  std::vector<BigInt> ds{BigInt(1)};
  for (const auto& [p, e] : fac) {
    std::size_t base = ds.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// q^n f(a/q).
BigInt homogeneous_value(const IntPoly& f, const BigInt& a, const BigInt& q) {
  BigInt acc = 0;
  BigInt qpow = 1;
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a + f[static_cast<std::size_t>(i)] * qpow;
    qpow *= q;
  }
  return acc;
}

bool value_vanishes_mod(const IntPoly& f, const BigInt& a, const BigInt& q, std::uint64_t p) {
  std::uint64_t qm = mod_u64(q, p);
  if (qm == 0) return true;  // no information
  std::uint64_t r = fp::mul(mod_u64(a, p), fp::inv(qm, p), p);
  std::uint64_t acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = (fp::mul(acc, r, p) + mod_u64(f[static_cast<std::size_t>(i)], p)) % p;
  return acc == 0;
}

// ---------------------------------------------------------------------------

DegreeSet subset_sums(const std::vector<int>& degs) {
  DegreeSet s;
  s.set(0);
  for (int d : degs) s |= (s << static_cast<std::size_t>(d));
  return s;
}

struct PrimeChoice {
  ModPFactorization modp;
  DegreeSet allowed;
};

// Tries the first few good primes from 13 upward. The allowed-degree set is
// the intersection of their subset-sum sets; the prime kept is the one with
// the fewest modular factors.
PrimeChoice choose_prime(const IntPoly& f) {
  constexpr int kCandidates = 5;
  const int n = f.degree();
  DegreeSet allowed;
  for (int d = 0; d <= n; ++d) allowed.set(static_cast<std::size_t>(d));
  std::uint64_t best = 0;
  std::size_t best_count = 0;
  int found = 0;
  for (std::uint64_t p = 13; found < kCandidates; p = next_prime(p)) {
    auto degs = fp::factor_degrees(f, p);
    if (degs.empty()) continue;
    ++found;
    allowed &= subset_sums(degs);
    if (best == 0 || degs.size() < best_count) {
      best = p;
      best_count = degs.size();
    }
    if (degs.size() == 1) break;
  }
  return {factor_mod_p(f, best), allowed};
}

std::vector<IntPoly> zassenhaus(IntPoly f, const std::vector<IntPoly>& lifted, const BigInt& M, const DegreeSet& allowed) {
  std::vector<IntPoly> found;
  std::vector<IntPoly> rest = lifted;
  std::size_t s = 1;
  while (2 * s <= rest.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      int deg = 0;
      for (auto i : idx) deg += rest[i].degree();
      const BigInt b = f.leading();
      if (allowed.test(static_cast<std::size_t>(deg))) {
        BigInt c0 = b;
        for (auto i : idx) c0 = c0 * rest[i][0] % M;
        c0 = symmetric_mod(c0, M);
        BigInt f0b = f[0] * b;
        if (c0 != 0 && mpz_divisible_p(f0b.get_mpz_t(), c0.get_mpz_t()) != 0) {
          IntPoly g = IntPoly{b};
          for (auto i : idx) g = mul_mod(g, rest[i], M);
          g = primitive_part(symmetric(g, M));
          if (auto q = exact_quotient(f, g)) {
            found.push_back(g);
            f = *q;
            std::vector<IntPoly> keep;
            for (std::size_t i = 0, j = 0; i < rest.size(); ++i) {
              if (j < idx.size() && idx[j] == i) {
                ++j;
              } else {
                keep.push_back(rest[i]);
              }
            }
            rest = std::move(keep);
            progress = true;
            break;
          }
        }
      }
      // Next combination.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == rest.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++s;
  }
  if (f.degree() > 0) found.push_back(f);
  return found;
}

// f: primitive, squarefree, positive leading coefficient, f(0) != 0.
std::vector<IntPoly> factor_squarefree(IntPoly f, std::uint64_t& prime_used) {
  std::vector<IntPoly> out;
  if (f.degree() <= 1) {
    out.push_back(f);
    return out;
  }
  if (auto roots = rational_roots_bounded(f, 4096)) {
    for (const auto& r : *roots) {
      IntPoly lin{-r.get_num(), r.get_den()};
      out.push_back(lin);
      f = *exact_quotient(f, lin);
    }
    if (f.degree() <= 1) {
      if (f.degree() == 1) out.push_back(f);
      return out;
    }
  }
  auto choice = choose_prime(f);
  prime_used = choice.modp.prime;
  const int n = f.degree();
  bool irreducible = choice.modp.factors.size() == 1;
  for (int d = 1; d < n && !irreducible; ++d) {
    if (choice.allowed.test(static_cast<std::size_t>(d))) break;
    if (d == n - 1) irreducible = true;
  }
  if (irreducible) {
    out.push_back(f);
    return out;
  }
  require(static_cast<int>(choice.modp.factors.size()) <= kMaxModularFactors,
          "too many modular factors for subset recombination (" + std::to_string(choice.modp.factors.size()) + ")");
  const BigInt bound = 2 * abs(f.leading()) * mignotte_bound(f);
  const BigInt p(static_cast<unsigned long>(choice.modp.prime));
  int k = 1;
  BigInt pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  auto lift = hensel_lift(f, choice.modp, k);
  auto parts = zassenhaus(f, lift.factors, lift.modulus, choice.allowed);
  out.insert(out.end(), parts.begin(), parts.end());
  return out;
}

int compare_from_top(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool factor_less(const IntPoly& a, const IntPoly& b) { return compare_from_top(a, b) < 0; }

IntPoly Factorization::expand() const {
  IntPoly r{unit};
  for (const auto& e : factors) {
    for (int i = 0; i < e.multiplicity; ++i) r *= e.factor;
  }
  return r;
}

int Factorization::factor_count() const {
  int c = 0;
  for (const auto& e : factors) c += e.multiplicity;
  return c;
}

std::vector<int> ModPFactorization::degrees() const {
  std::vector<int> d;
  for (const auto& [g, m] : factors) {
    for (int i = 0; i < m; ++i) d.push_back(fp::degree(g));
  }
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::optional<std::vector<BigRat>> rational_roots_bounded(const IntPoly& f_in, std::size_t max_candidates) {
  require(!f_in.is_zero(), "rational roots of the zero polynomial");
  std::vector<BigRat> roots;
  IntPoly f = f_in;
  int v = f.valuation_at_zero();
  if (v > 0) {
    roots.emplace_back(0);
    std::vector<BigInt> c(f.coefficients().begin() + v, f.coefficients().end());
    f = IntPoly(std::move(c));
  }
  if (f.degree() < 1) return roots;
  const BigInt a0 = f[0];
  const BigInt an = f.leading();
  auto fa0 = factor_integer(a0);
  auto fan = factor_integer(an);
  if (!fa0 || !fan) return std::nullopt;
  if (2 * divisor_count(*fa0) * divisor_count(*fan) > max_candidates) return std::nullopt;
  // Cauchy bound on |root|.
  BigRat cauchy = 0;
  for (int i = 0; i < f.degree(); ++i) {
    BigRat r(abs(f[static_cast<std::size_t>(i)]), abs(an));
    r.canonicalize();
    if (r > cauchy) cauchy = r;
  }
  cauchy += 1;
  const BigInt f1 = f(BigInt(1));
  const BigInt fm1 = f(BigInt(-1));
  for (const auto& q : divisors(*fan)) {
    for (const auto& a : divisors(*fa0)) {
      if (gcd(a, q) != 1) continue;
      BigRat mag(a, q);
      mag.canonicalize();
      if (mag > cauchy) continue;
      for (int sgn_ : {1, -1}) {
        BigInt num = a * sgn_;
        // (q x - num) divides f in Z[x], so (q - num) | f(1) and (q + num) | f(-1).
        BigInt d1 = q - num, d2 = q + num;
        if (f1 != 0 && (d1 == 0 || mpz_divisible_p(f1.get_mpz_t(), d1.get_mpz_t()) == 0)) continue;
        if (fm1 != 0 && (d2 == 0 || mpz_divisible_p(fm1.get_mpz_t(), d2.get_mpz_t()) == 0)) continue;
        bool pruned = false;
        for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
          if (!value_vanishes_mod(f, num, q, p)) {
            pruned = true;
            break;
          }
        }
        if (pruned) continue;
        if (homogeneous_value(f, num, q) == 0) {
          BigRat r(num, q);
          r.canonicalize();
          roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<BigRat> rational_roots(const IntPoly& f) {
  require(!f.is_zero(), "rational roots of the zero polynomial");
  std::vector<BigRat> roots;
  if (f.degree() < 1) return roots;
  const int v = f.valuation_at_zero();
  for (int i = 0; i < v; ++i) roots.emplace_back(0);
  std::vector<BigInt> c(f.coefficients().begin() + v, f.coefficients().end());
  IntPoly g(std::move(c));
  if (g.degree() >= 1) {
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
      auto rs = rational_roots_bounded(part, 1u << 20);
      if (!rs) {
        rs.emplace();
        for (const auto& e : factor_over_integers(part).factors) {
          if (e.factor.degree() == 1) {
            BigRat r(-e.factor[0], e.factor[1]);
            r.canonicalize();
            rs->push_back(r);
          }
        }
      }
      for (const auto& r : *rs) {
        for (int i = 0; i < mult; ++i) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FactorEntry> squarefree_decomposition(const IntPoly& f) {
  require(!f.is_zero(), "squarefree decomposition of the zero polynomial");
  std::vector<FactorEntry> out;
  if (f.degree() < 1) return out;
  RatPoly a = to_rat(f);
  RatPoly b = derivative(a);
  RatPoly c = gcd(a, b);
  if (c.degree() == 0) {
    out.push_back({primitive_part(f), 1});
    return out;
  }
  RatPoly w = divrem(a, c).quotient;
  RatPoly y = divrem(b, c).quotient;
  RatPoly z = y - derivative(w);
  int i = 1;
  while (w.degree() > 0) {
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({primitive_integer(g).primitive, i});
    w = divrem(w, g).quotient;
    y = divrem(z, g).quotient;
    z = y - derivative(w);
    ++i;
  }
  return out;
}

ModPFactorization factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed) {
  require(is_prime(p), "modulus " + std::to_string(p) + " is not prime");
  require(f.degree() >= 0 && mod_u64(f.leading(), p) != 0,
          "leading coefficient divisible by " + std::to_string(p));
  ModPFactorization out;
  out.prime = p;
  out.seed = seed;
  out.leading = mod_u64(f.leading(), p);
  std::mt19937_64 rng(seed ^ p);
  FpPoly g = fp::monic(fp::reduce(f, p), p);
  for (const auto& [part, mult] : fp::squarefree(g, p)) {
    for (const auto& [d, prod] : fp::distinct_degree(part, p)) {
      for (auto& irr : fp::equal_degree(prod, d, p, rng)) out.factors.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return std::lexicographical_compare(x.first.rbegin(), x.first.rend(), y.first.rbegin(), y.first.rend());
  });
  return out;
}

HenselLift hensel_lift(const IntPoly& f, const ModPFactorization& modp, int k) {
  require(k >= 1, "lift exponent must be positive");
  const std::uint64_t p = modp.prime;
  std::vector<FpPoly> fs;
  for (const auto& [g, m] : modp.factors) {
    require(m == 1, "Hensel lifting needs a squarefree factorization mod p");
    fs.push_back(g);
  }
  require(!fs.empty(), "nothing to lift");
  HenselLift out;
  out.prime = p;
  out.exponent = k;
  out.modulus = ipow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(k));
  IntPoly F = reduce_mod(f * inverse_mod(f.leading(), out.modulus), out.modulus);
  lift_tree(F, fs, 0, fs.size(), p, out.modulus, out.factors);
  return out;
}

BigInt mignotte_bound(const IntPoly& f) {
  BigInt norm1 = 0;
  for (const auto& c : f.coefficients()) norm1 += abs(c);
  const int n = std::max(f.degree(), 0);
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2)) * norm1;
}

Factorization factor_over_integers(const IntPoly& f) {
  require(!f.is_zero(), "factorization of the zero polynomial");
  ++g_factorizations;
  Factorization out;
  if (f.degree() < 1) {
    out.unit = f[0];
    return out;
  }
  auto cp = content_primitive(f);
  out.unit = cp.content * cp.sign;
  IntPoly g = cp.primitive;
  std::vector<FactorEntry> raw;
  const int v = g.valuation_at_zero();
  if (v > 0) {
    raw.push_back({IntPoly::x(), v});
    std::vector<BigInt> c(g.coefficients().begin() + v, g.coefficients().end());
    g = IntPoly(std::move(c));
  }
  if (g.degree() >= 1) {
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
      std::uint64_t prime = 0;
      for (auto& irr : factor_squarefree(part, prime)) raw.push_back({std::move(irr), mult});
      if (prime != 0) out.prime = prime;
    }
  }
  std::sort(raw.begin(), raw.end(), [](const FactorEntry& a, const FactorEntry& b) { return factor_less(a.factor, b.factor); });
  for (auto& e : raw) {
    if (!out.factors.empty() && out.factors.back().factor == e.factor) {
      out.factors.back().multiplicity += e.multiplicity;
    } else {
      out.factors.push_back(std::move(e));
    }
  }
  return out;
}

IntPoly largest_factor(const IntPoly& f) {
  require(f.degree() >= 1, "largest factor of a constant");
  auto fac = factor_over_integers(f);
  // factors are sorted by degree then coefficients from the top, so the last
  // entry wins both the degree comparison and the tie-break.
  return fac.factors.back().factor;
}

bool is_irreducible(const IntPoly& f) {
  require(f.degree() >= 1, "irreducibility of a constant");
  auto cp = content_primitive(f);
  const IntPoly& g = cp.primitive;
  if (g.degree() == 1) return true;
  if (g[0] == 0) return false;
  // One irreducible reduction settles it.
  for (std::uint64_t p : {13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
    auto degs = fp::factor_degrees(g, p);
    if (degs.size() == 1) return true;
  }
  // Eisenstein at a small prime dividing every lower coefficient.
  BigInt low = 0;
  for (int i = 0; i < g.degree(); ++i) low = gcd(low, g[static_cast<std::size_t>(i)]);
  for (auto p : small_primes()) {
    if (BigInt(static_cast<unsigned long>(p)) > low) break;
    if (mod_u64(low, p) != 0) continue;
    if (mod_u64(g.leading(), p) != 0 && valuation(g[0], p) == 1) return true;
  }
  auto fac = factor_over_integers(g);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::uint64_t factorization_count() { return g_factorizations.load(); }

}  // namespace galtrunc
