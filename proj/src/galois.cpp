#include "galtrunc/galois.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>

#include "galtrunc/factor.hpp"
#include "galtrunc/modp.hpp"

namespace galtrunc {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Certainty and identification plumbing.

std::string to_string(CertaintyTag tag) {
  switch (tag) {
    case CertaintyTag::Proven: return "Proven";
    case CertaintyTag::EliminatedToSet: return "EliminatedToSet";
    case CertaintyTag::Heuristic: return "Heuristic";
    case CertaintyTag::Unknown: return "Unknown";
  }
  return "Unknown";
}

CertaintyTag parse_certainty_tag(std::string_view text) {
  if (text == "Proven") return CertaintyTag::Proven;
  if (text == "EliminatedToSet") return CertaintyTag::EliminatedToSet;
  if (text == "Heuristic") return CertaintyTag::Heuristic;
  if (text == "Unknown") return CertaintyTag::Unknown;
  throw Error("unknown certainty tag '" + std::string(text) + "'");
}

int Certainty::rank() const {
  switch (tag) {
    case CertaintyTag::Proven: return 3;
    case CertaintyTag::EliminatedToSet: return 2;
    case CertaintyTag::Heuristic: return 1;
    case CertaintyTag::Unknown: return 0;
  }
  return 0;
}

const Evidence* GaloisIdentification::find(std::string_view kind) const {
  for (const auto& e : evidence) {
    if (e.kind == kind) return &e;
  }
  return nullptr;
}

namespace {

json poly_json(const IntPoly& f) { return json(coefficient_strings(f)); }
json poly_json(const RatPoly& f) { return json(coefficient_strings(f)); }

IntPoly int_poly_from_json(const json& j) {
  auto p = to_int_exact(poly_from_strings(j.get<std::vector<std::string>>()));
  require(p.has_value(), "expected integer coefficients");
  return *p;
}

std::optional<std::string> t_notation_for(int n, const std::string& name) {
  if (n == 1 && name == "C1") return "1T1";
  if (const auto* r = find_transitive_group(n, name)) return r->t_notation();
  return std::nullopt;
}

GaloisIdentification make_id(const IntPoly& f, std::string name, CertaintyTag tag) {
  GaloisIdentification id;
  id.degree = f.degree();
  id.polynomial = f;
  id.group_name = std::move(name);
  id.t_notation = t_notation_for(id.degree, id.group_name);
  id.certainty.tag = tag;
  return id;
}

void add(GaloisIdentification& id, std::string kind, json data) { id.evidence.push_back({std::move(kind), std::move(data)}); }

json disc_evidence(const IntPoly& f) {
  BigInt d = discriminant(f);
  return json{{"value", is_rational_square(BigRat(d))}, {"discriminant", to_string(d)}};
}

json tally_json(const std::vector<FrobeniusSample>& samples) {
  std::map<CycleType, std::uint64_t> tally;
  for (const auto& s : samples) ++tally[s.type];
  json t = json::object();
  for (const auto& [ct, c] : tally) t[ct.to_string()] = c;
  return t;
}

std::uint64_t order_lower_bound(const std::vector<FrobeniusSample>& samples) {
  std::uint64_t r = 1;
  for (const auto& s : samples) r = lcm_u64(r, s.type.order());
  return r;
}

// First prime at which each distinct cycle type appeared.
std::vector<FrobeniusSample> first_occurrences(const std::vector<FrobeniusSample>& samples) {
  std::vector<FrobeniusSample> out;
  std::set<CycleType> seen;
  for (const auto& s : samples) {
    if (seen.insert(s.type).second) out.push_back(s);
  }
  return out;
}

void add_frobenius(GaloisIdentification& id, const FrobeniusSample& s) {
  add(id, "frobenius", json{{"prime", s.prime}, {"cycle_type", s.type.to_string()}});
}

// Exponent gcd: f(x) = x^shift * g(x^k).
std::pair<int, int> exponent_structure(const IntPoly& f) {
  int shift = f.valuation_at_zero();
  int k = 0;
  for (int i = shift + 1; i <= f.degree(); ++i) {
    if (f[static_cast<std::size_t>(i)] != 0) k = std::gcd(k, i - shift);
  }
  return {shift, k};
}

IntPoly deflate(const IntPoly& f, int shift, int k) {
  std::vector<BigInt> c;
  for (int i = shift; i <= f.degree(); i += k) c.push_back(f[static_cast<std::size_t>(i)]);
  return IntPoly(std::move(c));
}

std::vector<int> block_sizes_forced(const IntPoly& f) {
  auto [shift, k] = exponent_structure(f);
  std::vector<int> out;
  if (shift != 0) return out;
  for (int d = 2; d < f.degree(); ++d) {
    if (k % d == 0 && f.degree() % d == 0) out.push_back(d);
  }
  return out;
}

std::string block_group_name(int k) {
  switch (k) {
    case 2: return "C2";
    case 3: return "S3";
    case 4: return "D4";
    case 6: return "D6";
    default: return "Hol(C" + std::to_string(k) + ")";
  }
}

std::string sym_name(int n, bool alternating) {
  if (n == 1) return "C1";
  if (n == 2) return alternating ? "C1" : "C2";
  if (n == 3 && alternating) return "C3";
  return std::string(alternating ? "A" : "S") + std::to_string(n);
}

// ---------------------------------------------------------------------------
// Degree 4.

struct QuarticDecision {
  std::string name;
  json resolvent;
  std::optional<json> kappe_warren;
};

bool splits_over_quadratic_field(const BigRat& delta, const BigRat& D) {
  return delta == 0 || is_rational_square(delta) || is_rational_square(delta * D);
}

QuarticDecision decide_quartic(const IntPoly& f) {
  QuarticDecision out;
  RatPoly R = quartic_resolvent(f);
  auto roots = rational_roots(primitive_integer(R).primitive);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  json rj = json::array();
  for (const auto& r : roots) rj.push_back(to_string(r));
  out.resolvent = json{{"kind", "cubic"}, {"coefficients", poly_json(R)}, {"rational_roots", rj}};
  const BigRat D = BigRat(discriminant(f));
  const bool square = is_rational_square(D);
  if (roots.size() == 3) {
    out.name = "V4";
  } else if (roots.empty()) {
    out.name = square ? "A4" : "S4";
  } else {
    const BigRat lc(f.leading());
    BigRat a = BigRat(f[3]) / lc, b = BigRat(f[2]) / lc, d = BigRat(f[0]) / lc;
    const BigRat& r = roots[0];
    BigRat delta1 = r * r - 4 * d;            // x^2 - r x + d
    BigRat delta2 = a * a - 4 * (b - r);      // x^2 + a x + (b - r)
    bool c4 = splits_over_quadratic_field(delta1, D) && splits_over_quadratic_field(delta2, D);
    out.name = c4 ? "C4" : "D4";
    out.kappe_warren = json{{"root", to_string(r)},
                            {"delta1", to_string(delta1)},
                            {"delta2", to_string(delta2)},
                            {"splits", c4}};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree 5: F20 invariant evaluated on p-adic roots.

using Perm5 = std::array<int, 5>;

// theta(x) = sum_i x_i^2 (x_{i-1} x_{i+1} + x_{i-2} x_{i+2}), indices mod 5;
// its stabilizer in S5 is the Frobenius group of order 20.
std::vector<std::array<int, 3>> theta_monomials(const Perm5& s) {
  std::vector<std::array<int, 3>> m;
  for (int i = 0; i < 5; ++i) {
    for (int off : {1, 2}) {
      int a = s[static_cast<std::size_t>((i + 5 - off) % 5)], b = s[static_cast<std::size_t>((i + off) % 5)];
      m.push_back({s[static_cast<std::size_t>(i)], std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

const std::vector<Perm5>& f20_coset_representatives() {
  static const std::vector<Perm5> reps = [] {
    std::vector<Perm5> out;
    std::vector<std::vector<std::array<int, 3>>> seen;
    Perm5 s{0, 1, 2, 3, 4};
    do {
      auto key = theta_monomials(s);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        out.push_back(s);
      }
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
  }();
  return reps;
}

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt theta_value(const std::vector<BigInt>& y, const Perm5& s, const BigInt& M) {
  BigInt acc = 0;
  for (const auto& [a, b, c] : theta_monomials(s)) {
    acc += mod_pos(y[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(a)] % M * y[static_cast<std::size_t>(b)] % M *
                       y[static_cast<std::size_t>(c)],
                   M);
  }
  return mod_pos(acc, M);
}

// sum_i y_{s(i)}^2 y_{s(i+dir)}
BigInt psi_value(const std::vector<BigInt>& y, const Perm5& s, int dir, const BigInt& M) {
  BigInt acc = 0;
  for (int i = 0; i < 5; ++i) {
    const BigInt& a = y[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
    const BigInt& b = y[static_cast<std::size_t>(s[static_cast<std::size_t>((i + 5 + dir) % 5)])];
    acc += a * a % M * b;
  }
  return mod_pos(acc, M);
}

BigInt eval_mod(const IntPoly& g, const BigInt& x, const BigInt& M) {
  BigInt acc = 0;
  for (int i = g.degree(); i >= 0; --i) acc = mod_pos(acc * x + g[static_cast<std::size_t>(i)], M);
  return acc;
}

std::vector<BigInt> lift_roots(const IntPoly& g, const std::vector<std::uint64_t>& roots, std::uint64_t p, const BigInt& M) {
  IntPoly dg = derivative(g);
  std::vector<BigInt> out;
  for (auto r0 : roots) {
    BigInt r(static_cast<unsigned long>(r0));
    BigInt m(static_cast<unsigned long>(p));
    while (m < M) {
      BigInt m2 = m * m;
      if (m2 > M) m2 = M;
      BigInt d = eval_mod(dg, r, m2), inv;
      require(mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m2.get_mpz_t()) != 0, "root lifting hit a multiple root");
      r = mod_pos(r - eval_mod(g, r, m2) * inv, m2);
      m = m2;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

QuinticResolvent quintic_resolvent(const IntPoly& f, int start_tschirnhaus) {
  require(f.degree() == 5, "quintic resolvent needs degree 5");
  // g(x) = lc^4 f(x / lc) is monic with integer coefficients and the same
  // splitting field.
  const BigInt lc = f.leading();
  std::vector<BigInt> gc(6);
  for (int i = 0; i <= 5; ++i) gc[static_cast<std::size_t>(i)] = (i == 5) ? BigInt(1) : f[static_cast<std::size_t>(i)] * ipow(lc, static_cast<unsigned long>(4 - i));
  IntPoly g(std::move(gc));
  BigInt B = 0;
  for (int i = 0; i < 5; ++i) B = std::max(B, BigInt(abs(g[static_cast<std::size_t>(i)])));
  B += 1;  // Cauchy bound on |root|

  std::uint64_t p = 7;
  for (;; p = next_prime(p)) {
    require(p < 100000000ull, "no completely split prime found for the quintic resolvent");
    auto degs = fp::factor_degrees(g, p);
    if (degs.size() == 5) break;
  }
  auto modp = factor_mod_p(g, p);
  std::vector<std::uint64_t> roots;
  for (const auto& [lin, m] : modp.factors) roots.push_back((p - lin[0]) % p);

  const bool square_disc = is_perfect_square(discriminant(g));
  for (int c = start_tschirnhaus; c < start_tschirnhaus + 64; ++c) {
    // Transformed roots y = r + c r^2 must stay distinct.
    std::vector<std::uint64_t> ymodp;
    for (auto r : roots) ymodp.push_back((r + fp::mul(static_cast<std::uint64_t>(c) % p, fp::mul(r, r, p), p)) % p);
    std::vector<std::uint64_t> sorted = ymodp;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

    const BigInt By = B + c * B * B;
    const BigInt theta_bound = 10 * ipow(By, 4);
    const BigInt target = 2 * ipow(theta_bound + 1, 6);
    BigInt M(static_cast<unsigned long>(p));
    while (M <= target) M *= static_cast<unsigned long>(p);
    auto r = lift_roots(g, roots, p, M);
    std::vector<BigInt> y;
    for (const auto& v : r) y.push_back(mod_pos(v + c * v * v, M));

    const auto& reps = f20_coset_representatives();
    std::vector<BigInt> theta;
    for (const auto& s : reps) theta.push_back(theta_value(y, s, M));
    std::vector<BigInt> R{BigInt(1)};
    for (const auto& t : theta) {
      std::vector<BigInt> next(R.size() + 1, BigInt(0));
      for (std::size_t i = 0; i < R.size(); ++i) {
        next[i + 1] += R[i];
        next[i] -= R[i] * t;
      }
      for (auto& v : next) v = mod_pos(v, M);
      R = std::move(next);
    }
    for (auto& v : R) v = symmetric_mod(v, M);
    IntPoly sextic(std::move(R));
    if (discriminant(sextic) == 0) continue;

    QuinticResolvent out;
    out.tschirnhaus = c;
    out.prime = p;
    out.sextic = sextic;
    bool degenerate = false;
    for (std::size_t j = 0; j < theta.size(); ++j) {
      BigInt cand = symmetric_mod(theta[j], M);
      if (sextic(cand) != 0) continue;
      out.root = cand;
      if (square_disc) {
        BigInt psi = psi_value(y, reps[j], 1, M), psi2 = psi_value(y, reps[j], -1, M);
        BigInt s = symmetric_mod(psi + psi2, M), pr = symmetric_mod(psi * psi2, M);
        out.cyclic_quadratic = IntPoly{pr, -s, BigInt(1)};
        degenerate = (s * s - 4 * pr == 0);
      }
      break;
    }
    if (degenerate) continue;
    return out;
  }
  throw Error("quintic resolvent: no usable Tschirnhaus shift");
}

namespace {

std::string decide_quintic(const QuinticResolvent& res, bool square) {
  if (!res.root) return square ? "A5" : "S5";
  if (!square) return "F20";
  const IntPoly& q = *res.cyclic_quadratic;
  BigInt disc = q[1] * q[1] - 4 * q[0];
  return is_perfect_square(disc) ? "C5" : "D5";
}

json quintic_json(const QuinticResolvent& res) {
  return json{{"kind", "sextic"},
              {"tschirnhaus", res.tschirnhaus},
              {"prime", res.prime},
              {"coefficients", poly_json(res.sextic)},
              {"integer_root", res.root ? json(to_string(*res.root)) : json(nullptr)},
              {"cyclic_quadratic", res.cyclic_quadratic ? poly_json(*res.cyclic_quadratic) : json(nullptr)}};
}

// ---------------------------------------------------------------------------
// Elimination helpers.

std::vector<const TransitiveGroupRecord*> filter_candidates(int n, bool square, const std::vector<int>& forced_blocks,
                                                            const std::set<CycleType>& observed) {
  std::vector<const TransitiveGroupRecord*> out;
  for (const auto* r : transitive_groups_of_degree(n)) {
    if (r->even != square) continue;
    bool ok = true;
    for (int b : forced_blocks) ok = ok && r->block_sizes.count(b) > 0;
    for (const auto& t : observed) ok = ok && r->cycle_types.count(t) > 0;
    if (ok) out.push_back(r);
  }
  return out;
}

// Log-likelihood of the observed tallies under each candidate's cycle-type
// distribution; picks the best match for naming a non-singleton set.
const TransitiveGroupRecord* most_likely(const std::vector<const TransitiveGroupRecord*>& cands,
                                         const std::vector<FrobeniusSample>& samples) {
  const TransitiveGroupRecord* best = nullptr;
  double best_score = 0;
  for (const auto* r : cands) {
    double score = 0;
    for (const auto& s : samples) {
      auto it = r->cycle_type_counts.find(s.type);
      score += std::log(static_cast<double>(it->second) / static_cast<double>(r->order));
    }
    if (best == nullptr || score > best_score + 1e-9) {
      best = r;
      best_score = score;
    }
  }
  return best;
}

bool has_window_prime(const CycleType& t, int n, int& q) {
  for (int part : t.parts()) {
    if (2 * part > n && part < n - 2 && is_prime(static_cast<std::uint64_t>(part))) {
      q = part;
      return true;
    }
  }
  return false;
}

// A cycle type with exactly one part equal to 2 and every other part odd:
// some odd power of the element is a transposition.
bool powers_to_transposition(const CycleType& t) {
  int twos = 0;
  for (int part : t.parts()) {
    if (part == 2) {
      ++twos;
    } else if (part % 2 == 0) {
      return false;
    }
  }
  return twos == 1;
}

GaloisIdentification cyclic_from_samples(const IntPoly& f, const std::vector<FrobeniusSample>& samples,
                                         std::uint64_t prime_bound, std::uint64_t min_samples) {
  const int n = f.degree();
  bool full_cycle = false;
  for (const auto& s : samples) {
    if (!s.type.is_uniform()) {
      auto id = make_id(f, "", CertaintyTag::Unknown);
      add(id, "non_uniform_cycle_type", json{{"prime", s.prime}, {"cycle_type", s.type.to_string()}});
      return id;
    }
    if (s.type.parts().size() == 1) full_cycle = true;
  }
  if (!full_cycle || samples.size() < min_samples) {
    auto id = make_id(f, "", CertaintyTag::Unknown);
    add(id, "samples", json{{"count", samples.size()}, {"prime_bound", prime_bound}, {"full_cycle_observed", full_cycle}});
    return id;
  }
  auto id = make_id(f, "C" + std::to_string(n), CertaintyTag::Heuristic);
  id.certainty.sample_count = samples.size();
  id.certainty.prime_bound = prime_bound;
  for (const auto& s : samples) {
    if (s.type.parts().size() == 1) {
      add(id, "full_cycle", json{{"prime", s.prime}, {"cycle_type", s.type.to_string()}});
      break;
    }
  }
  add(id, "samples", json{{"count", samples.size()}, {"prime_bound", prime_bound}, {"tally", tally_json(samples)}});
  return id;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public building blocks.

std::optional<CycleType> dedekind_cycle_type(const IntPoly& f, std::uint64_t p) {
  require(f.degree() >= 1, "cycle type of a constant");
  auto degs = fp::factor_degrees(f, p);
  if (degs.empty()) return std::nullopt;
  return CycleType(std::move(degs));
}

std::vector<FrobeniusSample> sample_cycle_types(const IntPoly& f, std::uint64_t prime_bound,
                                                const std::function<bool(const FrobeniusSample&)>& stop) {
  std::vector<FrobeniusSample> out;
  for (auto p : primes_up_to(prime_bound)) {
    auto t = dedekind_cycle_type(f, p);
    if (!t) continue;
    out.push_back({p, *t});
    if (stop && stop(out.back())) break;
  }
  return out;
}

bool disc_is_square(const RatPoly& f) {
  BigRat d = discriminant(f);
  require(d != 0, "discriminant vanishes: polynomial is not squarefree");
  return is_rational_square(d);
}

bool disc_is_square(const IntPoly& f) { return disc_is_square(to_rat(f)); }

RatPoly quartic_resolvent(const IntPoly& f) {
  require(f.degree() == 4, "resolvent cubic needs degree 4");
  const BigRat lc(f.leading());
  BigRat a = BigRat(f[3]) / lc, b = BigRat(f[2]) / lc, c = BigRat(f[1]) / lc, d = BigRat(f[0]) / lc;
  return RatPoly{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, BigRat(1)};
}

// ---------------------------------------------------------------------------
// Tiers.

GaloisIdentification exact_small_degree(const IntPoly& f_in) {
  const int n = f_in.degree();
  require(n >= 1 && n <= 5, "exact_small_degree handles degrees 1 to 5");
  IntPoly f = primitive_part(f_in);
  require(n == 1 || is_irreducible(f), "exact_small_degree needs an irreducible polynomial");
  if (n == 1) return make_id(f, "C1", CertaintyTag::Proven);
  if (n == 2) {
    auto id = make_id(f, "C2", CertaintyTag::Proven);
    add(id, "disc_square", disc_evidence(f));
    return id;
  }
  const bool square = disc_is_square(f);
  if (n == 3) {
    auto id = make_id(f, square ? "C3" : "S3", CertaintyTag::Proven);
    add(id, "disc_square", disc_evidence(f));
    return id;
  }
  if (n == 4) {
    auto dec = decide_quartic(f);
    auto id = make_id(f, dec.name, CertaintyTag::Proven);
    add(id, "disc_square", disc_evidence(f));
    add(id, "resolvent", dec.resolvent);
    if (dec.kappe_warren) add(id, "kappe_warren", *dec.kappe_warren);
    return id;
  }
  auto res = quintic_resolvent(f);
  auto id = make_id(f, decide_quintic(res, square), CertaintyTag::Proven);
  add(id, "disc_square", disc_evidence(f));
  add(id, "resolvent", quintic_json(res));
  return id;
}

GaloisIdentification eliminate_degree_le7(const IntPoly& f_in, std::uint64_t prime_bound) {
  const int n = f_in.degree();
  require(n >= 6 && n <= 7, "eliminate_degree_le7 handles degrees 6 and 7");
  IntPoly f = primitive_part(f_in);
  const bool square = disc_is_square(f);
  const auto blocks = block_sizes_forced(f);
  std::set<CycleType> observed;
  auto cands = filter_candidates(n, square, blocks, observed);
  auto samples = sample_cycle_types(f, prime_bound, [&](const FrobeniusSample& s) {
    require(!square || s.type.is_even(), "odd Frobenius cycle type with a square discriminant");
    if (observed.insert(s.type).second) cands = filter_candidates(n, square, blocks, observed);
    return cands.size() <= 1;
  });
  require(!cands.empty(), "no transitive group is consistent with the observed cycle types");
  GaloisIdentification id;
  if (cands.size() == 1) {
    id = make_id(f, cands[0]->name, CertaintyTag::Proven);
  } else {
    id = make_id(f, most_likely(cands, samples)->name, CertaintyTag::EliminatedToSet);
    for (const auto* c : cands) id.certainty.candidates.push_back(c->name);
  }
  add(id, "disc_square", disc_evidence(f));
  if (!blocks.empty()) add(id, "block_sizes", json(blocks));
  for (const auto& s : first_occurrences(samples)) add_frobenius(id, s);
  json names = json::array();
  for (const auto* c : cands) names.push_back(c->name);
  add(id, "elimination", json{{"candidates", names}});
  add(id, "samples", json{{"count", samples.size()}, {"prime_bound", prime_bound}, {"tally", tally_json(samples)}});
  add(id, "order_lower_bound", json{{"value", order_lower_bound(samples)}});
  return id;
}

namespace {

GaloisIdentification jordan_from_samples(const IntPoly& f, const std::vector<FrobeniusSample>& samples,
                                         std::uint64_t prime_bound, bool square) {
  const int n = f.degree();
  for (const auto& s : samples) {
    int q = 0;
    if (!has_window_prime(s.type, n, q)) continue;
    auto id = make_id(f, sym_name(n, square), CertaintyTag::Proven);
    add(id, "disc_square", disc_evidence(f));
    add(id, "jordan", json{{"prime", s.prime}, {"cycle_type", s.type.to_string()}, {"q", q}});
    add(id, "samples", json{{"count", samples.size()}, {"prime_bound", prime_bound}});
    return id;
  }
  auto id = make_id(f, "", CertaintyTag::Unknown);
  add(id, "disc_square", disc_evidence(f));
  add(id, "samples", json{{"count", samples.size()}, {"prime_bound", prime_bound}, {"tally", tally_json(samples)}});
  add(id, "order_lower_bound", json{{"value", order_lower_bound(samples)}});
  return id;
}

std::vector<FrobeniusSample> jordan_samples(const IntPoly& f, std::uint64_t prime_bound, bool square) {
  const int n = f.degree();
  return sample_cycle_types(f, prime_bound, [&](const FrobeniusSample& s) {
    require(!square || s.type.is_even(), "odd Frobenius cycle type with a square discriminant");
    int q = 0;
    return has_window_prime(s.type, n, q);
  });
}

}  // namespace

GaloisIdentification sn_an_certificate(const IntPoly& f_in, std::uint64_t prime_bound) {
  require(f_in.degree() >= 8, "sn_an_certificate handles degree 8 and above");
  IntPoly f = primitive_part(f_in);
  const bool square = disc_is_square(f);
  return jordan_from_samples(f, jordan_samples(f, prime_bound, square), prime_bound, square);
}

GaloisIdentification cyclic_heuristic(const IntPoly& f_in, std::uint64_t prime_bound, std::uint64_t min_samples) {
  require(f_in.degree() >= 1, "cyclic_heuristic of a constant");
  IntPoly f = primitive_part(f_in);
  auto samples = sample_cycle_types(f, prime_bound, [](const FrobeniusSample& s) { return !s.type.is_uniform(); });
  return cyclic_from_samples(f, samples, prime_bound, min_samples);
}

namespace {

GaloisIdentification classify_irreducible(const IntPoly& f, const GaloisConfig& config);

struct WreathAnalysis {
  WreathReport report;
  std::vector<FrobeniusSample> samples;
};

WreathAnalysis analyze_wreath(const IntPoly& f, const GaloisConfig& config) {
  WreathAnalysis out;
  auto& w = out.report;
  auto [shift, k] = exponent_structure(f);
  if (k < 2 || f.degree() - shift < 2 * k - 0 || (f.degree() - shift) / k < 1) {
    w.report = "no x^k substitution structure";
    return out;
  }
  w.detected = true;
  w.shift = shift;
  w.block_size = k;
  w.inner = deflate(f, shift, k);
  w.block_group = block_group_name(k);
  if (w.inner.degree() >= 1) {
    GaloisConfig inner_cfg = config;
    w.inner_group = classify(w.inner, inner_cfg);
  }
  if (shift == 0 && f[0] != 0 && is_squarefree(f)) {
    out.samples = sample_cycle_types(f, config.prime_bound);
    w.order_lower_bound = order_lower_bound(out.samples);
    w.sample_count = out.samples.size();
  }
  std::string inner_name = (w.inner_group && !w.inner_group->group_name.empty()) ? w.inner_group->group_name : "G(g)";
  w.report = "group embeds in " + w.block_group + " wr " + inner_name + " (" + std::to_string(k) + "-point blocks)";
  if (shift > 0) w.report = "x^" + std::to_string(shift) + " times g(x^" + std::to_string(k) + "); " + w.report;
  return out;
}

json wreath_json(const WreathReport& w) {
  json j{{"detected", w.detected},
         {"shift", w.shift},
         {"block_size", w.block_size},
         {"block_group", w.block_group},
         {"order_lower_bound", w.order_lower_bound},
         {"sample_count", w.sample_count},
         {"report", w.report}};
  if (w.detected) j["inner"] = poly_json(w.inner);
  if (w.inner_group) j["inner_group"] = to_json(*w.inner_group);
  return j;
}

// f = g(x^2) irreducible. If G(g) is proven and some Frobenius element powers
// to a single swap inside a block, the kernel onto the block action is all of
// C2^t and G = C2 wr G(g).
GaloisIdentification wreath_verdict(const IntPoly& f, const GaloisConfig& config) {
  auto analysis = analyze_wreath(f, config);
  const auto& w = analysis.report;
  const int n = f.degree();
  GaloisIdentification id;
  const bool inner_proven = w.inner_group && w.inner_group->certainty.tag == CertaintyTag::Proven;
  const std::string inner_name = (w.inner_group && !w.inner_group->group_name.empty()) ? w.inner_group->group_name : "G(g)";
  if (w.block_size == 2 && w.shift == 0) {
    const FrobeniusSample* swap = nullptr;
    for (const auto& s : analysis.samples) {
      if (powers_to_transposition(s.type)) {
        swap = &s;
        break;
      }
    }
    std::string name = canonical_group_name("C2wr" + inner_name);
    if (swap && inner_proven) {
      id = make_id(f, name, CertaintyTag::Proven);
      add(id, "block_transposition", json{{"prime", swap->prime}, {"cycle_type", swap->type.to_string()}});
    } else {
      id = make_id(f, name, CertaintyTag::Heuristic);
    }
  } else {
    id = make_id(f, "subgroup of " + w.block_group + "wr" + inner_name, CertaintyTag::Heuristic);
  }
  if (id.certainty.tag == CertaintyTag::Heuristic) {
    id.certainty.sample_count = analysis.samples.size();
    id.certainty.prime_bound = config.prime_bound;
  }
  add(id, "wreath", wreath_json(w));
  add(id, "samples", json{{"count", analysis.samples.size()}, {"prime_bound", config.prime_bound}, {"tally", tally_json(analysis.samples)}});
  add(id, "order_lower_bound", json{{"value", w.order_lower_bound}});
  if (auto order = group_order(id.group_name); order && *order % w.order_lower_bound != 0) {
    throw Error("observed element orders contradict " + id.group_name);
  }
  (void)n;
  return id;
}

GaloisIdentification classify_irreducible(const IntPoly& f, const GaloisConfig& config) {
  const int n = f.degree();
  if (n <= 5) return exact_small_degree(f);
  if (n <= 7) {
    auto elim = eliminate_degree_le7(f, config.prime_bound);
    if (elim.certainty.tag == CertaintyTag::Proven) return elim;
    auto [shift, k] = exponent_structure(f);
    if (k == 2 && shift == 0) {
      auto w = wreath_verdict(f, config);
      if (w.certainty.tag == CertaintyTag::Proven) return w;
    }
    const auto& cands = elim.certainty.candidates;
    const std::string cyc = "C" + std::to_string(n);
    if (std::find(cands.begin(), cands.end(), cyc) != cands.end()) {
      auto h = cyclic_heuristic(f, config.prime_bound, config.min_heuristic_samples);
      if (h.certainty.tag == CertaintyTag::Heuristic) {
        for (const auto& e : elim.evidence) {
          if (e.kind == "elimination" || e.kind == "disc_square") h.evidence.push_back(e);
        }
        return h;
      }
    }
    return elim;
  }
  auto [shift, k] = exponent_structure(f);
  if (k >= 2 && shift == 0) return wreath_verdict(f, config);
  const bool square = disc_is_square(f);
  auto samples = jordan_samples(f, config.prime_bound, square);
  auto jordan = jordan_from_samples(f, samples, config.prime_bound, square);
  if (jordan.certainty.tag == CertaintyTag::Proven) return jordan;
  auto cyc = cyclic_from_samples(f, samples, config.prime_bound, config.min_heuristic_samples);
  if (cyc.certainty.tag == CertaintyTag::Heuristic) return cyc;
  return jordan;
}

}  // namespace

WreathReport wreath_structure(const IntPoly& f, std::uint64_t prime_bound) {
  require(f.degree() >= 1, "wreath_structure of a constant");
  GaloisConfig cfg;
  cfg.prime_bound = prime_bound;
  return analyze_wreath(f, cfg).report;
}

GaloisIdentification classify(const IntPoly& f, const GaloisConfig& config) {
  require(f.degree() >= 1, "Galois group of a constant");
  auto fac = factor_over_integers(f);
  const IntPoly& h = fac.factors.back().factor;
  GaloisIdentification id = classify_irreducible(h, config);
  std::vector<Evidence> pre;
  if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1) {
    pre.push_back({"irreducible", json{{"method", "factorization"}}});
  } else {
    json factors = json::array();
    for (const auto& e : fac.factors) factors.push_back(json{{"coefficients", poly_json(e.factor)}, {"multiplicity", e.multiplicity}});
    pre.push_back({"reducible", json{{"factors", factors}, {"chosen", poly_json(h)}}});
    pre.push_back({"irreducible", json{{"method", "factorization"}}});
  }
  id.evidence.insert(id.evidence.begin(), pre.begin(), pre.end());
  return id;
}

std::vector<GaloisIdentification> classify_all_factors(const IntPoly& f, const GaloisConfig& config) {
  require(f.degree() >= 1, "Galois group of a constant");
  std::vector<GaloisIdentification> out;
  for (const auto& e : factor_over_integers(f).factors) {
    auto id = classify_irreducible(e.factor, config);
    id.evidence.insert(id.evidence.begin(), Evidence{"irreducible", json{{"method", "factorization"}}});
    out.push_back(std::move(id));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Re-validation.

std::string verify_identification(const GaloisIdentification& id) {
  const IntPoly& f = id.polynomial;
  const int n = f.degree();
  if (n != id.degree) return "degree mismatch";
  if (n < 1) return "constant polynomial";
  try {
    std::set<CycleType> observed;
    std::optional<bool> square;
    for (const auto& e : id.evidence) {
      const json& d = e.data;
      if (e.kind == "irreducible") {
        if (!is_irreducible(f)) return "polynomial is reducible";
      } else if (e.kind == "disc_square") {
        bool s = is_rational_square(BigRat(discriminant(f)));
        if (s != d.at("value").get<bool>()) return "discriminant square test differs";
        if (to_string(discriminant(f)) != d.at("discriminant").get<std::string>()) return "discriminant differs";
        square = s;
      } else if (e.kind == "frobenius" || e.kind == "block_transposition" || e.kind == "full_cycle") {
        auto p = d.at("prime").get<std::uint64_t>();
        auto t = dedekind_cycle_type(f, p);
        if (!t || t->to_string() != d.at("cycle_type").get<std::string>()) return "cycle type at p=" + std::to_string(p) + " differs";
        observed.insert(*t);
        if (e.kind == "block_transposition" && !powers_to_transposition(*t)) return "block transposition type invalid";
      } else if (e.kind == "jordan") {
        auto p = d.at("prime").get<std::uint64_t>();
        int q = d.at("q").get<int>();
        auto t = dedekind_cycle_type(f, p);
        if (!t || t->to_string() != d.at("cycle_type").get<std::string>()) return "Jordan cycle type differs";
        int q2 = 0;
        if (!has_window_prime(*t, n, q2) || !t->contains(q) || !is_prime(static_cast<std::uint64_t>(q)) || 2 * q <= n || q >= n - 2)
          return "Jordan window condition fails";
      } else if (e.kind == "resolvent") {
        const std::string kind = d.at("kind").get<std::string>();
        if (kind == "cubic") {
          auto dec = decide_quartic(f);
          if (dec.resolvent != d) return "resolvent cubic differs";
        } else if (kind == "sextic") {
          auto res = quintic_resolvent(f, d.at("tschirnhaus").get<int>());
          if (quintic_json(res) != d) return "sextic resolvent differs";
          if (discriminant(res.sextic) == 0) return "sextic resolvent not squarefree";
        }
      } else if (e.kind == "kappe_warren") {
        auto dec = decide_quartic(f);
        if (!dec.kappe_warren || *dec.kappe_warren != d) return "quadratic splitting test differs";
      }
    }
    if (id.certainty.tag != CertaintyTag::Proven) return "";
    // The recorded facts must force the verdict.
    const bool sq = square.value_or(n == 1);
    if (n == 1) return id.group_name == "C1" ? "" : "degree-1 verdict must be C1";
    if (n == 2) return id.group_name == "C2" ? "" : "degree-2 verdict must be C2";
    if (n == 3) return id.group_name == (sq ? "C3" : "S3") ? "" : "cubic verdict inconsistent with discriminant";
    if (n == 4) return decide_quartic(f).name == id.group_name ? "" : "quartic verdict inconsistent with resolvent";
    if (n == 5) {
      const auto* r = id.find("resolvent");
      if (!r) return "missing resolvent";
      auto res = quintic_resolvent(f, r->data.at("tschirnhaus").get<int>());
      return decide_quintic(res, sq) == id.group_name ? "" : "quintic verdict inconsistent with resolvent";
    }
    if (id.find("block_transposition")) {
      const auto* w = id.find("wreath");
      if (!w) return "missing wreath evidence";
      auto inner = galois_from_json(w->data.at("inner_group"));
      if (inner.certainty.tag != CertaintyTag::Proven) return "inner group not proven";
      if (auto msg = verify_identification(inner); !msg.empty()) return "inner group: " + msg;
      if (int_poly_from_json(w->data.at("inner")) != inner.polynomial) return "inner polynomial mismatch";
      auto [shift, k] = exponent_structure(f);
      if (shift != 0 || k % 2 != 0 || inflate(inner.polynomial, 2) != primitive_part(f)) return "not a polynomial in x^2";
      return canonical_group_name("C2wr" + inner.group_name) == id.group_name ? "" : "wreath name mismatch";
    }
    if (id.find("jordan")) return id.group_name == sym_name(n, sq) ? "" : "Jordan verdict inconsistent with discriminant";
    if (id.find("elimination")) {
      auto cands = filter_candidates(n, sq, block_sizes_forced(f), observed);
      if (cands.size() != 1 || cands[0]->name != id.group_name) return "elimination does not single out the verdict";
      return "";
    }
    return "no certificate for a Proven verdict";
  } catch (const std::exception& ex) {
    return std::string("verification error: ") + ex.what();
  }
}

// ---------------------------------------------------------------------------
// Names and JSON.

std::string canonical_group_name(std::string_view raw) {
  std::string s(raw);
  for (const char* junk : {"\\mathcal", "\\mathrm", "\\operatorname", "\\"}) {
    for (auto pos = s.find(junk); pos != std::string::npos; pos = s.find(junk)) s.erase(pos, std::strlen(junk));
  }
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '{' || c == '}' || c == '_' || c == '$' || c == ' '; }), s.end());
  std::smatch m;
  if (std::regex_match(s, m, std::regex(R"(B(\d+))"))) s = "C2wrS" + m[1].str();
  if (std::regex_match(s, m, std::regex(R"((\d+)T(\d+))"))) {
    int n = std::stoi(m[1].str()), t = std::stoi(m[2].str());
    if (n == 1 && t == 1) return "C1";
    for (const auto* r : transitive_groups_of_degree(n)) {
      if (r->t == t) return r->name;
    }
    return s;
  }
  static const std::map<std::string, std::string> aliases = {
      {"S1", "C1"}, {"A1", "C1"}, {"A2", "C1"}, {"S2", "C2"}, {"A3", "C3"}, {"D3", "S3"}, {"D2", "V4"},
      {"C2xC2", "V4"}, {"C2wrS1", "C2"}, {"C2wrS2", "D4"}, {"C2wrC2", "D4"}, {"C2wrC1", "C2"}, {"Z2", "C2"}};
  if (auto it = aliases.find(s); it != aliases.end()) return it->second;
  return s;
}

std::optional<BigInt> group_order(std::string_view raw) {
  std::string s = canonical_group_name(raw);
  std::smatch m;
  if (s == "C1") return BigInt(1);
  if (std::regex_match(s, m, std::regex(R"(S(\d+))"))) return factorial(std::stoul(m[1].str()));
  if (std::regex_match(s, m, std::regex(R"(A(\d+))"))) return factorial(std::stoul(m[1].str())) / 2;
  if (std::regex_match(s, m, std::regex(R"(C2wrS(\d+))"))) {
    unsigned long t = std::stoul(m[1].str());
    return ipow(BigInt(2), t) * factorial(t);
  }
  for (const auto& r : transitive_groups()) {
    if (r.name == s) return BigInt(static_cast<unsigned long>(r.order));
  }
  if (std::regex_match(s, m, std::regex(R"(C(\d+))"))) return BigInt(m[1].str());
  if (std::regex_match(s, m, std::regex(R"(D(\d+))"))) return 2 * BigInt(m[1].str());
  return std::nullopt;
}

json to_json(const GaloisIdentification& id) {
  json c{{"tag", to_string(id.certainty.tag)}};
  if (id.certainty.tag == CertaintyTag::EliminatedToSet) c["candidates"] = id.certainty.candidates;
  if (id.certainty.tag == CertaintyTag::Heuristic) {
    c["sample_count"] = id.certainty.sample_count;
    c["prime_bound"] = id.certainty.prime_bound;
  }
  json ev = json::array();
  for (const auto& e : id.evidence) ev.push_back(json{{"kind", e.kind}, {"data", e.data}});
  return json{{"schema", "galtrunc.galois/1"},
              {"group_name", id.group_name},
              {"t_notation", id.t_notation ? json(*id.t_notation) : json(nullptr)},
              {"certainty", c},
              {"degree", id.degree},
              {"polynomial", poly_json(id.polynomial)},
              {"evidence", ev}};
}

GaloisIdentification galois_from_json(const json& j) {
  GaloisIdentification id;
  id.group_name = j.at("group_name").get<std::string>();
  if (!j.at("t_notation").is_null()) id.t_notation = j.at("t_notation").get<std::string>();
  const json& c = j.at("certainty");
  id.certainty.tag = parse_certainty_tag(c.at("tag").get<std::string>());
  if (c.contains("candidates")) id.certainty.candidates = c.at("candidates").get<std::vector<std::string>>();
  if (c.contains("sample_count")) id.certainty.sample_count = c.at("sample_count").get<std::uint64_t>();
  if (c.contains("prime_bound")) id.certainty.prime_bound = c.at("prime_bound").get<std::uint64_t>();
  id.degree = j.at("degree").get<int>();
  id.polynomial = int_poly_from_json(j.at("polynomial"));
  for (const auto& e : j.at("evidence")) id.evidence.push_back({e.at("kind").get<std::string>(), e.at("data")});
  return id;
}

}  // namespace galtrunc
