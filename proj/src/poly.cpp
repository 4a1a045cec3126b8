#include "galtrunc/poly.hpp"

#include <cctype>

#include "json.hpp"

namespace galtrunc {

RatPoly to_rat(const IntPoly& a) {
  std::vector<BigRat> c;
  c.reserve(a.size());
  for (const auto& v : a.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

BigInt content(const IntPoly& a) {
  BigInt g = 0;
  for (const auto& v : a.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ContentPrimitive content_primitive(const IntPoly& a) {
  require(!a.is_zero(), "content of the zero polynomial");
  BigInt g = content(a);
  int sign = sgn(a.leading()) < 0 ? -1 : 1;
  std::vector<BigInt> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : c) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (sign < 0) v = -v;
  }
  return {g, sign, IntPoly(std::move(c))};
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  return content_primitive(a).primitive;
}

ScaledIntPoly primitive_integer(const RatPoly& a) {
  require(!a.is_zero(), "primitive part of the zero polynomial");
  BigInt den = 1;
  for (const auto& v : a.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> c;
  c.reserve(a.size());
  for (const auto& v : a.coefficients()) c.emplace_back(v.get_num() * (den / v.get_den()));
  auto cp = content_primitive(IntPoly(std::move(c)));
  BigRat scale(cp.content * cp.sign, den);
  scale.canonicalize();
  return {scale, std::move(cp.primitive)};
}

std::optional<IntPoly> to_int_exact(const RatPoly& a) {
  std::vector<BigInt> c;
  c.reserve(a.size());
  for (const auto& v : a.coefficients()) {
    if (v.get_den() != 1) return std::nullopt;
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

RatDivRem divrem(const RatPoly& a, const RatPoly& b) {
  require(!b.is_zero(), "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<BigRat> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const BigRat inv_lc = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    BigRat t = r[k] * inv_lc;
    q[k - db] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    BigInt t = r[k];
    for (int i = 0; i < k; ++i) r[i] *= lb;
    r[k] = 0;
    if (t != 0) {
      for (int j = 0; j < db; ++j) r[k - db + j] -= t * b[j];
    }
    --e;
  }
  r.resize(static_cast<std::size_t>(db));
  IntPoly out(std::move(r));
  if (e > 0) out = out * ipow(lb, static_cast<unsigned long>(e));
  return out;
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "exact division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  const BigInt& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (1 / BigRat(x.leading()));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(x);
}

bool is_squarefree(const IntPoly& a) {
  if (a.degree() < 1) return true;
  return gcd(a, derivative(a)).degree() == 0;
}

BigInt resultant(const IntPoly& a_in, const IntPoly& b_in) {
  require(!a_in.is_zero() && !b_in.is_zero(), "resultant with a zero polynomial");
  if (a_in.degree() == 0 && b_in.degree() == 0) return 1;
  if (b_in.degree() == 0) return ipow(b_in[0], static_cast<unsigned long>(a_in.degree()));
  if (a_in.degree() == 0) return ipow(a_in[0], static_cast<unsigned long>(b_in.degree()));

  // Subresultant algorithm on the primitive parts; contents come back as t.
  BigInt ca = content(a_in), cb = content(b_in);
  IntPoly a = a_in, b = b_in;
  {
    std::vector<BigInt> va(a.coefficients().begin(), a.coefficients().end());
    for (auto& v : va) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ca.get_mpz_t());
    a = IntPoly(std::move(va));
    std::vector<BigInt> vb(b.coefficients().begin(), b.coefficients().end());
    for (auto& v : vb) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cb.get_mpz_t());
    b = IntPoly(std::move(vb));
  }
  BigInt t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  BigInt g = 1, h = 1;
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    BigInt div = g * ipow(h, static_cast<unsigned long>(delta));
    std::vector<BigInt> vr(r.coefficients().begin(), r.coefficients().end());
    for (auto& v : vr) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
    b = IntPoly(std::move(vr));
    g = a.leading();
    // h <- g^delta / h^(delta-1), exact.
    BigInt num = ipow(g, static_cast<unsigned long>(delta));
    BigInt den = ipow(h, static_cast<unsigned long>(delta - 1));
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  if (b.is_zero()) return 0;
  // b is a nonzero constant: h <- lc(b)^deg(a) / h^(deg(a)-1).
  const auto da = static_cast<unsigned long>(a.degree());
  BigInt num = ipow(b.leading(), da);
  BigInt den = ipow(h, da - 1);
  BigInt fin;
  mpz_divexact(fin.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * fin;
}

BigRat resultant(const RatPoly& a, const RatPoly& b) {
  require(!a.is_zero() && !b.is_zero(), "resultant with a zero polynomial");
  auto pa = primitive_integer(a);
  auto pb = primitive_integer(b);
  BigRat r(resultant(pa.primitive, pb.primitive));
  BigRat fa, fb;
  mpz_pow_ui(fa.get_num_mpz_t(), pa.scale.get_num_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(fa.get_den_mpz_t(), pa.scale.get_den_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(fb.get_num_mpz_t(), pb.scale.get_num_mpz_t(), static_cast<unsigned long>(a.degree()));
  mpz_pow_ui(fb.get_den_mpz_t(), pb.scale.get_den_mpz_t(), static_cast<unsigned long>(a.degree()));
  fa.canonicalize();
  fb.canonicalize();
  return r * fa * fb;
}

BigInt discriminant(const IntPoly& a) {
  require(a.degree() >= 1, "discriminant needs degree >= 1");
  const long n = a.degree();
  if (n == 1) return 1;
  BigInt res = resultant(a, derivative(a));
  BigInt q;
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), a.leading().get_mpz_t());
  return ((n * (n - 1) / 2) % 2 == 0) ? q : BigInt(-q);
}

BigRat discriminant(const RatPoly& a) {
  require(a.degree() >= 1, "discriminant needs degree >= 1");
  auto pa = primitive_integer(a);
  const auto n = static_cast<unsigned long>(a.degree());
  BigRat f;
  mpz_pow_ui(f.get_num_mpz_t(), pa.scale.get_num_mpz_t(), 2 * n - 2);
  mpz_pow_ui(f.get_den_mpz_t(), pa.scale.get_den_mpz_t(), 2 * n - 2);
  f.canonicalize();
  return BigRat(discriminant(pa.primitive)) * f;
}

// ---------------------------------------------------------------------------
// Text formats.

namespace {

template <class T>
std::string format_poly(const Poly<T>& a, char var) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = a.degree(); k >= 0; --k) {
    T c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    T mag = neg ? T(-c) : c;
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  RatPoly parse() {
    skip();
    require(pos_ < s_.size(), "empty polynomial text");
    RatPoly r = expr();
    if (pos_ < s_.size()) fail("unexpected character");
    return r;
  }

 private:
  // expr := ['+'|'-'] term (('+'|'-') term)*
  // term := power ((['*'] power) | ('/' power))*   juxtaposition multiplies;
  //         divisors must be nonzero constants
  // power := atom [('^' | '**') digits]
  // atom := integer ['/' integer] | variable | '(' expr ')'
  RatPoly expr() {
    RatPoly acc;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        return acc;
      }
      first = false;
      RatPoly t = term();
      acc = (sign < 0) ? acc - t : acc + t;
    }
  }

  RatPoly term() {
    RatPoly acc = power();
    for (;;) {
      skip();
      if (peek() == '*' && !is_double_star()) {
        ++pos_;
        skip();
        acc *= power();
      } else if (peek() == '/') {
        ++pos_;
        skip();
        RatPoly d = power();
        if (d.degree() != 0) fail("division by a non-constant");
        acc = acc * BigRat(BigRat(1) / d[0]);
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(') {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RatPoly power() {
    RatPoly base = atom();
    skip();
    if (peek() == '^' || is_double_star()) {
      pos_ += (peek() == '^') ? 1 : 2;
      skip();
      std::string e = digits();
      if (e.empty()) fail("missing exponent");
      if (e.size() > 6) fail("exponent too large");
      int k = std::stoi(e);
      RatPoly r = RatPoly::constant(BigRat(1));
      for (int i = 0; i < k; ++i) r *= base;
      return r;
    }
    return base;
  }

  RatPoly atom() {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::size_t save = pos_;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        return RatPoly::constant(parse_rational(num + "/" + den));
      }
      pos_ = save;
      return RatPoly::constant(BigRat(BigInt(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (var_ == '\0') var_ = c;
      if (c != var_) fail("mixed variable names");
      ++pos_;
      return RatPoly::x();
    }
    if (c == '(') {
      ++pos_;
      RatPoly r = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    fail("expected a coefficient, the variable or '('");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool is_double_star() const { return peek() == '*' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  char var_ = '\0';
};

}  // namespace

std::string to_string(const RatPoly& a, char var) { return format_poly(a, var); }
std::string to_string(const IntPoly& a, char var) { return format_poly(a, var); }

RatPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

IntPoly parse_int_poly(std::string_view text) {
  auto p = to_int_exact(parse_any_poly(text));
  require(p.has_value(), "polynomial has non-integer coefficients");
  return *p;
}

std::vector<std::string> coefficient_strings(const RatPoly& a) {
  std::vector<std::string> out;
  for (const auto& v : a.coefficients()) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> coefficient_strings(const IntPoly& a) {
  std::vector<std::string> out;
  for (const auto& v : a.coefficients()) out.push_back(to_string(v));
  return out;
}

std::string to_json_text(const RatPoly& a) { return nlohmann::json(coefficient_strings(a)).dump(); }
std::string to_json_text(const IntPoly& a) { return nlohmann::json(coefficient_strings(a)).dump(); }

RatPoly poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigRat> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return RatPoly(std::move(c));
}

RatPoly parse_any_poly(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("malformed coefficient array: ") + e.what());
    }
    require(j.is_array(), "coefficient array expected");
    std::vector<std::string> coeffs;
    for (const auto& v : j) {
      if (v.is_string()) {
        coeffs.push_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        coeffs.push_back(v.dump());
      } else {
        throw Error("coefficients must be decimal strings or integers");
      }
    }
    return poly_from_strings(coeffs);
  }
  return parse_poly(text);
}

}  // namespace galtrunc
