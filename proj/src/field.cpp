#include "chevelim/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

namespace chevelim {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

constexpr u64 kPrimeCap = (u64(1) << 63);  // moduli and cardinalities stay below 2^63
constexpr unsigned kMaxDegree = 62;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// --- polynomial helpers over GF(p), used only for modulus validation ---

using Poly = std::vector<u64>;  // low degree first, no trailing zeros

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly w(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) w[i + j] = (w[i + j] + u128(a[i]) * b[j]) % p;
  }
  // reduce by monic f
  const size_t n = f.size() - 1;
  for (size_t i = w.size(); i-- > n;) {
    u64 c = w[i];
    if (!c) continue;
    w[i] = 0;
    for (size_t j = 0; j < n; ++j) w[i - n + j] = (w[i - n + j] + u128(c) * (p - f[j] % p) % p) % p;
  }
  w.resize(n);
  poly_trim(w);
  return w;
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
  // b monic after scaling
  Poly g = b;
  u64 lead = g.back();
  if (lead != 1) {
    u64 li = powmod(lead, p - 2, p);
    for (auto& c : g) c = mulmod(c, li, p);
  }
  while (a.size() >= g.size()) {
    u64 c = a.back();
    if (c) {
      size_t off = a.size() - g.size();
      for (size_t j = 0; j < g.size(); ++j) a[off + j] = (a[off + j] + u128(c) * (p - g[j] % p) % p) % p;
    }
    a.pop_back();
    poly_trim(a);
    if (a.size() < g.size()) break;
  }
  poly_trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f, by iterated Frobenius.
Poly frobenius_power(unsigned k, const Poly& f, u64 p) {
  Poly g{0, 1};  // x
  for (unsigned i = 0; i < k; ++i) g = poly_powmod(g, p, f, p);
  return g;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool poly_irreducible(const Poly& f, u64 p) {
  const unsigned n = unsigned(f.size() - 1);
  if (n == 0) return false;
  if (n == 1) return true;
  // Rabin test: x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for prime r | n.
  Poly x{0, 1};
  if (frobenius_power(n, f, p) != x) return false;
  for (unsigned r : prime_factors(n)) {
    Poly d = frobenius_power(n / r, f, p);
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    poly_trim(d);
    if (poly_gcd(f, d, p).size() != 1) return false;
  }
  return true;
}

u64 checked_pow(u64 p, unsigned n) {
  u128 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q >= kPrimeCap) fail(Errc::Unsupported, "field cardinality must stay below 2^63");
  }
  return u64(q);
}

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Rational make_rat(BigInt num, BigInt den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (num == 0) return Rational{BigInt(0), BigInt(1)};
  BigInt g = gcd_big(num, den);
  return Rational{num / g, den / g};
}

BigInt parse_bigint(std::string_view s) {
  if (s.empty()) fail(Errc::ParseError, "empty integer");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(Errc::ParseError, "bad integer '" + std::string(s) + "'");
  for (size_t k = i; k < s.size(); ++k)
    if (!isdigit(static_cast<unsigned char>(s[k]))) fail(Errc::ParseError, "bad integer '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

u64 parse_u64(std::string_view s) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(Errc::ParseError, "bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % d == 0) return n == d;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> find_irreducible(u64 p, unsigned n) {
  if (p >= kPrimeCap || !is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (n < 2 || n > kMaxDegree) fail(Errc::DegreeMismatch, "extension degree must be in [2, 62]");
  checked_pow(p, n);
  // Scan coefficient tuples counting up with the x^(n-1) coefficient most
  // significant; the first irreducible hit is the lex-smallest one.
  for (u64 k = 0;; ++k) {
    Poly f(n + 1, 0);
    f[n] = 1;
    u64 v = k;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = v % p;
      v /= p;
    }
    if (v != 0) fail(Errc::InternalInvariantViolation, "irreducible scan exhausted");
    if (poly_irreducible(f, p)) return f;
  }
}

FieldSpec FieldSpec::prime(u64 p) {
  FieldSpec s;
  s.kind = FieldKind::Prime;
  s.p = p;
  s.n = 1;
  return s;
}

FieldSpec FieldSpec::extension(u64 p, unsigned n, std::vector<u64> modulus) {
  FieldSpec s;
  s.kind = FieldKind::Extension;
  s.p = p;
  s.n = n;
  s.modulus = std::move(modulus);
  return s;
}

FieldSpec FieldSpec::rationals() {
  FieldSpec s;
  s.kind = FieldKind::Rationals;
  return s;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(char(tolower(static_cast<unsigned char>(c))));
  if (t == "q") return rationals();
  if (t.size() < 5 || t.substr(0, 3) != "gf(" || t.back() != ')')
    fail(Errc::ParseError, "bad field spec '" + std::string(text) + "'");
  std::string_view body(t.data() + 3, t.size() - 4);
  std::string_view head = body;
  std::vector<u64> modulus;
  if (auto semi = body.find(';'); semi != std::string_view::npos) {
    head = body.substr(0, semi);
    for (auto tok : split(body.substr(semi + 1), ',')) modulus.push_back(parse_u64(tok));
  }
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    u64 p = parse_u64(head.substr(0, caret));
    u64 n = parse_u64(head.substr(caret + 1));
    if (n < 2) fail(Errc::ParseError, "extension degree must be >= 2");
    return extension(p, unsigned(n), std::move(modulus));
  }
  if (!modulus.empty()) fail(Errc::ParseError, "modulus given for a prime field");
  return prime(parse_u64(head));
}

std::string FieldSpec::str() const {
  switch (kind) {
    case FieldKind::Prime:
      return "gf(" + std::to_string(p) + ")";
    case FieldKind::Extension:
      return "gf(" + std::to_string(p) + "^" + std::to_string(n) + ")";
    case FieldKind::Rationals:
      return "q";
  }
  return "?";
}

FieldCtx::FieldCtx(const FieldSpec& spec) : spec_(spec) {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      spec_.p = 0;
      spec_.n = 1;
      spec_.modulus.clear();
      q_ = 0;
      return;
    case FieldKind::Prime:
      if (spec_.p >= kPrimeCap || !is_prime_u64(spec_.p))
        fail(Errc::NotPrime, std::to_string(spec_.p) + " is not a supported prime");
      spec_.n = 1;
      spec_.modulus.clear();
      q_ = spec_.p;
      return;
    case FieldKind::Extension: {
      if (!is_prime_u64(spec_.p)) fail(Errc::NotPrime, std::to_string(spec_.p) + " is not prime");
      if (spec_.n < 2 || spec_.n > kMaxDegree) fail(Errc::DegreeMismatch, "extension degree must be in [2, 62]");
      q_ = checked_pow(spec_.p, spec_.n);
      if (spec_.modulus.empty()) {
        spec_.modulus = find_irreducible(spec_.p, spec_.n);
      } else {
        if (spec_.modulus.size() != spec_.n + 1)
          fail(Errc::DegreeMismatch, "modulus must list n+1 coefficients");
        for (auto& c : spec_.modulus) c %= spec_.p;
        if (spec_.modulus.back() != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
        if (!poly_irreducible(spec_.modulus, spec_.p))
          fail(Errc::ReducibleModulus, "modulus is reducible over gf(" + std::to_string(spec_.p) + ")");
      }
      return;
    }
  }
}

bool FieldCtx::same(const FieldCtx& o) const {
  return spec_.kind == o.spec_.kind && spec_.p == o.spec_.p && spec_.n == o.spec_.n &&
         spec_.modulus == o.spec_.modulus;
}

u64 FieldCtx::padd(u64 a, u64 b) const {
  u64 s = a + b;
  if (s >= spec_.p || s < a) s -= spec_.p;
  return s;
}

u64 FieldCtx::psub(u64 a, u64 b) const { return b <= a ? a - b : a + (spec_.p - b); }

u64 FieldCtx::pmul(u64 a, u64 b) const { return mulmod(a, b, spec_.p); }

u64 FieldCtx::pinv(u64 a) const {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  return powmod(a, spec_.p - 2, spec_.p);
}

void FieldCtx::unpack(u64 v, u64* digits) const {
  for (unsigned i = 0; i < spec_.n; ++i) {
    digits[i] = v % spec_.p;
    v /= spec_.p;
  }
}

u64 FieldCtx::pack(const u64* digits) const {
  u64 v = 0;
  for (unsigned i = spec_.n; i-- > 0;) v = v * spec_.p + digits[i];
  return v;
}

u64 FieldCtx::ext_add(u64 a, u64 b) const {
  std::array<u64, kMaxDegree> da{}, db{};
  unpack(a, da.data());
  unpack(b, db.data());
  for (unsigned i = 0; i < spec_.n; ++i) da[i] = padd(da[i], db[i]);
  return pack(da.data());
}

u64 FieldCtx::ext_sub(u64 a, u64 b) const {
  std::array<u64, kMaxDegree> da{}, db{};
  unpack(a, da.data());
  unpack(b, db.data());
  for (unsigned i = 0; i < spec_.n; ++i) da[i] = psub(da[i], db[i]);
  return pack(da.data());
}

u64 FieldCtx::ext_mul(u64 a, u64 b) const {
  const unsigned n = spec_.n;
  const u64 p = spec_.p;
  std::array<u64, kMaxDegree> da{}, db{};
  unpack(a, da.data());
  unpack(b, db.data());
  std::array<u64, 2 * kMaxDegree> w{};
  for (unsigned i = 0; i < n; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < n; ++j) w[i + j] = u64((u128(da[i]) * db[j] + w[i + j]) % p);
  }
  const auto& f = spec_.modulus;
  for (unsigned i = 2 * n - 1; i-- > n;) {
    u64 c = w[i];
    if (!c) continue;
    w[i] = 0;
    for (unsigned j = 0; j < n; ++j) w[i - n + j] = u64((w[i - n + j] + u128(c) * (p - f[j])) % p);
  }
  return pack(w.data());
}

u64 FieldCtx::ext_pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = ext_mul(r, a);
    a = ext_mul(a, a);
    e >>= 1;
  }
  return r;
}

Fel FieldCtx::zero() const { return finite() ? Fel::finite(0) : Fel::rational(Rational{}); }

Fel FieldCtx::one() const {
  return finite() ? Fel::finite(1) : Fel::rational(Rational{BigInt(1), BigInt(1)});
}

Fel FieldCtx::from_int(long long v) const {
  if (!finite()) return Fel::rational(make_rat(BigInt(v), BigInt(1)));
  long long m = v % (long long)spec_.p;
  if (m < 0) m += (long long)spec_.p;
  return Fel::finite(u64(m));  // embeds as a constant polynomial in extensions
}

Fel FieldCtx::from_index(u64 idx) const {
  if (!finite()) fail(Errc::Unsupported, "from_index needs a finite field");
  if (idx >= q_) fail(Errc::IndexOutOfRange, "element index out of range");
  return Fel::finite(idx);
}

bool FieldCtx::is_zero(const Fel& a) const {
  return finite() ? a.u() == 0 : a.rat().num == 0;
}

Fel FieldCtx::add(const Fel& a, const Fel& b) const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return Fel::finite(padd(a.u(), b.u()));
    case FieldKind::Extension:
      return Fel::finite(ext_add(a.u(), b.u()));
    case FieldKind::Rationals: {
      const auto& x = a.rat();
      const auto& y = b.rat();
      return Fel::rational(make_rat(x.num * y.den + y.num * x.den, x.den * y.den));
    }
  }
  fail(Errc::Unsupported, "bad field kind");
}

Fel FieldCtx::sub(const Fel& a, const Fel& b) const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return Fel::finite(psub(a.u(), b.u()));
    case FieldKind::Extension:
      return Fel::finite(ext_sub(a.u(), b.u()));
    case FieldKind::Rationals: {
      const auto& x = a.rat();
      const auto& y = b.rat();
      return Fel::rational(make_rat(x.num * y.den - y.num * x.den, x.den * y.den));
    }
  }
  fail(Errc::Unsupported, "bad field kind");
}

Fel FieldCtx::mul(const Fel& a, const Fel& b) const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return Fel::finite(pmul(a.u(), b.u()));
    case FieldKind::Extension:
      return Fel::finite(ext_mul(a.u(), b.u()));
    case FieldKind::Rationals: {
      const auto& x = a.rat();
      const auto& y = b.rat();
      return Fel::rational(make_rat(x.num * y.num, x.den * y.den));
    }
  }
  fail(Errc::Unsupported, "bad field kind");
}

Fel FieldCtx::neg(const Fel& a) const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return Fel::finite(a.u() == 0 ? 0 : spec_.p - a.u());
    case FieldKind::Extension:
      return Fel::finite(ext_sub(0, a.u()));
    case FieldKind::Rationals:
      return Fel::rational(Rational{-a.rat().num, a.rat().den});
  }
  fail(Errc::Unsupported, "bad field kind");
}

Fel FieldCtx::inv(const Fel& a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
  switch (spec_.kind) {
    case FieldKind::Prime:
      return Fel::finite(pinv(a.u()));
    case FieldKind::Extension:
      return Fel::finite(ext_pow(a.u(), q_ - 2));
    case FieldKind::Rationals:
      return Fel::rational(make_rat(a.rat().den, a.rat().num));
  }
  fail(Errc::Unsupported, "bad field kind");
}

Fel FieldCtx::div(const Fel& a, const Fel& b) const { return mul(a, inv(b)); }

Fel FieldCtx::pow(const Fel& a, u64 e) const {
  Fel r = one();
  Fel base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fel FieldCtx::canonicalized(const Fel& a) const {
  if (finite()) {
    if (a.is_rational_rep()) fail(Errc::FieldMismatch, "rational element in a finite field");
    if (spec_.kind == FieldKind::Prime) return Fel::finite(a.u() % spec_.p);
    std::array<u64, kMaxDegree> d{};
    unpack(a.u() % q_, d.data());
    for (unsigned i = 0; i < spec_.n; ++i) d[i] %= spec_.p;
    return Fel::finite(pack(d.data()));
  }
  if (!a.is_rational_rep()) fail(Errc::FieldMismatch, "finite element in the rationals");
  return Fel::rational(make_rat(a.rat().num, a.rat().den));
}

SquareClass FieldCtx::square_class(const Fel& a) const {
  if (is_zero(a)) fail(Errc::ZeroArgument, "square class of zero");
  SquareClass c;
  if (finite()) {
    c.from_rationals = false;
    if (spec_.p == 2) {
      c.square = true;  // Frobenius is onto in characteristic 2
    } else {
      u64 e = (q_ - 1) / 2;
      Fel t = pow(a, e);
      c.square = eq(t, one());
    }
    return c;
  }
  c.from_rationals = true;
  c.rep = squarefree_part(a.rat().num * a.rat().den);
  c.square = (c.rep == 1);
  return c;
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  if (from_rationals != o.from_rationals) fail(Errc::FieldMismatch, "mixed square classes");
  SquareClass r;
  r.from_rationals = from_rationals;
  if (!from_rationals) {
    r.square = (square == o.square);
    return r;
  }
  BigInt g = rep, h = o.rep, gg = g < 0 ? -g : g, hh = h < 0 ? -h : h;
  BigInt d = gg;
  {
    BigInt x = gg, y = hh;
    while (y != 0) {
      BigInt t = x % y;
      x = y;
      y = t;
    }
    d = x;
  }
  r.rep = (g * h) / (d * d);  // both squarefree, so this is squarefree again
  r.square = (r.rep == 1);
  return r;
}

bool SquareClass::operator==(const SquareClass& o) const {
  if (from_rationals != o.from_rationals) return false;
  return from_rationals ? rep == o.rep : square == o.square;
}

std::string SquareClass::str() const {
  if (!from_rationals) return square ? "1" : "nonsquare";
  return rep.str();
}

BigInt squarefree_part(const BigInt& x) {
  if (x == 0) fail(Errc::ZeroArgument, "squarefree part of zero");
  bool negative = x < 0;
  BigInt m = negative ? -x : x;
  BigInt sf = 1;
  for (u64 d = 2; d <= 1000000; ++d) {
    BigInt dd(d);
    if (dd * dd > m) break;
    if (m % dd != 0) continue;
    int e = 0;
    while (m % dd == 0) {
      m /= dd;
      ++e;
    }
    if (e & 1) sf *= dd;
  }
  if (m != 1) {
    BigInt s = boost::multiprecision::sqrt(m);
    if (s * s == m) {
      // square cofactor contributes nothing
    } else if (boost::multiprecision::miller_rabin_test(m, 32)) {
      sf *= m;
    } else {
      fail(Errc::FactorLimitExceeded, "cannot certify squarefree part beyond 10^6 trial division");
    }
  }
  return negative ? -sf : sf;
}

std::string FieldCtx::str(const Fel& a) const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return std::to_string(a.u());
    case FieldKind::Extension: {
      std::array<u64, kMaxDegree> d{};
      unpack(a.u(), d.data());
      std::string out = "[";
      for (unsigned i = 0; i < spec_.n; ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
      }
      out += ']';
      return out;
    }
    case FieldKind::Rationals:
      return a.rat().num.str() + "/" + a.rat().den.str();
  }
  fail(Errc::Unsupported, "bad field kind");
}

Fel FieldCtx::parse(std::string_view text) const {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail(Errc::ParseError, "empty field element");
  switch (spec_.kind) {
    case FieldKind::Prime: {
      BigInt v = parse_bigint(t);
      BigInt m = v % BigInt(spec_.p);
      if (m < 0) m += spec_.p;
      return Fel::finite(m.convert_to<u64>());
    }
    case FieldKind::Extension: {
      if (t.front() != '[' || t.back() != ']') fail(Errc::ParseError, "extension element needs [a0,...]");
      auto toks = split(std::string_view(t).substr(1, t.size() - 2), ',');
      if (toks.size() > spec_.n) fail(Errc::ParseError, "too many coefficients");
      std::array<u64, kMaxDegree> d{};
      for (size_t i = 0; i < toks.size(); ++i) {
        BigInt v = parse_bigint(toks[i]);
        BigInt m = v % BigInt(spec_.p);
        if (m < 0) m += spec_.p;
        d[i] = m.convert_to<u64>();
      }
      return Fel::finite(pack(d.data()));
    }
    case FieldKind::Rationals: {
      auto slash = t.find('/');
      if (slash == std::string::npos) return Fel::rational(make_rat(parse_bigint(t), BigInt(1)));
      return Fel::rational(make_rat(parse_bigint(std::string_view(t).substr(0, slash)),
                                    parse_bigint(std::string_view(t).substr(slash + 1))));
    }
  }
  fail(Errc::Unsupported, "bad field kind");
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::FactorLimitExceeded: return "FactorLimitExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::InvalidSymbolForKind: return "InvalidSymbolForKind";
    case Errc::NotAMember: return "NotAMember";
    case Errc::WrongKind: return "WrongKind";
    case Errc::ZeroLambda: return "ZeroLambda";
    case Errc::NotASquareWitness: return "NotASquareWitness";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace chevelim
