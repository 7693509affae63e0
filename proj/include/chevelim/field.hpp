#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chevelim/error.hpp"

namespace chevelim {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
struct Rational {
  BigInt num{0};
  BigInt den{1};
  bool operator==(const Rational&) const = default;
};

/// One field element.
///
/// Finite-field elements are packed into a single machine word: a residue for
/// prime fields, or the base-p digit vector of the coefficient list read as an
/// integer for extension fields. Rationals carry a reduced fraction. Elements
/// do not know their field; all arithmetic goes through FieldCtx.
class Fel {
public:
  Fel() : v_(std::uint64_t{0}) {}
  static Fel finite(std::uint64_t v) {
    Fel e;
    e.v_ = v;
    return e;
  }
  static Fel rational(Rational r) {
    Fel e;
    e.v_ = std::move(r);
    return e;
  }

  bool is_rational_rep() const { return v_.index() == 1; }
  std::uint64_t u() const { return std::get<0>(v_); }
  const Rational& rat() const { return std::get<1>(v_); }

  bool operator==(const Fel&) const = default;

private:
  std::variant<std::uint64_t, Rational> v_;
};

enum class FieldKind { Prime, Extension, Rationals };

/// Description of a field: GF(p), GF(p^n) with a monic modulus, or Q.
///
/// Text syntax: "gf(p)", "gf(p^n)", "gf(p^n;c0,c1,...,1)" (modulus coefficients
/// low degree first, leading 1 included), or "q" for the rationals.
struct FieldSpec {
  FieldKind kind = FieldKind::Prime;
  std::uint64_t p = 2;
  unsigned n = 1;
  std::vector<std::uint64_t> modulus;  // monic, size n+1; empty = lex-smallest default

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec extension(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus = {});
  static FieldSpec rationals();
  static FieldSpec parse(std::string_view text);
  std::string str() const;
};

/// Deterministic modulus choice: the lexicographically smallest monic
/// irreducible polynomial of degree n over GF(p), scanning coefficient lists
/// from the top degree down. Returns all n+1 coefficients, low degree first.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned n);

bool is_prime_u64(std::uint64_t n);

/// Element of k^x / (k^x)^2. For finite fields this is a single bit; for the
/// rationals the class is named by its signed squarefree representative.
struct SquareClass {
  bool from_rationals = false;
  bool square = true;
  BigInt rep{1};  // rationals only; 1 for the trivial class

  bool trivial() const { return from_rationals ? rep == 1 : square; }
  SquareClass operator*(const SquareClass& o) const;
  bool operator==(const SquareClass& o) const;
  std::string str() const;  // "1" / "nonsquare" / signed squarefree integer
};

/// Immutable arithmetic context for one field. Safe to share across threads;
/// every operation is a pure function of its inputs.
class FieldCtx {
public:
  explicit FieldCtx(const FieldSpec& spec);

  FieldKind kind() const { return spec_.kind; }
  bool finite() const { return spec_.kind != FieldKind::Rationals; }
  std::uint64_t characteristic() const { return finite() ? spec_.p : 0; }
  std::uint64_t order() const { return q_; }  // 0 means infinite
  unsigned degree() const { return spec_.n; }
  const std::vector<std::uint64_t>& modulus() const { return spec_.modulus; }
  const FieldSpec& spec() const { return spec_; }
  std::string spec_string() const { return spec_.str(); }

  bool same(const FieldCtx& o) const;

  Fel zero() const;
  Fel one() const;
  Fel from_int(long long v) const;
  /// Finite fields only: the element whose packed representation is idx < q.
  Fel from_index(std::uint64_t idx) const;

  bool is_zero(const Fel& a) const;
  bool eq(const Fel& a, const Fel& b) const { return a == b; }

  Fel add(const Fel& a, const Fel& b) const;
  Fel sub(const Fel& a, const Fel& b) const;
  Fel mul(const Fel& a, const Fel& b) const;
  Fel neg(const Fel& a) const;
  Fel inv(const Fel& a) const;
  Fel div(const Fel& a, const Fel& b) const;
  Fel pow(const Fel& a, std::uint64_t e) const;

  /// Reduce an element to canonical form (residues mod p, fractions reduced
  /// with positive denominator). Canonical inputs come back unchanged.
  Fel canonicalized(const Fel& a) const;

  SquareClass square_class(const Fel& a) const;  // ZeroArgument on a = 0

  std::string str(const Fel& a) const;
  Fel parse(std::string_view text) const;

private:
  FieldSpec spec_;
  std::uint64_t q_ = 0;  // cardinality, 0 for Q

  std::uint64_t padd(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t psub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pmul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pinv(std::uint64_t a) const;
  void unpack(std::uint64_t v, std::uint64_t* digits) const;
  std::uint64_t pack(const std::uint64_t* digits) const;
  std::uint64_t ext_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ext_sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ext_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ext_pow(std::uint64_t a, std::uint64_t e) const;
};

/// Signed squarefree part of a nonzero integer. Trial division up to 10^6,
/// then the cofactor must be 1, a perfect square, or a prime; anything else
/// raises FactorLimitExceeded.
BigInt squarefree_part(const BigInt& x);

}  // namespace chevelim
