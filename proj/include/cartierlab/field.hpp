#pragma once

// Exact coefficient fields: QQ, F_p, simple algebraic extensions and
// univariate rational function fields, plus dense univariate polynomials
// over any of them.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace cartierlab {

class Scalar;

/// Dense univariate polynomial, coefficients low degree first, no trailing
/// zeros.  The zero polynomial is the empty vector.
using UPoly = std::vector<Scalar>;

struct RationalFunction {
  UPoly num;
  UPoly den;  // monic, coprime to num
};

/// A field element.  It carries no reference to its field; all arithmetic
/// goes through `Field`.
class Scalar {
 public:
  using Value = std::variant<mpq_class, std::uint64_t, UPoly, RationalFunction>;

  Scalar() : value(mpq_class(0)) {}
  explicit Scalar(Value v) : value(std::move(v)) {}

  Value value;
};

enum class FieldKind { Rationals, PrimeField, SimpleExtension, RationalFunctions };

class Field {
 public:
  static Field rationals();
  /// Throws InputError unless p is prime with 2 <= p < 2^31.
  static Field prime(std::uint64_t p);
  /// K[a]/(m).  The minimal polynomial is made monic; construction fails if
  /// m is detected to be reducible.
  static Field extension(const Field& base, UPoly minimal_polynomial,
                         std::string generator = "a");
  /// K(v) for K = QQ or F_p.
  static Field rational_functions(const Field& base, std::string variable);

  Field();  // QQ

  FieldKind kind() const;
  std::uint64_t characteristic() const;
  /// Base field of an extension or rational function field.
  Field base() const;
  const UPoly& minimal_polynomial() const;
  const std::string& symbol() const;
  std::string describe() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar from_base(const Scalar& b) const;
  /// The adjoined generator a (extension) or the variable v (function field).
  Scalar generator() const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;

  std::string to_string(const Scalar& a) const;

  // Rational function fields only.
  Scalar from_fraction(UPoly num, UPoly den) const;
  const UPoly& numerator(const Scalar& a) const;
  const UPoly& denominator(const Scalar& a) const;
  bool is_polynomial(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  // Internal representation, shared between copies.
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

namespace upoly {

int degree(const UPoly& p);
void trim(const Field& k, UPoly& p);
UPoly constant(const Field& k, const Scalar& c);
UPoly variable(const Field& k);
UPoly monomial(const Field& k, const Scalar& c, int deg);
const Scalar& leading(const UPoly& p);

bool equal(const Field& k, const UPoly& a, const UPoly& b);
bool is_one(const Field& k, const UPoly& a);
UPoly add(const Field& k, const UPoly& a, const UPoly& b);
UPoly sub(const Field& k, const UPoly& a, const UPoly& b);
UPoly neg(const Field& k, const UPoly& a);
UPoly mul(const Field& k, const UPoly& a, const UPoly& b);
UPoly scale(const Field& k, const UPoly& a, const Scalar& c);
UPoly shift(const Field& k, const UPoly& a, int n);  // a * x^n

/// Euclidean division; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const Field& k, const UPoly& a, const UPoly& b);
UPoly rem(const Field& k, const UPoly& a, const UPoly& b);
UPoly quo(const Field& k, const UPoly& a, const UPoly& b);
/// Exact division; throws InternalError when b does not divide a.
UPoly exact_quo(const Field& k, const UPoly& a, const UPoly& b);

UPoly monic(const Field& k, const UPoly& a);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const Field& k, const UPoly& a, const UPoly& b);
/// (g, s, t) with s*a + t*b = g, g monic.
std::tuple<UPoly, UPoly, UPoly> xgcd(const Field& k, const UPoly& a, const UPoly& b);
UPoly derivative(const Field& k, const UPoly& a);
Scalar eval(const Field& k, const UPoly& a, const Scalar& x);
/// a(b(x)).
UPoly compose(const Field& k, const UPoly& a, const UPoly& b);
UPoly powmod(const Field& k, const UPoly& a, const mpz_class& e, const UPoly& m);

std::string to_string(const Field& k, const UPoly& a, const std::string& var);

}  // namespace upoly

}  // namespace cartierlab
