#pragma once

// Sparse multivariate polynomials over a Field, with the expression parser
// and printer.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartierlab/field.hpp"

namespace cartierlab {

enum class OrderKind { Lex, Grevlex, Block };

struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block = 0;  // Block: lex on the first `block` variables' degrees, grevlex within

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder block_order(std::size_t k) { return {OrderKind::Block, k}; }
  std::string describe() const;
};

using Exponents = std::vector<std::uint32_t>;

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  /// Throws InputError on invalid or duplicate variable names.
  static Ring make(Field k, std::vector<std::string> variables,
                   MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Exponents& a, const Exponents& b) const;
  bool same_as(const PolyRing& other) const;
  std::string describe() const;

 private:
  PolyRing(Field k, std::vector<std::string> variables, MonomialOrder order);
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

bool valid_identifier(std::string_view s);

struct Term {
  Exponents exp;
  Scalar coef;
};

std::uint32_t total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm_exp(const Exponents& a, const Exponents& b);
Exponents add_exp(const Exponents& a, const Exponents& b);
Exponents sub_exp(const Exponents& a, const Exponents& b);

class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  static Polynomial constant(Ring ring, const Scalar& c);
  static Polynomial from_int(Ring ring, std::int64_t n);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, Exponents exp, const Scalar& c);
  /// Terms may be unsorted and contain zeros or repeats.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const Term& leading() const;
  const Exponents& leading_exp() const { return leading().exp; }
  const Scalar& leading_coef() const { return leading().coef; }
  std::uint32_t total_degree() const;
  /// Coefficient of a given monomial (zero if absent).
  Scalar coefficient(const Exponents& e) const;
  /// Indices of variables that occur.
  std::vector<std::size_t> support() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Exponents& e, const Scalar& c) const;
  Polynomial pow(std::uint64_t e) const;
  Polynomial monic() const;
  /// this - c * x^e * g, the reduction step.
  Polynomial sub_mul_term(const Exponents& e, const Scalar& c, const Polynomial& g) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;  // strictly descending in the ring's order
};

/// Options for the one context in which negative exponents are allowed:
/// `t^-k` is read as `tinv^k` when inverse_names maps "t" to "tinv".
struct ParseOptions {
  std::map<std::string, std::string> inverse_names;
};

/// Parses the expression grammar; throws InputError with a position.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, const ParseOptions& opts = {});

/// Ring maps.
/// images[i] is the image of the i-th variable of f's ring, all in `target`.
Polynomial substitute(const Polynomial& f, const Ring& target, const std::vector<Polynomial>& images);
/// Variable i of f's ring goes to variable index_map[i] of target (same field).
Polynomial rename(const Polynomial& f, const Ring& target, const std::vector<std::size_t>& index_map);
/// Moves variable `var` of f's ring into the coefficients: target must have
/// field K(v) over f's field and the remaining variables in their order.
Polynomial absorb_variable(const Polynomial& f, const Ring& target, std::size_t var);

}  // namespace cartierlab
