#pragma once

// Zero-dimensional quotient rings as finite-dimensional algebras, and
// connected-component counts (primitive idempotents).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartierlab/errors.hpp"
#include "cartierlab/ideal.hpp"
#include "cartierlab/linalg.hpp"

namespace cartierlab {

class FiniteAlgebra {
 public:
  /// K[x]/I for zero-dimensional I.  The unit ideal gives the zero ring
  /// (dim 0).  Throws MathError("NotZeroDimensional") naming a variable
  /// with no pure-power leading term.
  static FiniteAlgebra quotient(const Ideal& ideal);

  const Field& field() const { return ideal_.ring()->field(); }
  const Ring& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  std::size_t dim() const { return basis_.size(); }
  /// Staircase monomials in increasing order; 1 comes first.
  const std::vector<Exponents>& basis() const { return basis_; }

  Vec zero() const;
  Vec one() const;
  Vec unit_vector(std::size_t i) const;
  Vec from_polynomial(const Polynomial& f) const;
  Polynomial to_polynomial(const Vec& v) const;
  std::string to_string(const Vec& v) const;

  Vec add(const Vec& a, const Vec& b) const { return add_vec(field(), a, b); }
  Vec sub(const Vec& a, const Vec& b) const { return sub_vec(field(), a, b); }
  Vec scale(const Vec& a, const Scalar& c) const { return scale_vec(field(), a, c); }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, const mpz_class& e) const;
  bool is_zero(const Vec& a) const { return is_zero_vec(field(), a); }
  bool equal(const Vec& a, const Vec& b) const { return equal_vec(field(), a, b); }
  /// Evaluates p(a), reading the constant term as a multiple of `unit`.
  Vec evaluate(const UPoly& p, const Vec& a, const Vec& unit) const;

  /// Matrix of x -> a*x, columns indexed by basis elements.
  Matrix multiplication_matrix(const Vec& a) const;
  /// Minimal polynomial of a inside the block with identity `unit`.
  UPoly minimal_polynomial(const Vec& a, const Vec& unit) const;
  UPoly minimal_polynomial(const Vec& a) const { return minimal_polynomial(a, one()); }
  std::optional<Vec> inverse(const Vec& a) const;
  bool is_nilpotent(const Vec& a) const;
  /// Basis of the nilradical; Unknown over imperfect fields of positive
  /// characteristic.
  Outcome<std::vector<Vec>> nilradical() const;

  /// table()[i][j] = basis_i * basis_j.
  const std::vector<std::vector<Vec>>& table() const { return table_; }

 private:
  explicit FiniteAlgebra(Ideal ideal) : ideal_(std::move(ideal)) {}
  Ideal ideal_;
  std::vector<Exponents> basis_;
  std::map<Exponents, std::size_t> index_;
  std::vector<std::vector<Vec>> table_;
};

struct IdempotentDecomposition {
  std::vector<Vec> idempotents;  // primitive when complete
  bool complete = true;
  std::string reason;            // why completeness could not be proved
  std::vector<std::string> certificate;
  std::size_t count() const { return idempotents.size(); }
};

IdempotentDecomposition idempotent_decomposition(const FiniteAlgebra& alg);
Outcome<std::size_t> component_count(const FiniteAlgebra& alg);

/// Components of K[x]/I where I becomes zero-dimensional once `free_var`
/// moves into the coefficient field K(v).  Throws
/// MathError("NotFiniteOverSubring") otherwise.
Outcome<std::size_t> components_over_subring(const Ideal& ideal, std::size_t free_var);

/// Components of K[x]/I for any I: zero-dimensional directly, otherwise
/// through components_over_subring for some variable; Unknown otherwise.
Outcome<std::size_t> component_count(const Ideal& ideal);

/// Whether K[x]/I is a field; Unknown when that cannot be settled.
Outcome<bool> is_field(const FiniteAlgebra& alg);

/// Whether K[x]/I is reduced: decided for zero-dimensional I, for the
/// zero ideal, and for rings that are torsion-free and finite over K[v]
/// for some variable v.
Outcome<bool> is_reduced(const Ideal& ideal);

/// Radical of a zero-dimensional ideal (Seidenberg: add the squarefree
/// part of each variable's minimal polynomial); Unknown otherwise.
Outcome<Ideal> radical(const Ideal& ideal);

/// Whether K[x]/I is a domain finite over K[v] for some variable v (so of
/// dimension one, or zero when I is maximal).  Returns the variable.
Outcome<std::optional<std::size_t>> generic_variable(const Ideal& ideal);

/// A presentation K[a]/(m) of a finite field extension of K, found by a
/// primitive-element search; empty when none is found.
std::optional<Field> residue_field(const FiniteAlgebra& alg);

}  // namespace cartierlab
