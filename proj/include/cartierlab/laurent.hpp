#pragma once

// Units of R[t, 1/t] for a finite algebra R, and Bass's decomposition
// u0 * (sum e_i t^{n_i}) * (1 + positive nilpotent tail) * (1 + negative
// nilpotent tail).

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cartierlab/artinian.hpp"

namespace cartierlab {

using Base = std::shared_ptr<const FiniteAlgebra>;

class LaurentElement {
 public:
  explicit LaurentElement(Base base);
  static LaurentElement constant(Base base, const Vec& c);
  static LaurentElement monomial(Base base, const Vec& c, std::int64_t degree);

  const FiniteAlgebra& base() const { return *base_; }
  const Base& base_ptr() const { return base_; }
  /// Degree -> coefficient; no zero coefficients.
  const std::map<std::int64_t, Vec>& coefficients() const { return coeffs_; }
  Vec coefficient(std::int64_t degree) const;
  void set(std::int64_t degree, const Vec& c);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  LaurentElement operator+(const LaurentElement& o) const;
  LaurentElement operator-(const LaurentElement& o) const;
  LaurentElement operator*(const LaurentElement& o) const;
  LaurentElement scale(const Vec& c) const;
  bool operator==(const LaurentElement& o) const;
  bool operator!=(const LaurentElement& o) const { return !(*this == o); }

  /// Parts of degree > 0, == 0 and < 0.
  LaurentElement positive_part() const;
  LaurentElement negative_part() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  Base base_;
  std::map<std::int64_t, Vec> coeffs_;
};

/// Parses an expression in R's variables and `var`, where var^-k is
/// allowed.  Throws InputError.
LaurentElement parse_laurent(std::string_view text, const Base& base, const std::string& var = "t");

/// Primitive idempotents in a fixed order: compared from the last basis
/// coordinate down, larger value first.  Unknown if the decomposition is
/// incomplete.
Outcome<std::vector<Vec>> ordered_idempotents(const FiniteAlgebra& alg);

Outcome<bool> is_laurent_unit(const LaurentElement& x);

struct LaurentUnitDecomposition {
  Vec u0;                              // unit of R
  std::vector<Vec> idempotents;        // in ordered_idempotents order
  std::vector<std::int64_t> exponents; // one per idempotent
  LaurentElement p_part;               // 1 + nilpotent tail in degrees > 0
  LaurentElement q_part;               // 1 + nilpotent tail in degrees < 0

  LaurentElement recompose() const;
};

/// Throws MathError("NotAUnit"), or MathError("Undecided") when the
/// idempotent decomposition of R is incomplete.
LaurentUnitDecomposition bass_decompose(const LaurentElement& x);

/// Rank of LU(R) = H^0(Spec R, Z): the number of components.
Outcome<std::size_t> lu_rank(const FiniteAlgebra& base);

}  // namespace cartierlab
