#pragma once

// Univariate factorization over the supported fields.
//
//   F_p      : distinct-degree + Cantor-Zassenhaus equal-degree splitting,
//              driven by a fixed-seed pseudo-random stream.
//   QQ       : rational roots, then Kronecker search for factors of degree
//              >= 2 on inputs of degree <= 8.
//   K(v)     : K = QQ or F_p; v-adic Hensel lifting of a good
//              specialization followed by factor recombination.
//   K[a]/(m) : only degree <= 1 inputs (reported as incomplete otherwise).

#include <optional>
#include <string>
#include <vector>

#include "cartierlab/field.hpp"

namespace cartierlab {

struct Factorization {
  /// Distinct monic irreducible factors (or coarser factors when incomplete).
  std::vector<UPoly> factors;
  bool complete = true;
  std::string reason;
};

/// Factors a squarefree polynomial of positive degree.
Factorization factor_squarefree(const Field& k, const UPoly& f);

/// Product of the distinct monic irreducible factors of f.  Empty optional
/// when the field is imperfect and f has a vanishing derivative factor.
std::optional<UPoly> squarefree_part(const Field& k, const UPoly& f);

/// Irreducibility; empty when the factorizer could not decide.
std::optional<bool> is_irreducible(const Field& k, const UPoly& f);

/// A square root of a in k, if one exists and can be found.
std::optional<Scalar> field_sqrt(const Field& k, const Scalar& a);

/// Roots of f in k (distinct), when f factors completely enough to tell.
std::optional<std::vector<Scalar>> roots(const Field& k, const UPoly& f);

}  // namespace cartierlab
