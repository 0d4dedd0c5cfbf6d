#pragma once

// Ring extensions A -> B of finitely presented algebras: subalgebra
// membership through the graph ideal, seminormal/anodal witnesses,
// bounded closures, conductors and conductor reduction.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartierlab/errors.hpp"
#include "cartierlab/ideal.hpp"

namespace cartierlab {

struct ExtensionHints {
  std::optional<bool> finite;
  std::optional<bool> birational;
  std::vector<Polynomial> module_generators;                   // in B
  std::vector<std::pair<Polynomial, Polynomial>> fractions;    // (p, q) in A, one per module generator
  std::optional<std::int64_t> lpic_A_rank;
  std::optional<std::int64_t> lpic_B_rank;
  std::optional<std::int64_t> lpic_kernel_rank;
  std::optional<std::int64_t> expected_li_rank;  // reported, never used
};

struct SubalgebraMembership {
  Polynomial element;                    // in B, reduced
  bool member = false;
  std::optional<Polynomial> preimage;    // in A, reduced, when member
};

class Extension {
 public:
  /// Checks that every relation of A maps to zero in B, then (unless
  /// assume_injective) that the kernel of A's polynomial ring -> B is
  /// exactly A's ideal.  Throws MathError("NotWellDefined") or
  /// MathError("NotInjective").
  static Extension make(Ideal a, Ideal b, std::vector<Polynomial> images,
                        ExtensionHints hints = {}, bool assume_injective = false);
  /// The image of K[names] in B: A's ideal is the kernel of the map.
  static Extension from_kernel(const Ideal& b, const std::vector<std::string>& names,
                               std::vector<Polynomial> images);

  const Ideal& a() const { return a_; }
  const Ideal& b() const { return b_; }
  const Ring& a_ring() const { return a_.ring(); }
  const Ring& b_ring() const { return b_.ring(); }
  const Field& field() const { return b_.ring()->field(); }
  const std::vector<Polynomial>& images() const { return images_; }
  const ExtensionHints& hints() const { return hints_; }
  bool injectivity_assumed() const { return assumed_; }

  /// A-element -> reduced B-element.
  Polynomial map(const Polynomial& a) const;
  /// Reduced normal form in B.
  Polynomial reduce_b(const Polynomial& b) const;

  SubalgebraMembership contains(const Polynomial& b) const;
  /// The part of b's graph-ideal normal form involving B's variables;
  /// K-linear in b and zero exactly when b lies in A.
  Polynomial outside_part(const Polynomial& b) const;
  /// Whether every variable of B lies in A.
  bool is_surjective() const;

  bool is_seminormal_witness(const Polynomial& b) const;
  bool is_anodal_witness(const Polynomial& b) const;

  /// A new extension A[w] -> B with w mapped to b.
  Extension adjoin(const Polynomial& b, const std::string& stem) const;

  std::string describe() const;

 private:
  Extension(Ideal a, Ideal b, std::vector<Polynomial> images);
  void build_graph();

  Ideal a_;
  Ideal b_;
  std::vector<Polynomial> images_;
  ExtensionHints hints_;
  bool assumed_ = false;
  Ring graph_ring_;                      // B's variables, then A's tags
  std::shared_ptr<const Ideal> graph_;   // I_B + (tag_i - image_i)
};

enum class WitnessKind { Seminormal, Anodal };

struct ClosureResult {
  Extension extension;                   // A' with A <= A' <= B
  std::vector<Polynomial> witnesses;     // adjoined, in B
  /// True when the search stopped at the degree bound; false when A' = B,
  /// where nothing is left to find.
  bool exhausted = true;
  std::size_t candidates_tested = 0;
};

/// Enumerates B-monomials of total degree <= bound in graded lex order,
/// reduces each modulo A and earlier candidates, tests it and its affine
/// shifts for witnesses, adjoins any witness and restarts, until a scan
/// finds none.
ClosureResult closure_search(const Extension& ext, WitnessKind kind, unsigned degree_bound);

struct Conductor {
  Ideal ideal;                           // in A's ring, contains A's ideal
  std::vector<Polynomial> generators;    // reduced generators not in A's ideal
  bool unit = false;
  std::vector<std::string> certificate;  // membership checks performed
};

/// The conductor from fraction hints: intersection over module
/// generators b_j = p_j/q_j of ((q_j) + I_A) : p_j.  Throws
/// MathError("MissingHints") when hints are absent or inconsistent.
Conductor conductor(const Extension& ext);

/// A/c -> B/cB.  Throws MathError("Degenerate") for the unit conductor.
Extension reduce_mod_conductor(const Extension& ext, const Conductor& c);
Extension reduce_mod_conductor(const Extension& ext);

enum class NilStatus { Equal, Differ, Unknown };

struct NilComparison {
  NilStatus status = NilStatus::Unknown;
  std::optional<Polynomial> witness;     // nilpotent of B outside A
  std::string reason;
};

NilComparison nil_comparison(const Extension& ext);

/// "K[x,y]/(f, g)", or just "K" / "K[x]" when there is nothing to show.
std::string presentation(const Ideal& i);

std::string to_string(NilStatus s);
std::string to_string(WitnessKind k);

}  // namespace cartierlab
