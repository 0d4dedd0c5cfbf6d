#pragma once

// Invariants of an extension A -> B: fiber components (stalks of
// f_*Z/Z), the rank of LI(A,B) by four routes, the NI verdict, Laurent
// stability, decomposition term counts and consistency checks.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cartierlab/errors.hpp"
#include "cartierlab/extension.hpp"

namespace cartierlab {

struct StalkReport {
  std::string prime;              // generators, or "(0)" for the generic point
  bool generic = false;
  std::string residue_field;
  std::string fiber;              // presentation of B tensor k(p)
  bool empty = false;             // fiber is the zero ring
  Outcome<std::size_t> fiber_components;
  std::optional<std::size_t> stalk_rank;
  /// "henselized stalk" under hints.finite, else "fiber components only".
  std::string label;

  nlohmann::json to_json() const;
};

/// Fiber of ext over a maximal ideal of A (given by generators in A's
/// ring) or, with `generic`, over the generic point of a domain A.
/// Throws MathError("NotPrime") for other ideals.
StalkReport stalk_rank(const Extension& ext, const std::vector<Polynomial>& prime);
StalkReport generic_stalk(const Extension& ext);

enum class LIMethod { HenselLocalFormula, FiniteConnected, ConductorSquare, FiveTermSequence, ReductionToReduced };
enum class LIStatus { Known, Unknown, Inconclusive };

struct LIResult {
  LIStatus status = LIStatus::Unknown;
  std::optional<std::int64_t> rank;
  std::optional<LIMethod> method;
  std::string reason;             // set unless Known
  nlohmann::json certificate = nlohmann::json::object();

  static LIResult known(std::int64_t rank, LIMethod m, nlohmann::json cert);
  static LIResult unknown(std::string why, std::optional<LIMethod> m = std::nullopt);
  static LIResult inconclusive(std::string why, LIMethod m, nlohmann::json cert);
  bool is_known() const { return status == LIStatus::Known; }
  nlohmann::json to_json() const;
};

struct RankData {
  std::int64_t c_A = 1;
  std::int64_t c_B = 1;
  std::int64_t lpic_A = 0;
  std::int64_t lpic_B = 0;
  std::int64_t lpic_kernel = 0;
};

LIResult li_hensel_local(const Extension& ext);
/// `primes` are maximal ideals of A; `generic` adds the generic point
/// when A is a domain.
LIResult li_finite_connected(const Extension& ext, const std::vector<std::vector<Polynomial>>& primes,
                             bool generic = true);
LIResult li_conductor_square(const Extension& ext);
/// Throws MathError("InvariantViolation").
LIResult li_five_term(const RankData& data);
/// Component counts computed, LPic ranks from hints; throws
/// MathError("MissingHints") when a rank hint or a count is unavailable.
RankData rank_data(const Extension& ext);

/// Hensel-local, conductor-square, finite-connected, five-term: the first
/// route giving a rank.  The certificate lists every attempt.
LIResult li_auto(const Extension& ext, const std::vector<std::vector<Polynomial>>& primes, bool generic = true);
/// Runs one route by name: auto, hensel, connected, conductor, fiveterm,
/// or reduced (pass to reduced rings, then auto).
LIResult li_by_method(const Extension& ext, const std::string& method,
                      const std::vector<std::vector<Polynomial>>& primes, bool generic = true);

enum class NIStatus { Zero, NonZero, UnknownUpToBound };

struct NIVerdict {
  NIStatus status = NIStatus::UnknownUpToBound;
  unsigned bound = 0;
  std::optional<Polynomial> witness;
  std::string nil_reason;
  nlohmann::json to_json() const;
};

NIVerdict ni_verdict(const Extension& ext, unsigned degree_bound);

enum class Verdict { Yes, No, Unknown };

struct StabilityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  LIResult li;
  NIVerdict ni;
  nlohmann::json to_json() const;
};

/// I(A,B) = I(A[t,1/t], B[t,1/t]) iff LI = 0 and A is seminormal in B.
StabilityVerdict laurent_stability(const Extension& ext, const std::vector<std::vector<Polynomial>>& primes,
                                   unsigned degree_bound);

/// (label, count) for I, L and N^i, i = 1..n.
std::vector<std::pair<std::string, mpz_class>> decomposition_terms(unsigned n);

/// rank(A,B) <= rank(A,C) <= rank(A,B) + rank(B,C).
Outcome<bool> tower_check(const LIResult& ab, const LIResult& ac, const LIResult& bc);

LIResult product_rank(const std::vector<LIResult>& results);

/// The extension of reduced rings.  Throws MathError("RadicalUnavailable").
Extension li_reduce_red(const Extension& ext);

std::string to_string(LIMethod m);
std::string to_string(LIStatus s);
std::string to_string(NIStatus s);
std::string to_string(Verdict v);

}  // namespace cartierlab
