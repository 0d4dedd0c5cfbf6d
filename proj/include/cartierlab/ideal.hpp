#pragma once

// Buchberger's algorithm and ideal operations.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cartierlab/poly.hpp"

namespace cartierlab {

/// S-pair budget per Gröbner computation (default 100000).  Exceeding it
/// throws ResourceLimit.
void set_pair_budget(std::uint64_t budget);
std::uint64_t pair_budget();
/// S-pairs reduced since the process started (for reports).
std::uint64_t pairs_used();

/// Reduced monic Gröbner basis, sorted by increasing leading monomial.
std::vector<Polynomial> groebner_basis(const Ring& ring, const std::vector<Polynomial>& gens);
/// Full reduction of f by the polynomials in g (any order of divisors).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g);
Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);
/// a / b when b divides a.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

class Ideal {
 public:
  explicit Ideal(Ring ring, std::vector<Polynomial> generators = {});
  static Ideal unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Cached reduced basis; computed once.
  const std::vector<Polynomial>& groebner() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;
  Ideal with_generators(std::vector<Polynomial> more) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Polynomial>> basis;
  };
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& f);
Ideal colon(const Ideal& a, const Ideal& b);
/// a : f^infinity.
Ideal saturate(const Ideal& a, const Polynomial& f);
/// Eliminates the listed variables; the result lives in `target`, whose
/// variables are the remaining ones in their original order.
Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars, const Ring& target);
Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars);

/// A variable name not used in `ring`, derived from `stem`.
std::string fresh_name(const PolyRing& ring, const std::string& stem);

}  // namespace cartierlab
