#include "cartierlab/artinian.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "cartierlab/factor.hpp"

namespace cartierlab {

namespace {

constexpr std::uint64_t kProbeSeed = 0x1de5eed;
constexpr int kRandomProbes = 24;
constexpr std::size_t kMaxSubsetComponents = 12;

bool finite_field(const Field& k) {
  return k.kind() == FieldKind::PrimeField ||
         (k.kind() == FieldKind::SimpleExtension && k.base().kind() == FieldKind::PrimeField);
}

mpz_class field_size(const Field& k) {
  mpz_class q = static_cast<unsigned long>(k.characteristic());
  if (k.kind() == FieldKind::SimpleExtension) {
    mpz_class b = q;
    mpz_pow_ui(q.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(upoly::degree(k.minimal_polynomial())));
  }
  return q;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::quotient(const Ideal& ideal) {
  FiniteAlgebra alg(ideal);
  const Ring& r = ideal.ring();
  const auto& gb = ideal.groebner();
  std::size_t n = r->nvars();
  if (gb.size() == 1 && gb[0].is_constant()) return alg;

  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& g : gb) {
      const Exponents& e = g.leading_exp();
      bool pure = e[i] > 0;
      for (std::size_t j = 0; j < n && pure; ++j)
        if (j != i && e[j] != 0) pure = false;
      if (pure) found = true;
    }
    if (!found)
      throw MathError("NotZeroDimensional", "no pure power of " + r->variables()[i] +
                                                " among the leading terms of " + ideal.to_string());
  }

  auto in_staircase = [&](const Exponents& e) {
    for (const auto& g : gb)
      if (divides(g.leading_exp(), e)) return false;
    return true;
  };
  std::set<Exponents> seen;
  std::deque<Exponents> queue{Exponents(n, 0)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Exponents e = queue.front();
    queue.pop_front();
    alg.basis_.push_back(e);
    for (std::size_t i = 0; i < n; ++i) {
      Exponents f = e;
      ++f[i];
      if (seen.count(f) || !in_staircase(f)) continue;
      seen.insert(f);
      queue.push_back(std::move(f));
    }
  }
  std::sort(alg.basis_.begin(), alg.basis_.end(),
            [&](const Exponents& a, const Exponents& b) { return r->compare(a, b) < 0; });
  for (std::size_t i = 0; i < alg.basis_.size(); ++i) alg.index_[alg.basis_[i]] = i;

  std::size_t d = alg.basis_.size();
  const Field& k = r->field();
  alg.table_.assign(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Polynomial m = Polynomial::monomial(r, add_exp(alg.basis_[i], alg.basis_[j]), k.one());
      alg.table_[i][j] = alg.from_polynomial(m);
      alg.table_[j][i] = alg.table_[i][j];
    }
  return alg;
}

Vec FiniteAlgebra::zero() const { return zero_vec(field(), dim()); }

Vec FiniteAlgebra::one() const {
  Vec v = zero();
  if (!v.empty()) v[0] = field().one();
  return v;
}

Vec FiniteAlgebra::unit_vector(std::size_t i) const {
  Vec v = zero();
  v.at(i) = field().one();
  return v;
}

Vec FiniteAlgebra::from_polynomial(const Polynomial& f) const {
  Polynomial nf = ideal_.normal_form(f);
  Vec v = zero();
  for (const auto& t : nf.terms()) {
    auto it = index_.find(t.exp);
    if (it == index_.end()) throw InternalError("normal form term outside the staircase");
    v[it->second] = t.coef;
  }
  return v;
}

Polynomial FiniteAlgebra::to_polynomial(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field().is_zero(v[i])) terms.push_back({basis_[i], v[i]});
  return Polynomial::from_terms(ring(), std::move(terms));
}

std::string FiniteAlgebra::to_string(const Vec& v) const { return to_polynomial(v).to_string(); }

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
  const Field& k = field();
  Vec r = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (k.is_zero(b[j])) continue;
      Scalar c = k.mul(a[i], b[j]);
      const Vec& t = table_[i][j];
      for (std::size_t l = 0; l < t.size(); ++l)
        if (!k.is_zero(t[l])) r[l] = k.add(r[l], k.mul(c, t[l]));
    }
  }
  return r;
}

Vec FiniteAlgebra::pow(const Vec& a, const mpz_class& e) const {
  Vec result = one();
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

Vec FiniteAlgebra::evaluate(const UPoly& p, const Vec& a, const Vec& unit) const {
  Vec acc = zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = add(mul(acc, a), scale(unit, *it));
  return acc;
}

Matrix FiniteAlgebra::multiplication_matrix(const Vec& a) const {
  std::size_t d = dim();
  Matrix m(d, zero());
  for (std::size_t c = 0; c < d; ++c) {
    Vec col = mul(a, unit_vector(c));
    for (std::size_t r = 0; r < d; ++r) m[r][c] = col[r];
  }
  return m;
}

UPoly FiniteAlgebra::minimal_polynomial(const Vec& a, const Vec& unit) const {
  const Field& k = field();
  SpanTracker span(k, dim());
  Vec power = unit;
  for (std::size_t deg = 0;; ++deg) {
    if (auto c = span.express(power)) {
      UPoly m(deg + 1, k.zero());
      for (std::size_t j = 0; j < deg; ++j) m[j] = k.neg((*c)[j]);
      m[deg] = k.one();
      return m;
    }
    span.insert(power);
    power = mul(power, a);
  }
}

std::optional<Vec> FiniteAlgebra::inverse(const Vec& a) const {
  if (dim() == 0) return zero();
  return solve(field(), multiplication_matrix(a), one(), dim());
}

bool FiniteAlgebra::is_nilpotent(const Vec& a) const {
  if (dim() == 0) return true;
  return is_zero(pow(a, static_cast<unsigned long>(dim())));
}

Outcome<std::vector<Vec>> FiniteAlgebra::nilradical() const {
  const Field& k = field();
  std::size_t d = dim();
  if (d == 0) return Outcome<std::vector<Vec>>::of({});
  if (k.characteristic() == 0) {
    // Trace form radical.
    Vec tr(d, k.zero());
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t r = 0; r < d; ++r) tr[b] = k.add(tr[b], table_[b][r][r]);
    Matrix t(d, zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) t[i][j] = k.add(t[i][j], k.mul(table_[i][j][l], tr[l]));
    return Outcome<std::vector<Vec>>::of(kernel(k, t, d));
  }
  if (finite_field(k)) {
    // Kernel of a high enough Frobenius power.
    mpz_class q = field_size(k), e = q;
    while (e < d) e *= q;
    Matrix f(d, zero());
    for (std::size_t c = 0; c < d; ++c) {
      Vec col = pow(unit_vector(c), e);
      for (std::size_t r = 0; r < d; ++r) f[r][c] = col[r];
    }
    return Outcome<std::vector<Vec>>::of(kernel(k, f, d));
  }
  return Outcome<std::vector<Vec>>::unknown("nilradical over the imperfect field " + k.describe() +
                                            " is not supported");
}

// ---------------------------------------------------------------------------
// idempotents

namespace {

struct BlockContext {
  const FiniteAlgebra& alg;
  std::optional<std::vector<Vec>> nil;
  std::optional<std::vector<Vec>> frobenius_fixed;
};

enum class BlockVerdict { Split, Connected, Unknown };

struct BlockResult {
  BlockVerdict verdict = BlockVerdict::Unknown;
  Vec first, second;
  std::string note;
};

std::size_t span_rank(const FiniteAlgebra& alg, const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return rank(alg.field(), vs, alg.dim());
}

std::vector<Vec> block_probes(const FiniteAlgebra& alg, const Vec& e, const BlockContext& ctx) {
  std::vector<Vec> probes;
  const Field& k = alg.field();
  if (ctx.frobenius_fixed)
    for (const auto& v : *ctx.frobenius_fixed) probes.push_back(alg.mul(e, v));
  std::size_t d = alg.dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(alg.mul(e, alg.unit_vector(i)));
  for (const auto& b : basis) probes.push_back(b);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) probes.push_back(alg.add(basis[i], basis[j]));
  std::mt19937_64 rng(kProbeSeed);
  for (int r = 0; r < kRandomProbes; ++r) {
    Vec v = alg.zero();
    for (std::size_t i = 0; i < d; ++i)
      v = alg.add(v, alg.scale(basis[i], k.from_int(static_cast<std::int64_t>(rng() % 7) - 3)));
    probes.push_back(std::move(v));
  }
  return probes;
}

BlockResult split_block(const BlockContext& ctx, const Vec& e) {
  const FiniteAlgebra& alg = ctx.alg;
  const Field& k = alg.field();
  std::size_t d = alg.dim();
  std::size_t block_dim = rank(k, alg.multiplication_matrix(e), d);
  if (block_dim == 1) return {BlockVerdict::Connected, {}, {}, "block of dimension 1"};

  std::optional<std::size_t> nil_dim;
  if (ctx.nil) {
    std::vector<Vec> local;
    for (const auto& n : *ctx.nil) local.push_back(alg.mul(e, n));
    nil_dim = span_rank(alg, local);
    if (block_dim - *nil_dim == 1)
      return {BlockVerdict::Connected, {}, {}, "reduced block is the base field"};
  }
  if (ctx.frobenius_fixed) {
    std::vector<Vec> local;
    for (const auto& v : *ctx.frobenius_fixed) local.push_back(alg.mul(e, v));
    if (span_rank(alg, local) == 1)
      return {BlockVerdict::Connected, {}, {}, "Frobenius-fixed subalgebra of the block is the base field"};
  }

  std::string note = "no splitting probe found";
  for (const Vec& a : block_probes(alg, e, ctx)) {
    UPoly m = alg.minimal_polynomial(a, e);
    int deg = upoly::degree(m);
    if (deg <= 1) continue;
    if (static_cast<std::size_t>(deg) == block_dim) {
      auto irr = is_irreducible(k, m);
      if (irr && *irr) return {BlockVerdict::Connected, {}, {}, "probe generates the block as a field"};
    }
    auto g = squarefree_part(k, m);
    if (!g || upoly::degree(*g) < 1) continue;
    if (nil_dim && static_cast<std::size_t>(upoly::degree(*g)) == block_dim - *nil_dim) {
      auto irr = is_irreducible(k, *g);
      if (irr && *irr)
        return {BlockVerdict::Connected, {}, {}, "probe generates the reduced block as a field"};
    }
    if (upoly::degree(*g) < 2) continue;
    auto fac = factor_squarefree(k, *g);
    if (fac.factors.size() < 2) {
      if (!fac.complete) note = fac.reason;
      continue;
    }
    const UPoly& g1 = fac.factors[0];
    UPoly g2 = upoly::exact_quo(k, *g, g1);
    auto [one, s, t] = upoly::xgcd(k, g1, g2);
    (void)s;
    Vec eps = alg.evaluate(upoly::mul(k, t, g2), a, e);
    for (std::size_t it = 0; it <= d && !alg.equal(alg.mul(eps, eps), eps); ++it) {
      Vec sq = alg.mul(eps, eps);
      Vec cube = alg.mul(sq, eps);
      eps = alg.sub(alg.scale(sq, k.from_int(3)), alg.scale(cube, k.from_int(2)));
    }
    if (!alg.equal(alg.mul(eps, eps), eps)) throw InternalError("idempotent lifting did not converge");
    Vec rest = alg.sub(e, eps);
    if (alg.is_zero(eps) || alg.is_zero(rest)) throw InternalError("splitting produced a trivial idempotent");
    return {BlockVerdict::Split, eps, rest,
            "split by " + alg.to_string(a) + " via factor " + upoly::to_string(k, g1, "z")};
  }
  return {BlockVerdict::Unknown, {}, {}, note};
}

}  // namespace

IdempotentDecomposition idempotent_decomposition(const FiniteAlgebra& alg) {
  IdempotentDecomposition out;
  if (alg.dim() == 0) return out;
  const Field& k = alg.field();
  BlockContext ctx{alg, std::nullopt, std::nullopt};
  auto nil = alg.nilradical();
  if (nil.known()) ctx.nil = *nil.value;
  if (finite_field(k)) {
    mpz_class q = field_size(k);
    std::size_t d = alg.dim();
    Matrix f(d, alg.zero());
    for (std::size_t c = 0; c < d; ++c) {
      Vec col = alg.sub(alg.pow(alg.unit_vector(c), q), alg.unit_vector(c));
      for (std::size_t r = 0; r < d; ++r) f[r][c] = col[r];
    }
    ctx.frobenius_fixed = kernel(k, f, d);
  }

  std::vector<Vec> stack{alg.one()};
  while (!stack.empty()) {
    Vec e = std::move(stack.back());
    stack.pop_back();
    BlockResult r = split_block(ctx, e);
    switch (r.verdict) {
      case BlockVerdict::Split:
        out.certificate.push_back(r.note);
        stack.push_back(std::move(r.second));
        stack.push_back(std::move(r.first));
        break;
      case BlockVerdict::Connected:
        out.certificate.push_back("connected: " + r.note);
        out.idempotents.push_back(std::move(e));
        break;
      case BlockVerdict::Unknown:
        out.complete = false;
        out.reason = "ProbeExhausted: " + r.note;
        out.idempotents.push_back(std::move(e));
        break;
    }
  }
  return out;
}

Outcome<std::size_t> component_count(const FiniteAlgebra& alg) {
  auto dec = idempotent_decomposition(alg);
  if (!dec.complete) return Outcome<std::size_t>::unknown(dec.reason);
  return Outcome<std::size_t>::of(dec.count());
}

Outcome<bool> is_field(const FiniteAlgebra& alg) {
  if (alg.dim() == 0) return Outcome<bool>::of(false);
  auto dec = idempotent_decomposition(alg);
  if (dec.complete && dec.count() > 1) return Outcome<bool>::of(false);
  auto nil = alg.nilradical();
  if (nil.known() && !nil.value->empty()) return Outcome<bool>::of(false);
  if (!dec.complete) return Outcome<bool>::unknown(dec.reason);
  if (nil.known()) return Outcome<bool>::of(true);
  if (residue_field(alg)) return Outcome<bool>::of(true);
  return Outcome<bool>::unknown(nil.reason);
}

std::optional<Field> residue_field(const FiniteAlgebra& alg) {
  const Field& k = alg.field();
  if (alg.dim() == 1) return k;
  BlockContext ctx{alg, std::nullopt, std::nullopt};
  for (const Vec& a : block_probes(alg, alg.one(), ctx)) {
    UPoly m = alg.minimal_polynomial(a);
    if (static_cast<std::size_t>(upoly::degree(m)) != alg.dim()) continue;
    auto irr = is_irreducible(k, m);
    if (!irr || !*irr) continue;
    try {
      return Field::extension(k, m, "a");
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// components over a polynomial subring

namespace {

/// Product of the leading coefficients (in v) of a Gröbner basis of I in an
/// order eliminating the other variables first.
Polynomial leading_coefficient_product(const Ideal& ideal, std::size_t v) {
  const Ring& r = ideal.ring();
  std::size_t n = r->nvars();
  std::vector<std::string> names;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i)
    if (i != v) {
      map[i] = names.size();
      names.push_back(r->variables()[i]);
    }
  map[v] = names.size();
  names.push_back(r->variables()[v]);
  Ring ext = PolyRing::make(r->field(), names, MonomialOrder::block_order(n - 1));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rename(g, ext, map));
  auto gb = groebner_basis(ext, gens);
  std::vector<std::size_t> back(n);
  for (std::size_t i = 0; i < n; ++i) back[map[i]] = i;
  Polynomial h = Polynomial::from_int(r, 1);
  for (const auto& g : gb) {
    Exponents lead = g.leading_exp();
    std::vector<Term> lc;
    for (const auto& t : g.terms()) {
      bool same = true;
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (t.exp[i] != lead[i]) same = false;
      if (!same) continue;
      Exponents e(n, 0);
      e[n - 1] = t.exp[n - 1];
      lc.push_back({std::move(e), t.coef});
    }
    h = h * rename(Polynomial::from_terms(ext, std::move(lc)), r, back);
  }
  return h;
}

struct GenericFiber {
  Field kv;
  Ring ring;
  FiniteAlgebra alg;
};

/// K(v)[other variables]/I, when that is zero-dimensional.  Throws
/// MathError("NotFiniteOverSubring") otherwise.
GenericFiber generic_fiber(const Ideal& ideal, std::size_t free_var) {
  const Ring& r = ideal.ring();
  const Field& k = r->field();
  if (free_var >= r->nvars()) throw InternalError("generic_fiber: variable out of range");
  const std::string& vname = r->variables()[free_var];
  if (k.kind() != FieldKind::Rationals && k.kind() != FieldKind::PrimeField)
    throw MathError("NotFiniteOverSubring", "coefficient field " + k.describe() + " cannot be extended by " + vname);
  Field kv = Field::rational_functions(k, vname);
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (i != free_var) rest.push_back(r->variables()[i]);
  Ring rv = PolyRing::make(kv, rest);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(absorb_variable(g, rv, free_var));
  Ideal iv(rv, std::move(gens));
  if (iv.is_unit())
    throw MathError("NotFiniteOverSubring", "the ring is torsion over " + k.describe() + "[" + vname + "]");
  try {
    return {kv, rv, FiniteAlgebra::quotient(iv)};
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
    throw MathError("NotFiniteOverSubring", "not finite over " + k.describe() + "(" + vname + "): " + e.what());
  }
}

bool torsion_free(const Ideal& ideal, std::size_t v) {
  Polynomial h = leading_coefficient_product(ideal, v);
  return ideal.contains(saturate(ideal, h));
}

}  // namespace

Outcome<std::size_t> components_over_subring(const Ideal& ideal, std::size_t free_var) {
  const Ring& r = ideal.ring();
  const Field& k = r->field();
  const std::string& vname = r->variables().at(free_var);
  GenericFiber fiber = generic_fiber(ideal, free_var);
  const Field& kv = fiber.kv;
  const FiniteAlgebra* alg = &fiber.alg;
  if (!torsion_free(ideal, free_var))
    return Outcome<std::size_t>::unknown("the ring has " + vname + "-torsion; integrality test not applicable");

  auto dec = idempotent_decomposition(*alg);
  if (!dec.complete) return Outcome<std::size_t>::unknown(dec.reason);
  std::size_t m = dec.count();
  if (m <= 1) return Outcome<std::size_t>::of(m);
  if (m > kMaxSubsetComponents)
    return Outcome<std::size_t>::unknown("too many generic components (" + std::to_string(m) + ") to test");

  // Integrality of p/d in K[v][x]/I: p in I + (d).
  auto integral = [&](const Vec& coords) {
    UPoly den = upoly::constant(k, k.one());
    for (const auto& c : coords)
      if (!kv.is_zero(c)) {
        const UPoly& d = kv.denominator(c);
        den = upoly::monic(k, upoly::exact_quo(k, upoly::mul(k, den, d), upoly::gcd(k, den, d)));
      }
    std::vector<Term> terms;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (kv.is_zero(coords[j])) continue;
      UPoly num = upoly::mul(k, kv.numerator(coords[j]), upoly::exact_quo(k, den, kv.denominator(coords[j])));
      for (std::size_t dv = 0; dv < num.size(); ++dv) {
        if (k.is_zero(num[dv])) continue;
        Exponents e;
        const Exponents& b = alg->basis()[j];
        for (std::size_t i = 0, bi = 0; i < r->nvars(); ++i) e.push_back(i == free_var ? dv : b[bi++]);
        terms.push_back({std::move(e), num[dv]});
      }
    }
    Polynomial p = Polynomial::from_terms(r, std::move(terms));
    std::vector<Term> dterms;
    for (std::size_t dv = 0; dv < den.size(); ++dv) {
      Exponents e(r->nvars(), 0);
      e[free_var] = static_cast<std::uint32_t>(dv);
      dterms.push_back({std::move(e), den[dv]});
    }
    Polynomial dpoly = Polynomial::from_terms(r, std::move(dterms));
    return ideal.with_generators({dpoly}).contains(p);
  };

  std::vector<unsigned> integral_masks;
  unsigned full = (1u << m) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    Vec sumv = alg->zero();
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) sumv = alg->add(sumv, dec.idempotents[i]);
    if (mask == full || integral(sumv)) integral_masks.push_back(mask);
  }
  std::size_t atoms = 0;
  for (unsigned a : integral_masks) {
    bool minimal = true;
    for (unsigned b : integral_masks)
      if (b != a && (b & a) == b) minimal = false;
    if (minimal) ++atoms;
  }
  return Outcome<std::size_t>::of(atoms);
}

Outcome<std::size_t> component_count(const Ideal& ideal) {
  if (ideal.is_unit()) return Outcome<std::size_t>::of(0);
  try {
    return component_count(FiniteAlgebra::quotient(ideal));
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
  }
  if (ideal.is_zero()) return Outcome<std::size_t>::of(1);
  std::string reason = "no variable makes the ring finite over a polynomial subring";
  for (std::size_t v = 0; v < ideal.ring()->nvars(); ++v) {
    try {
      auto c = components_over_subring(ideal, v);
      if (c.known()) return c;
      reason = c.reason;
    } catch (const MathError& e) {
      if (e.kind() != "NotFiniteOverSubring") throw;
    }
  }
  return Outcome<std::size_t>::unknown(reason);
}

Outcome<bool> is_reduced(const Ideal& ideal) {
  if (ideal.is_zero()) return Outcome<bool>::of(true);
  try {
    auto nil = FiniteAlgebra::quotient(ideal).nilradical();
    if (!nil.known()) return Outcome<bool>::unknown(nil.reason);
    return Outcome<bool>::of(nil.value->empty());
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
  }
  for (std::size_t v = 0; v < ideal.ring()->nvars(); ++v) {
    try {
      GenericFiber fiber = generic_fiber(ideal, v);
      if (!torsion_free(ideal, v)) continue;
      auto nil = fiber.alg.nilradical();
      if (nil.known()) return Outcome<bool>::of(nil.value->empty());
    } catch (const MathError& e) {
      if (e.kind() != "NotFiniteOverSubring") throw;
    }
  }
  return Outcome<bool>::unknown("reducedness of a positive-dimensional ring not decided");
}

Outcome<Ideal> radical(const Ideal& ideal) {
  std::optional<FiniteAlgebra> alg;
  try {
    alg = FiniteAlgebra::quotient(ideal);
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
    auto red = is_reduced(ideal);
    if (red.known() && *red.value) return Outcome<Ideal>::of(ideal);
    return Outcome<Ideal>::unknown("RadicalUnavailable: " + std::string(e.what()));
  }
  const Ring& r = ideal.ring();
  const Field& k = r->field();
  std::vector<Polynomial> extra;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    UPoly m = alg->minimal_polynomial(alg->from_polynomial(Polynomial::variable(r, i)));
    auto g = squarefree_part(k, m);
    if (!g) return Outcome<Ideal>::unknown("RadicalUnavailable: no squarefree part over " + k.describe());
    std::vector<Term> terms;
    for (std::size_t d = 0; d < g->size(); ++d) {
      Exponents e(r->nvars(), 0);
      e[i] = static_cast<std::uint32_t>(d);
      terms.push_back({std::move(e), (*g)[d]});
    }
    extra.push_back(Polynomial::from_terms(r, std::move(terms)));
  }
  return Outcome<Ideal>::of(ideal.with_generators(std::move(extra)));
}

Outcome<std::optional<std::size_t>> generic_variable(const Ideal& ideal) {
  using Result = Outcome<std::optional<std::size_t>>;
  if (ideal.is_unit()) return Result::unknown("the zero ring has no primes");
  try {
    auto alg = FiniteAlgebra::quotient(ideal);
    auto f = is_field(alg);
    if (!f.known()) return Result::unknown(f.reason);
    if (!*f.value) return Result::unknown("the Artinian ring is not a field, hence not a domain");
    return Result::of(std::nullopt);
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
  }
  for (std::size_t v = 0; v < ideal.ring()->nvars(); ++v) {
    try {
      GenericFiber fiber = generic_fiber(ideal, v);
      if (!torsion_free(ideal, v)) continue;
      auto f = is_field(fiber.alg);
      if (f.known() && *f.value) return Result::of(v);
      if (f.known()) return Result::unknown("the generic fiber over " + fiber.kv.describe() + " is not a field");
    } catch (const MathError& e) {
      if (e.kind() != "NotFiniteOverSubring") throw;
    }
  }
  return Result::unknown("no variable presents the ring as a domain finite over a polynomial subring");
}

}  // namespace cartierlab
