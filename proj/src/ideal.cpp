#include "cartierlab/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "cartierlab/errors.hpp"

namespace cartierlab {

namespace {

std::atomic<std::uint64_t> g_budget{100000};
std::atomic<std::uint64_t> g_used{0};

const Polynomial* find_divisor(const Exponents& e, const std::vector<Polynomial>& g) {
  for (const auto& p : g)
    if (!p.is_zero() && divides(p.leading_exp(), e)) return &p;
  return nullptr;
}

}  // namespace

void set_pair_budget(std::uint64_t budget) { g_budget = budget; }
std::uint64_t pair_budget() { return g_budget; }
std::uint64_t pairs_used() { return g_used; }

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g) {
  const Field& k = f.field();
  std::vector<Term> rest;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    if (const Polynomial* d = find_divisor(lt.exp, g)) {
      Scalar c = k.div(lt.coef, d->leading_coef());
      p = p.sub_mul_term(sub_exp(lt.exp, d->leading_exp()), c, *d);
    } else {
      rest.push_back(lt);
      p = p - Polynomial::monomial(p.ring(), lt.exp, lt.coef);
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rest));
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const Field& k = a.field();
  Exponents l = lcm_exp(a.leading_exp(), b.leading_exp());
  Polynomial left = a.mul_term(sub_exp(l, a.leading_exp()), k.inv(a.leading_coef()));
  Polynomial right = b.mul_term(sub_exp(l, b.leading_exp()), k.inv(b.leading_coef()));
  return left - right;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError("DivisionByZero", "exact division by the zero polynomial");
  const Field& k = a.field();
  Polynomial q(a.ring());
  Polynomial p = a;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    if (!divides(b.leading_exp(), lt.exp)) return std::nullopt;
    Exponents e = sub_exp(lt.exp, b.leading_exp());
    Scalar c = k.div(lt.coef, b.leading_coef());
    q += Polynomial::monomial(a.ring(), e, c);
    p = p.sub_mul_term(e, c, b);
  }
  return q;
}

std::vector<Polynomial> groebner_basis(const Ring& ring, const std::vector<Polynomial>& gens) {
  const PolyRing& r = *ring;
  std::vector<Polynomial> g;
  struct Pair {
    std::size_t i, j;
    Exponents lcm;
    std::uint32_t deg;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Polynomial h) {
    h = h.monic();
    std::size_t k = g.size();
    g.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      Exponents l = lcm_exp(g[i].leading_exp(), g[k].leading_exp());
      std::uint32_t d = total_degree(l);
      pairs.push_back({i, k, std::move(l), d});
      pending.insert({i, k});
    }
  };

  for (const auto& f : gens) {
    Polynomial h = reduce(f, g);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::from_int(ring, 1)};
    add(std::move(h));
  }

  std::uint64_t budget = g_budget;
  std::uint64_t used = 0;
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      const Pair& a = pairs[p];
      const Pair& b = pairs[best];
      if (a.deg != b.deg ? a.deg < b.deg : (a.i != b.i ? a.i < b.i : a.j < b.j)) best = p;
    }
    Pair pr = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({pr.i, pr.j});

    const Exponents& li = g[pr.i].leading_exp();
    const Exponents& lj = g[pr.j].leading_exp();
    if (add_exp(li, lj) == pr.lcm) continue;  // coprime leading monomials
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(g[k].leading_exp(), pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    if (++used > budget)
      throw ResourceLimit("Groebner basis computation exceeded the pair budget of " + std::to_string(budget) +
                          " S-pairs in " + r.describe());
    ++g_used;
    Polynomial h = reduce(s_polynomial(g[pr.i], g[pr.j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::from_int(ring, 1)};
    add(std::move(h));
  }

  // minimalize
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_exp(), g[i].leading_exp())) continue;
      // equal leading monomials: keep the earlier one
      if (g[j].leading_exp() != g[i].leading_exp() || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // interreduce
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead = Polynomial::monomial(ring, minimal[i].leading_exp(), minimal[i].leading_coef());
    Polynomial tail = reduce(minimal[i] - lead, others);
    reduced.push_back((lead + tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return r.compare(a.leading_exp(), b.leading_exp()) < 0;
  });
  return reduced;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.ring() != ring_ && !g.ring()->same_as(*ring_))
      throw InternalError("ideal generator from ring " + g.ring()->describe() + " in " + ring_->describe());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  auto one = Polynomial::from_int(ring, 1);
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->basis) cache_->basis = groebner_basis(ring_, gens_);
  return *cache_->basis;
}

Polynomial Ideal::normal_form(const Polynomial& f) const { return reduce(f, groebner()); }
bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

bool Ideal::is_unit() const {
  const auto& g = groebner();
  return g.size() == 1 && g[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

Ideal Ideal::with_generators(std::vector<Polynomial> more) const {
  std::vector<Polynomial> all = gens_;
  for (auto& m : more) all.push_back(std::move(m));
  return Ideal(ring_, std::move(all));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

std::string fresh_name(const PolyRing& ring, const std::string& stem) {
  if (!ring.index_of(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string name = stem + std::to_string(i);
    if (!ring.index_of(name)) return name;
  }
}

Ideal sum(const Ideal& a, const Ideal& b) { return a.with_generators(b.generators()); }

Ideal product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

namespace {

/// Ring with fresh variables prepended, block order eliminating them.
struct Extended {
  Ring ring;
  std::vector<std::size_t> embed;  // old variable index -> new index
};

Extended prepend_variables(const Ring& base, const std::vector<std::string>& stems) {
  std::vector<std::string> names;
  for (const auto& s : stems) {
    std::string n = fresh_name(*base, s);
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "_";
    names.push_back(n);
  }
  std::size_t k = names.size();
  for (const auto& v : base->variables()) names.push_back(v);
  Extended out{PolyRing::make(base->field(), names, MonomialOrder::block_order(k)), {}};
  for (std::size_t i = 0; i < base->nvars(); ++i) out.embed.push_back(i + k);
  return out;
}

Ideal drop_leading_block(const Ring& ext, std::size_t k, const std::vector<Polynomial>& gens, const Ring& target) {
  auto gb = groebner_basis(ext, gens);
  std::vector<std::size_t> back(ext->nvars(), 0);
  for (std::size_t i = k; i < ext->nvars(); ++i) back[i] = i - k;
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool free_of_block = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < k; ++i)
        if (t.exp[i] != 0) free_of_block = false;
    if (free_of_block) kept.push_back(rename(g, target, back));
  }
  return Ideal(target, std::move(kept));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  auto ext = prepend_variables(a.ring(), {"u"});
  Polynomial u = Polynomial::variable(ext.ring, std::size_t{0});
  Polynomial one_minus_u = Polynomial::from_int(ext.ring, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(u * rename(f, ext.ring, ext.embed));
  for (const auto& g : b.generators()) gens.push_back(one_minus_u * rename(g, ext.ring, ext.embed));
  return drop_leading_block(ext.ring, 1, gens, a.ring());
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(a.ring());
  Ideal meet = intersect(a, Ideal(a.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = exact_divide(g, f);
    if (!q) throw InternalError("colon: intersection generator not divisible by " + f.to_string());
    gens.push_back(*q);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  if (b.is_zero()) return Ideal::unit(a.ring());
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    Ideal c = colon(a, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(a.ring());
  auto ext = prepend_variables(a.ring(), {"z"});
  Polynomial z = Polynomial::variable(ext.ring, std::size_t{0});
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(rename(g, ext.ring, ext.embed));
  gens.push_back(Polynomial::from_int(ext.ring, 1) - z * rename(f, ext.ring, ext.embed));
  return drop_leading_block(ext.ring, 1, gens, a.ring());
}

Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars, const Ring& target) {
  const Ring& r = a.ring();
  std::vector<bool> gone(r->nvars(), false);
  for (auto v : vars) gone.at(v) = true;
  std::vector<std::string> names;
  std::vector<std::size_t> map(r->nvars());
  std::size_t k = 0;
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (gone[i]) {
      map[i] = names.size();
      names.push_back(r->variables()[i]);
    }
  k = names.size();
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (!gone[i]) {
      map[i] = names.size();
      names.push_back(r->variables()[i]);
    }
  if (target->nvars() != r->nvars() - k) throw InternalError("eliminate: target ring has the wrong variables");
  Ring ext = PolyRing::make(r->field(), names, MonomialOrder::block_order(k));
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(rename(g, ext, map));
  return drop_leading_block(ext, k, gens, target);
}

Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars) {
  const Ring& r = a.ring();
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (std::find(vars.begin(), vars.end(), i) == vars.end()) keep.push_back(r->variables()[i]);
  MonomialOrder order = r->order().kind == OrderKind::Lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
  return eliminate(a, vars, PolyRing::make(r->field(), keep, order));
}

}  // namespace cartierlab
