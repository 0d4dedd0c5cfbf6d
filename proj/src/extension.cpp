#include "cartierlab/extension.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cartierlab/artinian.hpp"
#include "cartierlab/factor.hpp"

namespace cartierlab {

namespace {

std::vector<std::size_t> identity_map(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + offset;
  return m;
}

bool only_tags(const Exponents& e, std::size_t nb) {
  for (std::size_t i = 0; i < nb; ++i)
    if (e[i] != 0) return false;
  return true;
}

/// Exponent vectors in n variables of total degree d, lex-descending.
void monomials_of_degree(std::size_t n, std::uint32_t d, Exponents& cur, std::size_t pos,
                         std::vector<Exponents>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = d + 1; e-- > 0;) {
    cur[pos] = e;
    monomials_of_degree(n, d - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

Extension::Extension(Ideal a, Ideal b, std::vector<Polynomial> images)
    : a_(std::move(a)), b_(std::move(b)), images_(std::move(images)) {
  if (images_.size() != a_.ring()->nvars())
    throw InputError("expected " + std::to_string(a_.ring()->nvars()) + " images, got " +
                     std::to_string(images_.size()));
  if (a_.ring()->field() != b_.ring()->field())
    throw InputError("A and B must have the same coefficient field");
  for (auto& im : images_) {
    if (!im.ring()->same_as(*b_.ring())) throw InputError("image does not live in B's ring");
    im = b_.normal_form(im);
  }
  build_graph();
}

void Extension::build_graph() {
  const Ring& rb = b_.ring();
  std::size_t nb = rb->nvars();
  std::vector<std::string> names = rb->variables();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& v : a_.ring()->variables()) {
    std::string n = v;
    while (used.count(n)) n += "_a";
    used.insert(n);
    names.push_back(n);
  }
  graph_ring_ = PolyRing::make(rb->field(), names, MonomialOrder::block_order(nb));
  std::vector<Polynomial> gens;
  auto into = identity_map(nb);
  for (const auto& g : b_.generators()) gens.push_back(rename(g, graph_ring_, into));
  for (std::size_t i = 0; i < images_.size(); ++i)
    gens.push_back(Polynomial::variable(graph_ring_, nb + i) - rename(images_[i], graph_ring_, into));
  graph_ = std::make_shared<const Ideal>(graph_ring_, std::move(gens));
}

namespace {

/// Kernel of K[A vars] -> B: the tag-only part of the graph basis.
std::vector<Polynomial> graph_kernel(const Ideal& graph, std::size_t nb, const Ring& target) {
  std::vector<std::size_t> back(graph.ring()->nvars(), 0);
  for (std::size_t i = nb; i < back.size(); ++i) back[i] = i - nb;
  std::vector<Polynomial> out;
  for (const auto& g : graph.groebner())
    if (only_tags(g.leading_exp(), nb)) out.push_back(rename(g, target, back));
  return out;
}

}  // namespace

Extension Extension::make(Ideal a, Ideal b, std::vector<Polynomial> images, ExtensionHints hints,
                          bool assume_injective) {
  Extension ext(std::move(a), std::move(b), std::move(images));
  ext.hints_ = std::move(hints);
  ext.assumed_ = assume_injective;
  for (const auto& rel : ext.a_.generators()) {
    Polynomial img = ext.map(rel);
    if (!img.is_zero())
      throw MathError("NotWellDefined", "relation " + rel.to_string() + " maps to " + img.to_string() +
                                            " in B");
  }
  if (!assume_injective) {
    for (const auto& k : graph_kernel(*ext.graph_, ext.b_ring()->nvars(), ext.a_ring()))
      if (!ext.a_.contains(k))
        throw MathError("NotInjective", k.to_string() + " maps to zero in B but is not zero in A");
  }
  return ext;
}

Extension Extension::from_kernel(const Ideal& b, const std::vector<std::string>& names,
                                 std::vector<Polynomial> images) {
  Ring ra = PolyRing::make(b.ring()->field(), names);
  Extension ext(Ideal(ra), b, std::move(images));
  ext.a_ = Ideal(ra, graph_kernel(*ext.graph_, b.ring()->nvars(), ra));
  return ext;
}

Polynomial Extension::map(const Polynomial& a) const {
  return b_.normal_form(substitute(a, b_.ring(), images_));
}

Polynomial Extension::reduce_b(const Polynomial& b) const { return b_.normal_form(b); }

namespace {

std::pair<Polynomial, Polynomial> split_normal_form(const Ideal& graph, std::size_t nb, const Polynomial& nf) {
  std::vector<Term> tags, rest;
  for (const auto& t : nf.terms()) (only_tags(t.exp, nb) ? tags : rest).push_back(t);
  return {Polynomial::from_terms(graph.ring(), std::move(tags)),
          Polynomial::from_terms(graph.ring(), std::move(rest))};
}

}  // namespace

SubalgebraMembership Extension::contains(const Polynomial& b) const {
  std::size_t nb = b_ring()->nvars();
  Polynomial nf = graph_->normal_form(rename(b, graph_ring_, identity_map(nb)));
  auto [tags, rest] = split_normal_form(*graph_, nb, nf);
  SubalgebraMembership m{reduce_b(b), rest.is_zero(), std::nullopt};
  if (m.member) {
    std::vector<std::size_t> back(graph_ring_->nvars(), 0);
    for (std::size_t i = nb; i < back.size(); ++i) back[i] = i - nb;
    m.preimage = a_.normal_form(rename(tags, a_ring(), back));
  }
  return m;
}

Polynomial Extension::outside_part(const Polynomial& b) const {
  std::size_t nb = b_ring()->nvars();
  Polynomial nf = graph_->normal_form(rename(b, graph_ring_, identity_map(nb)));
  return split_normal_form(*graph_, nb, nf).second;
}

bool Extension::is_surjective() const {
  for (std::size_t i = 0; i < b_ring()->nvars(); ++i)
    if (!outside_part(Polynomial::variable(b_ring(), i)).is_zero()) return false;
  return true;
}

bool Extension::is_seminormal_witness(const Polynomial& b) const {
  return contains(b * b).member && contains(b.pow(3)).member && !contains(b).member;
}

bool Extension::is_anodal_witness(const Polynomial& b) const {
  Polynomial b2 = b * b;
  return contains(b2 - b).member && contains(b2 * b - b2).member && !contains(b).member;
}

Extension Extension::adjoin(const Polynomial& b, const std::string& stem) const {
  std::vector<std::string> names = a_ring()->variables();
  std::string n = fresh_name(*a_ring(), stem);
  while (b_ring()->index_of(n)) n += "_";
  names.push_back(n);
  auto imgs = images_;
  imgs.push_back(reduce_b(b));
  Extension ext = from_kernel(b_, names, std::move(imgs));
  ext.hints_.finite = hints_.finite;
  ext.hints_.birational = hints_.birational;
  ext.assumed_ = assumed_;
  return ext;
}

std::string presentation(const Ideal& i) {
  std::string r = i.ring()->variables().empty() ? i.ring()->field().describe() : i.ring()->describe();
  if (i.generators().empty()) return r;
  return r + "/" + i.to_string();
}

std::string Extension::describe() const {
  std::ostringstream os;
  os << "A = " << presentation(a_) << " -> B = " << presentation(b_);
  if (!images_.empty()) os << " via ";
  for (std::size_t i = 0; i < images_.size(); ++i)
    os << (i ? ", " : "") << a_ring()->variables()[i] << " |-> " << images_[i].to_string();
  return os.str();
}

namespace {

struct Row {
  Polynomial pivot_part;   // outside part, monic
  Polynomial element;      // in B
};

/// Scalar mu with p == mu * base, if any (base nonzero).
std::optional<Scalar> proportional(const Polynomial& p, const Polynomial& base) {
  const Field& k = base.field();
  if (p.is_zero()) return k.zero();
  Scalar mu = k.div(p.coefficient(base.leading_exp()), base.leading_coef());
  if ((p - base.scale(mu)).is_zero()) return mu;
  return std::nullopt;
}

std::optional<Polynomial> affine_witness(const Extension& ext, WitnessKind kind, const Polynomial& c,
                                         const Polynomial& pc) {
  const Field& k = ext.field();
  const Ring& rb = ext.b_ring();
  auto accept = [&](const Polynomial& w) -> std::optional<Polynomial> {
    bool ok = kind == WitnessKind::Seminormal ? ext.is_seminormal_witness(w) : ext.is_anodal_witness(w);
    if (ok) return ext.reduce_b(w);
    return std::nullopt;
  };
  if (k.characteristic() == 2) {
    for (int beta = 0; beta < 2; ++beta)
      if (auto w = accept(c + Polynomial::from_int(rb, beta))) return w;
    return std::nullopt;
  }
  Polynomial c2 = ext.reduce_b(c * c);
  auto mu = proportional(ext.outside_part(c2), pc);
  if (!mu) return std::nullopt;
  auto nu = proportional(ext.outside_part(ext.reduce_b(c2 * c)), pc);
  if (!nu) return std::nullopt;
  Scalar two = k.from_int(2), three = k.from_int(3), four = k.from_int(4);
  Scalar mu2 = k.mul(*mu, *mu);
  if (kind == WitnessKind::Seminormal) {
    if (!k.equal(k.mul(four, *nu), k.mul(three, mu2))) return std::nullopt;
    return accept(c - Polynomial::constant(rb, k.div(*mu, two)));
  }
  Scalar disc = k.sub(k.mul(four, *nu), k.mul(three, mu2));
  if (k.is_zero(disc)) return std::nullopt;
  auto s = field_sqrt(k, disc);
  if (!s) return std::nullopt;
  Scalar alpha = k.inv(*s);
  Scalar beta = k.div(k.sub(k.one(), k.mul(alpha, *mu)), two);
  return accept(c.scale(alpha) + Polynomial::constant(rb, beta));
}

std::optional<Polynomial> scan(const Extension& ext, WitnessKind kind, unsigned bound, std::size_t& tested) {
  const Ring& rb = ext.b_ring();
  const Field& k = ext.field();
  std::size_t n = rb->nvars();
  std::vector<Row> rows;
  std::vector<Exponents> monos;
  Exponents cur(n, 0);
  for (std::uint32_t d = 0; d <= bound; ++d) {
    if (n == 0) {
      if (d == 0) monos.push_back(cur);
      continue;
    }
    monomials_of_degree(n, d, cur, 0, monos);
  }
  for (const auto& e : monos) {
    Polynomial c = ext.reduce_b(Polynomial::monomial(rb, e, k.one()));
    if (c.is_zero()) continue;
    Polynomial pc = ext.outside_part(c);
    for (const auto& row : rows) {
      Scalar f = pc.coefficient(row.pivot_part.leading_exp());
      if (k.is_zero(f)) continue;
      pc = pc - row.pivot_part.scale(f);
      c = c - row.element.scale(f);
    }
    if (pc.is_zero()) continue;
    ++tested;
    if (auto w = affine_witness(ext, kind, c, pc)) return w;
    Scalar inv = k.inv(pc.leading_coef());
    Row row{pc.scale(inv), c.scale(inv)};
    for (auto& r : rows) {
      Scalar f = r.pivot_part.coefficient(row.pivot_part.leading_exp());
      if (k.is_zero(f)) continue;
      r.pivot_part = r.pivot_part - row.pivot_part.scale(f);
      r.element = r.element - row.element.scale(f);
    }
    rows.push_back(std::move(row));
  }
  return std::nullopt;
}

constexpr std::size_t kMaxAdjoined = 32;

}  // namespace

ClosureResult closure_search(const Extension& ext, WitnessKind kind, unsigned degree_bound) {
  if (degree_bound < 1) throw InputError("degree bound must be at least 1");
  ClosureResult res{ext, {}, true, 0};
  for (;;) {
    if (res.extension.is_surjective()) {
      res.exhausted = false;
      return res;
    }
    auto w = scan(res.extension, kind, degree_bound, res.candidates_tested);
    if (!w) return res;
    res.witnesses.push_back(*w);
    if (res.witnesses.size() > kMaxAdjoined)
      throw ResourceLimit("closure search adjoined more than " + std::to_string(kMaxAdjoined) + " elements");
    res.extension = res.extension.adjoin(*w, "w");
  }
}

Conductor conductor(const Extension& ext) {
  const auto& h = ext.hints();
  if (h.module_generators.empty()) throw MathError("MissingHints", "conductor needs module_generators");
  if (h.fractions.size() != h.module_generators.size())
    throw MathError("MissingHints", "conductor needs one fraction per module generator");
  const Ideal& ia = ext.a();
  Ideal c = Ideal::unit(ext.a_ring());
  for (std::size_t j = 0; j < h.fractions.size(); ++j) {
    const auto& [p, q] = h.fractions[j];
    const Polynomial& bj = h.module_generators[j];
    Polynomial qb = ext.map(q);
    if (qb.is_zero()) throw MathError("MissingHints", "fraction denominator " + q.to_string() + " is zero in B");
    if (!ext.reduce_b(qb * bj - ext.map(p)).is_zero())
      throw MathError("MissingHints", "fraction (" + p.to_string() + ")/(" + q.to_string() +
                                          ") does not equal " + bj.to_string() + " in B");
    c = intersect(c, colon(ia.with_generators({q}), p));
  }
  Conductor out{c, {}, c.is_unit(), {}};
  for (const auto& g : c.groebner())
    if (!ia.normal_form(g).is_zero()) out.generators.push_back(g);
  for (const auto& g : out.generators)
    for (const auto& bj : h.module_generators) {
      auto m = ext.contains(ext.map(g) * bj);
      if (!m.member)
        throw InternalError("CertificateFailure: " + g.to_string() + " * " + bj.to_string() + " is not in A");
      out.certificate.push_back("(" + g.to_string() + ")*(" + bj.to_string() + ") = " + m.preimage->to_string());
    }
  return out;
}

Extension reduce_mod_conductor(const Extension& ext, const Conductor& c) {
  if (c.unit) throw MathError("Degenerate", "the conductor is the unit ideal");
  std::vector<Polynomial> pushed;
  for (const auto& g : c.generators) pushed.push_back(ext.map(g));
  ExtensionHints h;
  h.finite = ext.hints().finite;
  return Extension::make(ext.a().with_generators(c.generators), ext.b().with_generators(std::move(pushed)),
                         ext.images(), std::move(h), ext.injectivity_assumed());
}

Extension reduce_mod_conductor(const Extension& ext) { return reduce_mod_conductor(ext, conductor(ext)); }

NilComparison nil_comparison(const Extension& ext) {
  std::optional<FiniteAlgebra> alg;
  try {
    alg = FiniteAlgebra::quotient(ext.b());
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
  }
  if (!alg) {
    auto red = is_reduced(ext.b());
    if (red.known() && *red.value) return {NilStatus::Equal, std::nullopt, "B is reduced"};
    return {NilStatus::Unknown, std::nullopt,
            red.known() ? "B is not reduced and not zero-dimensional" : red.reason};
  }
  auto nil = alg->nilradical();
  if (!nil.known()) return {NilStatus::Unknown, std::nullopt, nil.reason};
  for (const auto& v : *nil.value) {
    Polynomial p = alg->to_polynomial(v);
    if (!ext.contains(p).member) return {NilStatus::Differ, p, "nilpotent " + p.to_string() + " of B is not in A"};
  }
  return {NilStatus::Equal, std::nullopt,
          nil.value->empty() ? "B is reduced" : "every nilpotent of B lies in A"};
}

std::string to_string(NilStatus s) {
  switch (s) {
    case NilStatus::Equal: return "equal";
    case NilStatus::Differ: return "differ";
    case NilStatus::Unknown: break;
  }
  return "unknown";
}

std::string to_string(WitnessKind k) { return k == WitnessKind::Seminormal ? "seminormal" : "anodal"; }

}  // namespace cartierlab
