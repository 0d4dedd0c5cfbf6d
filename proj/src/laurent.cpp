#include "cartierlab/laurent.hpp"

#include <algorithm>

namespace cartierlab {

LaurentElement::LaurentElement(Base base) : base_(std::move(base)) {
  if (!base_) throw InternalError("Laurent element without a base");
}

LaurentElement LaurentElement::constant(Base base, const Vec& c) { return monomial(std::move(base), c, 0); }

LaurentElement LaurentElement::monomial(Base base, const Vec& c, std::int64_t degree) {
  LaurentElement x(std::move(base));
  x.set(degree, c);
  return x;
}

Vec LaurentElement::coefficient(std::int64_t degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? base_->zero() : it->second;
}

void LaurentElement::set(std::int64_t degree, const Vec& c) {
  if (base_->is_zero(c))
    coeffs_.erase(degree);
  else
    coeffs_[degree] = c;
}

bool LaurentElement::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && base_->equal(coeffs_.begin()->second, base_->one());
}

LaurentElement LaurentElement::operator+(const LaurentElement& o) const {
  LaurentElement r = *this;
  for (const auto& [d, c] : o.coeffs_) r.set(d, base_->add(r.coefficient(d), c));
  return r;
}

LaurentElement LaurentElement::operator-(const LaurentElement& o) const {
  LaurentElement r = *this;
  for (const auto& [d, c] : o.coeffs_) r.set(d, base_->sub(r.coefficient(d), c));
  return r;
}

LaurentElement LaurentElement::operator*(const LaurentElement& o) const {
  LaurentElement r(base_);
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_) r.set(d1 + d2, base_->add(r.coefficient(d1 + d2), base_->mul(c1, c2)));
  return r;
}

LaurentElement LaurentElement::scale(const Vec& c) const {
  LaurentElement r(base_);
  for (const auto& [d, x] : coeffs_) r.set(d, base_->mul(x, c));
  return r;
}

bool LaurentElement::operator==(const LaurentElement& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (const auto& [d, c] : coeffs_) {
    auto it = o.coeffs_.find(d);
    if (it == o.coeffs_.end() || !base_->equal(c, it->second)) return false;
  }
  return true;
}

LaurentElement LaurentElement::positive_part() const {
  LaurentElement r(base_);
  for (const auto& [d, c] : coeffs_)
    if (d > 0) r.coeffs_[d] = c;
  return r;
}

LaurentElement LaurentElement::negative_part() const {
  LaurentElement r(base_);
  for (const auto& [d, c] : coeffs_)
    if (d < 0) r.coeffs_[d] = c;
  return r;
}

std::string LaurentElement::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    Polynomial p = base_->to_polynomial(c);
    std::string cs = p.to_string();
    bool compound = p.terms().size() > 1;
    bool negative = !compound && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string power = d == 1 ? var : var + "^" + (d < 0 ? "(" + std::to_string(d) + ")" : std::to_string(d));
    if (d == 0) {
      out += compound ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      out += power;
    } else {
      out += (compound ? "(" + cs + ")" : cs) + "*" + power;
    }
  }
  return out;
}

LaurentElement parse_laurent(std::string_view text, const Base& base, const std::string& var) {
  const Ring& rb = base->ring();
  if (rb->index_of(var)) throw InputError("Laurent variable '" + var + "' clashes with a base variable");
  std::vector<std::string> names = rb->variables();
  names.push_back(var);
  std::string inv = var + "inv";
  while (std::find(names.begin(), names.end(), inv) != names.end()) inv += "_";
  names.push_back(inv);
  Ring r = PolyRing::make(rb->field(), names);
  ParseOptions opts;
  opts.inverse_names[var] = inv;
  Polynomial f = parse_polynomial(text, r, opts);
  std::size_t n = rb->nvars();
  LaurentElement x(base);
  for (const auto& t : f.terms()) {
    std::int64_t d = static_cast<std::int64_t>(t.exp[n]) - static_cast<std::int64_t>(t.exp[n + 1]);
    Exponents e(t.exp.begin(), t.exp.begin() + static_cast<std::ptrdiff_t>(n));
    Vec c = base->from_polynomial(Polynomial::monomial(rb, e, t.coef));
    x.set(d, base->add(x.coefficient(d), c));
  }
  return x;
}

namespace {

/// Negative, zero or positive; numeric on QQ and F_p.
int compare_scalars(const Field& k, const Scalar& a, const Scalar& b) {
  if (const auto* qa = std::get_if<mpq_class>(&a.value)) {
    const auto& qb = std::get<mpq_class>(b.value);
    return cmp(*qa, qb);
  }
  if (const auto* ua = std::get_if<std::uint64_t>(&a.value)) {
    auto ub = std::get<std::uint64_t>(b.value);
    return *ua < ub ? -1 : (*ua > ub ? 1 : 0);
  }
  return k.to_string(a).compare(k.to_string(b));
}

}  // namespace

Outcome<std::vector<Vec>> ordered_idempotents(const FiniteAlgebra& alg) {
  auto dec = idempotent_decomposition(alg);
  if (!dec.complete) return Outcome<std::vector<Vec>>::unknown(dec.reason);
  const Field& k = alg.field();
  auto ids = dec.idempotents;
  std::sort(ids.begin(), ids.end(), [&](const Vec& a, const Vec& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      int c = compare_scalars(k, a[i], b[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  return Outcome<std::vector<Vec>>::of(std::move(ids));
}

namespace {

/// Degree n_i of x on each component, or the reason x is not a unit.
struct ComponentDegrees {
  std::vector<Vec> idempotents;
  std::vector<std::int64_t> degrees;
  std::string failure;
};

ComponentDegrees component_degrees(const LaurentElement& x) {
  const FiniteAlgebra& r = x.base();
  auto ids = ordered_idempotents(r);
  if (!ids.known()) throw MathError("Undecided", "idempotents of the base: " + ids.reason);
  ComponentDegrees out{*ids.value, {}, {}};
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    const Vec& e = out.idempotents[i];
    std::vector<std::int64_t> live;
    for (const auto& [d, c] : x.coefficients())
      if (!r.is_nilpotent(r.mul(c, e))) live.push_back(d);
    if (live.size() != 1) {
      out.failure = "component " + std::to_string(i + 1) + " has " + std::to_string(live.size()) +
                    " non-nilpotent coefficients";
      return out;
    }
    out.degrees.push_back(live.front());
  }
  return out;
}

/// (1 + a)^-1 for a with nilpotent coefficients supported on one side.
LaurentElement inverse_one_plus(const LaurentElement& a, std::size_t max_terms) {
  LaurentElement one = LaurentElement::constant(a.base_ptr(), a.base().one());
  LaurentElement sum = one, term = one;
  for (std::size_t j = 0; j < max_terms; ++j) {
    term = term * a;
    if (term.is_zero()) return sum;
    sum = (j % 2 == 0) ? sum - term : sum + term;
  }
  throw InternalError("geometric series did not terminate");
}

}  // namespace

Outcome<bool> is_laurent_unit(const LaurentElement& x) {
  try {
    auto c = component_degrees(x);
    return Outcome<bool>::of(c.failure.empty());
  } catch (const MathError& e) {
    if (e.kind() != "Undecided") throw;
    return Outcome<bool>::unknown(e.what());
  }
}

LaurentElement LaurentUnitDecomposition::recompose() const {
  const Base& b = p_part.base_ptr();
  LaurentElement shift(b);
  for (std::size_t i = 0; i < idempotents.size(); ++i)
    shift = shift + LaurentElement::monomial(b, idempotents[i], exponents[i]);
  return LaurentElement::constant(b, u0) * shift * p_part * q_part;
}

LaurentUnitDecomposition bass_decompose(const LaurentElement& x) {
  const FiniteAlgebra& r = x.base();
  const Base& b = x.base_ptr();
  auto comp = component_degrees(x);
  if (!comp.failure.empty()) throw MathError("NotAUnit", x.to_string() + ": " + comp.failure);
  LaurentElement unshift(b);
  for (std::size_t i = 0; i < comp.idempotents.size(); ++i)
    unshift = unshift + LaurentElement::monomial(b, comp.idempotents[i], -comp.degrees[i]);
  LaurentElement w = x * unshift;
  LaurentElement one = LaurentElement::constant(b, r.one());
  Vec u = r.one();
  LaurentElement p = one, q = one;
  std::size_t limit = r.dim() + 2;
  // Each round pushes the deviation of w from 1 one step deeper into the
  // nilradical.
  for (std::size_t round = 0; !w.is_one(); ++round) {
    if (round > limit) throw InternalError("Bass decomposition did not converge");
    Vec w0 = w.coefficient(0);
    auto w0inv = r.inverse(w0);
    if (!w0inv) throw InternalError("constant coefficient is not a unit");
    u = r.mul(u, w0);
    w = w.scale(*w0inv);
    LaurentElement pos = w.positive_part();
    if (!pos.is_zero()) {
      p = p * (one + pos);
      w = w * inverse_one_plus(pos, limit);
    }
    LaurentElement neg = w.negative_part();
    if (!neg.is_zero()) {
      q = q * (one + neg);
      w = w * inverse_one_plus(neg, limit);
    }
  }
  return {u, comp.idempotents, comp.degrees, p, q};
}

Outcome<std::size_t> lu_rank(const FiniteAlgebra& base) { return component_count(base); }

}  // namespace cartierlab
