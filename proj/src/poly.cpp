#include "cartierlab/poly.hpp"

#include <algorithm>
#include <cctype>

#include "cartierlab/errors.hpp"

namespace cartierlab {

std::string MonomialOrder::describe() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Block:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

PolyRing::PolyRing(Field k, std::vector<std::string> variables, MonomialOrder order)
    : field_(std::move(k)), vars_(std::move(variables)), order_(order) {}

Ring PolyRing::make(Field k, std::vector<std::string> variables, MonomialOrder order) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!valid_identifier(variables[i])) throw InputError("invalid variable name '" + variables[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (variables[j] == variables[i]) throw InputError("duplicate variable name '" + variables[i] + "'");
  }
  if (order.kind == OrderKind::Block && order.block > variables.size())
    throw InternalError("block order prefix longer than the variable list");
  return Ring(new PolyRing(std::move(k), std::move(variables), order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

namespace {

int compare_lex(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int compare_grevlex(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int PolyRing::compare(const Exponents& a, const Exponents& b) const {
  std::size_t n = vars_.size();
  switch (order_.kind) {
    case OrderKind::Lex:
      return compare_lex(a, b, 0, n);
    case OrderKind::Grevlex:
      return compare_grevlex(a, b, 0, n);
    case OrderKind::Block: {
      int c = compare_lex(a, b, 0, order_.block);
      if (c != 0) return c;
      return compare_grevlex(a, b, order_.block, n);
    }
  }
  return 0;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other || (field_ == other.field_ && vars_ == other.vars_ && order_.kind == other.order_.kind &&
                            order_.block == other.order_.block);
}

std::string PolyRing::describe() const {
  std::string s = field_.describe() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  return s + "]";
}

std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(Ring ring, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({Exponents(ring->nvars(), 0), c});
  return p;
}

Polynomial Polynomial::from_int(Ring ring, std::int64_t n) {
  Scalar c = ring->field().from_int(n);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->nvars()) throw InternalError("variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[index] = 1;
  Scalar one = ring->field().one();
  return monomial(std::move(ring), std::move(e), one);
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(Ring ring, Exponents exp, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(exp), c});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  const Field& k = r.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.exp, b.exp) > 0; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exp == t.exp)
      merged.back().coef = k.add(merged.back().coef, t.coef);
    else
      merged.push_back(std::move(t));
  }
  Polynomial p(ring);
  for (auto& t : merged)
    if (!k.is_zero(t.coef)) p.terms_.push_back(std::move(t));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && cartierlab::total_degree(terms_[0].exp) == 0);
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && cartierlab::total_degree(terms_[0].exp) == 0 && field().is_one(terms_[0].coef);
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, cartierlab::total_degree(t.exp));
  return d;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coef;
  return field().zero();
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    for (const auto& t : terms_)
      if (t.exp[i] > 0) {
        out.push_back(i);
        break;
      }
  return out;
}

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring()))
    throw InternalError("polynomials from different rings: " + a.ring()->describe() + " vs " +
                        b.ring()->describe());
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  const Field& k = field();
  const PolyRing& r = *ring_;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = r.compare(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = k.add(terms_[i].coef, o.terms_[j].coef);
      if (!k.is_zero(s)) out.terms_.push_back({terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.exp, field().neg(t.coef)});
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Exponents& e, const Scalar& c) const {
  const Field& k = field();
  Polynomial out(ring_);
  if (k.is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  bool unit = k.is_one(c);
  for (const auto& t : terms_) out.terms_.push_back({add_exp(t.exp, e), unit ? t.coef : k.mul(t.coef, c)});
  return out;
}

Polynomial Polynomial::sub_mul_term(const Exponents& e, const Scalar& c, const Polynomial& g) const {
  return *this - g.mul_term(e, c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  if (terms_.empty() || o.terms_.empty()) return Polynomial(ring_);
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
  if (small.terms_.size() > 8) {
    std::vector<Term> all;
    all.reserve(small.terms_.size() * big.terms_.size());
    const Field& k = field();
    for (const auto& a : small.terms_)
      for (const auto& b : big.terms_) all.push_back({add_exp(a.exp, b.exp), k.mul(a.coef, b.coef)});
    return from_terms(ring_, std::move(all));
  }
  Polynomial acc(ring_);
  for (const auto& t : small.terms_) acc = acc + big.mul_term(t.exp, t.coef);
  return acc;
}

Polynomial Polynomial::scale(const Scalar& c) const { return mul_term(Exponents(ring_->nvars(), 0), c); }

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || field().is_one(terms_[0].coef)) return *this;
  return scale(field().inv(terms_[0].coef));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  const Field& k = field();
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || !k.equal(terms_[i].coef, o.terms_[i].coef)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = field();
  std::string out;
  for (const auto& t : terms_) {
    std::string cs = k.to_string(t.coef);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variables()[i];
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

constexpr std::uint64_t kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, const ParseOptions& opts)
      : s_(text), ring_(ring), opts_(opts) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      skip();
      bool negate = false;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        negate = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = acc * factor();
        continue;
      }
      if (pos_ < s_.size() &&
          (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
        fail("implicit multiplication is not allowed; use '*'");
      if (pos_ < s_.size() && s_[pos_] == '/') fail("division is only allowed between integer literals");
      return acc;
    }
  }

  std::uint64_t integer_value(std::string_view digits) {
    mpz_class z(std::string(digits), 10);
    if (z > kMaxExponent) fail("exponent too large");
    return z.get_ui();
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Polynomial factor() {
    skip();
    std::string name;
    Polynomial b = base(name);
    if (!peek('^')) return b;
    ++pos_;
    skip();
    bool negative = false;
    bool paren = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
      skip();
    }
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip();
    }
    auto d = digits();
    if (d.empty()) fail("expected a nonnegative integer exponent");
    std::uint64_t e = integer_value(d);
    if (paren) {
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    }
    if (!negative) return b.pow(e);
    auto it = name.empty() ? opts_.inverse_names.end() : opts_.inverse_names.find(name);
    if (it == opts_.inverse_names.end()) fail("negative exponents are not allowed here");
    return Polynomial::variable(ring_, it->second).pow(e);
  }

  Polynomial base(std::string& name) {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto num = digits();
      mpq_class q(mpz_class(std::string(num), 10));
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        auto den = digits();
        if (den.empty()) fail("division is only allowed between integer literals");
        mpz_class d(std::string(den), 10);
        if (d == 0) fail("zero denominator");
        q = mpq_class(mpz_class(std::string(num), 10), d);
        q.canonicalize();
      } else {
        pos_ = save;
      }
      try {
        return Polynomial::constant(ring_, ring_->field().from_rational(q));
      } catch (const MathError&) {
        fail("literal is not defined in " + ring_->field().describe());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      name = std::string(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const Ring& ring_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, const ParseOptions& opts) {
  return Parser(text, ring, opts).run();
}

// ---------------------------------------------------------------------------
// ring maps

Polynomial substitute(const Polynomial& f, const Ring& target, const std::vector<Polynomial>& images) {
  if (images.size() != f.ring()->nvars()) throw InternalError("substitute: wrong number of images");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::from_int(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial acc(target);
  for (const auto& t : f.terms()) {
    Polynomial m = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] > 0) m = m * power(i, t.exp[i]);
    acc += m;
  }
  return acc;
}

Polynomial rename(const Polynomial& f, const Ring& target, const std::vector<std::size_t>& index_map) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Exponents e(target->nvars(), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] > 0) e[index_map[i]] += t.exp[i];
    terms.push_back({std::move(e), t.coef});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial absorb_variable(const Polynomial& f, const Ring& target, std::size_t var) {
  const Field& kv = target->field();
  const Field& k = f.field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Exponents e;
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (i != var) e.push_back(t.exp[i]);
    UPoly num = upoly::monomial(k, t.coef, static_cast<int>(t.exp[var]));
    terms.push_back({std::move(e), kv.from_fraction(num, upoly::constant(k, k.one()))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace cartierlab
