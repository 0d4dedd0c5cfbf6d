#include "cartierlab/field.hpp"

#include <sstream>

#include "cartierlab/errors.hpp"
#include "cartierlab/factor.hpp"

namespace cartierlab {

struct Field::Impl {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;
  std::shared_ptr<const Impl> base;
  UPoly modulus;
  std::string symbol;
};

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw MathError("DivisionByZero", "element is not invertible modulo p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

namespace {

const std::shared_ptr<const Field::Impl>& rationals_impl() {
  static const std::shared_ptr<const Field::Impl> q = std::make_shared<const Field::Impl>();
  return q;
}

bool impl_equal(const Field::Impl* a, const Field::Impl* b);

}  // namespace

Field::Field() : impl_(rationals_impl()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime_u64(p))
    throw InputError("FP(" + std::to_string(p) + "): modulus must be a prime below 2^31");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::PrimeField;
  impl->p = p;
  return Field(std::move(impl));
}

Field Field::extension(const Field& base, UPoly m, std::string generator) {
  upoly::trim(base, m);
  if (upoly::degree(m) < 1) throw InputError("extension modulus must have positive degree");
  m = upoly::monic(base, m);
  if (base.kind() == FieldKind::PrimeField || base.kind() == FieldKind::Rationals) {
    auto irr = is_irreducible(base, m);
    if (irr.has_value() && !*irr)
      throw InputError("extension modulus " + upoly::to_string(base, m, generator) +
                       " is reducible over " + base.describe());
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::SimpleExtension;
  impl->p = base.characteristic();
  impl->base = base.impl_;
  impl->modulus = std::move(m);
  impl->symbol = std::move(generator);
  return Field(std::move(impl));
}

Field Field::rational_functions(const Field& base, std::string variable) {
  if (base.kind() != FieldKind::Rationals && base.kind() != FieldKind::PrimeField)
    throw InputError("rational function fields are supported over QQ and FP(p) only");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::RationalFunctions;
  impl->p = base.characteristic();
  impl->base = base.impl_;
  impl->symbol = std::move(variable);
  return Field(std::move(impl));
}

FieldKind Field::kind() const { return impl_->kind; }
std::uint64_t Field::characteristic() const { return impl_->p; }

Field Field::base() const {
  if (!impl_->base) return *this;
  return Field(impl_->base);
}

const UPoly& Field::minimal_polynomial() const { return impl_->modulus; }
const std::string& Field::symbol() const { return impl_->symbol; }

std::string Field::describe() const {
  switch (kind()) {
    case FieldKind::Rationals:
      return "QQ";
    case FieldKind::PrimeField:
      return "FP(" + std::to_string(impl_->p) + ")";
    case FieldKind::SimpleExtension:
      return base().describe() + "[" + symbol() + "]/(" +
             upoly::to_string(base(), impl_->modulus, symbol()) + ")";
    case FieldKind::RationalFunctions:
      return base().describe() + "(" + symbol() + ")";
  }
  return "?";
}

namespace {

bool impl_equal(const Field::Impl* a, const Field::Impl* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->p != b->p || a->symbol != b->symbol) return false;
  if (!impl_equal(a->base.get(), b->base.get())) return false;
  if (!a->base) return true;
  return upoly::equal(Field(a->base), a->modulus, b->modulus);
}

}  // namespace

bool operator==(const Field& a, const Field& b) {
  if (!impl_equal(a.impl_.get(), b.impl_.get())) return false;
  if (a.kind() == FieldKind::SimpleExtension)
    return upoly::equal(a.base(), a.minimal_polynomial(), b.minimal_polynomial());
  return true;
}

// ---------------------------------------------------------------------------
// element access helpers

namespace {

const mpq_class& as_q(const Scalar& s) { return std::get<mpq_class>(s.value); }

}  // namespace

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const { return from_rational(mpq_class(static_cast<long>(n))); }

Scalar Field::from_rational(const mpq_class& q) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return Scalar(q);
    case FieldKind::PrimeField: {
      std::uint64_t den = reduce_mpz(q.get_den(), impl_->p);
      if (den == 0) throw InputError("denominator " + q.get_den().get_str() + " vanishes in " + describe());
      std::uint64_t num = reduce_mpz(q.get_num(), impl_->p);
      return Scalar((num * mod_inverse(den, impl_->p)) % impl_->p);
    }
    case FieldKind::SimpleExtension:
    case FieldKind::RationalFunctions:
      return from_base(base().from_rational(q));
  }
  return Scalar();
}

Scalar Field::from_base(const Scalar& b) const {
  Field k = base();
  UPoly p = upoly::constant(k, b);
  if (kind() == FieldKind::SimpleExtension) return Scalar(std::move(p));
  if (kind() == FieldKind::RationalFunctions)
    return Scalar(RationalFunction{std::move(p), upoly::constant(k, k.one())});
  return b;
}

Scalar Field::generator() const {
  Field k = base();
  if (kind() == FieldKind::SimpleExtension) {
    UPoly x = upoly::variable(k);
    return Scalar(upoly::rem(k, x, impl_->modulus));
  }
  if (kind() == FieldKind::RationalFunctions)
    return Scalar(RationalFunction{upoly::variable(k), upoly::constant(k, k.one())});
  throw InternalError("field " + describe() + " has no generator");
}

bool Field::is_zero(const Scalar& a) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return sgn(as_q(a)) == 0;
    case FieldKind::PrimeField:
      return std::get<std::uint64_t>(a.value) == 0;
    case FieldKind::SimpleExtension:
      return std::get<UPoly>(a.value).empty();
    case FieldKind::RationalFunctions:
      return std::get<RationalFunction>(a.value).num.empty();
  }
  return false;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return as_q(a) == as_q(b);
    case FieldKind::PrimeField:
      return std::get<std::uint64_t>(a.value) == std::get<std::uint64_t>(b.value);
    case FieldKind::SimpleExtension:
      return upoly::equal(base(), std::get<UPoly>(a.value), std::get<UPoly>(b.value));
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RationalFunction>(a.value);
      const auto& y = std::get<RationalFunction>(b.value);
      Field k = base();
      return upoly::equal(k, x.num, y.num) && upoly::equal(k, x.den, y.den);
    }
  }
  return false;
}

bool Field::is_one(const Scalar& a) const { return equal(a, one()); }

Scalar Field::from_fraction(UPoly num, UPoly den) const {
  if (kind() != FieldKind::RationalFunctions) throw InternalError("from_fraction on " + describe());
  Field k = base();
  upoly::trim(k, num);
  upoly::trim(k, den);
  if (den.empty()) throw MathError("DivisionByZero", "zero denominator in " + describe());
  if (num.empty()) return Scalar(RationalFunction{{}, upoly::constant(k, k.one())});
  UPoly g = upoly::gcd(k, num, den);
  if (upoly::degree(g) > 0) {
    num = upoly::exact_quo(k, num, g);
    den = upoly::exact_quo(k, den, g);
  }
  Scalar lc = k.inv(upoly::leading(den));
  return Scalar(RationalFunction{upoly::scale(k, num, lc), upoly::scale(k, den, lc)});
}

const UPoly& Field::numerator(const Scalar& a) const { return std::get<RationalFunction>(a.value).num; }
const UPoly& Field::denominator(const Scalar& a) const { return std::get<RationalFunction>(a.value).den; }

bool Field::is_polynomial(const Scalar& a) const {
  return upoly::degree(std::get<RationalFunction>(a.value).den) == 0;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(as_q(a) + as_q(b)));
    case FieldKind::PrimeField:
      return Scalar((std::get<std::uint64_t>(a.value) + std::get<std::uint64_t>(b.value)) % impl_->p);
    case FieldKind::SimpleExtension:
      return Scalar(upoly::add(base(), std::get<UPoly>(a.value), std::get<UPoly>(b.value)));
    case FieldKind::RationalFunctions: {
      Field k = base();
      const auto& x = std::get<RationalFunction>(a.value);
      const auto& y = std::get<RationalFunction>(b.value);
      if (upoly::equal(k, x.den, y.den)) return from_fraction(upoly::add(k, x.num, y.num), x.den);
      return from_fraction(upoly::add(k, upoly::mul(k, x.num, y.den), upoly::mul(k, y.num, x.den)),
                           upoly::mul(k, x.den, y.den));
    }
  }
  return Scalar();
}

Scalar Field::neg(const Scalar& a) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(-as_q(a)));
    case FieldKind::PrimeField: {
      std::uint64_t v = std::get<std::uint64_t>(a.value);
      return Scalar(v == 0 ? 0 : impl_->p - v);
    }
    case FieldKind::SimpleExtension:
      return Scalar(upoly::neg(base(), std::get<UPoly>(a.value)));
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RationalFunction>(a.value);
      return Scalar(RationalFunction{upoly::neg(base(), x.num), x.den});
    }
  }
  return Scalar();
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind() == FieldKind::Rationals) return Scalar(mpq_class(as_q(a) - as_q(b)));
  return add(a, neg(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(as_q(a) * as_q(b)));
    case FieldKind::PrimeField:
      return Scalar((std::get<std::uint64_t>(a.value) * std::get<std::uint64_t>(b.value)) % impl_->p);
    case FieldKind::SimpleExtension: {
      Field k = base();
      return Scalar(upoly::rem(k, upoly::mul(k, std::get<UPoly>(a.value), std::get<UPoly>(b.value)),
                               impl_->modulus));
    }
    case FieldKind::RationalFunctions: {
      Field k = base();
      const auto& x = std::get<RationalFunction>(a.value);
      const auto& y = std::get<RationalFunction>(b.value);
      if (x.num.empty() || y.num.empty()) return zero();
      return from_fraction(upoly::mul(k, x.num, y.num), upoly::mul(k, x.den, y.den));
    }
  }
  return Scalar();
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw MathError("DivisionByZero", "inverse of zero in " + describe());
  switch (kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(1 / as_q(a)));
    case FieldKind::PrimeField:
      return Scalar(mod_inverse(std::get<std::uint64_t>(a.value), impl_->p));
    case FieldKind::SimpleExtension: {
      Field k = base();
      auto [g, s, t] = upoly::xgcd(k, std::get<UPoly>(a.value), impl_->modulus);
      (void)t;
      if (upoly::degree(g) != 0) throw MathError("DivisionByZero", "zero divisor in " + describe());
      return Scalar(upoly::rem(k, s, impl_->modulus));
    }
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RationalFunction>(a.value);
      return from_fraction(x.den, x.num);
    }
  }
  return Scalar();
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (kind() == FieldKind::Rationals) {
    if (sgn(as_q(b)) == 0) throw MathError("DivisionByZero", "division by zero in QQ");
    return Scalar(mpq_class(as_q(a) / as_q(b)));
  }
  return mul(a, inv(b));
}

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  Scalar result = one();
  Scalar base_power = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base_power);
    e >>= 1;
    if (e > 0) base_power = mul(base_power, base_power);
  }
  return result;
}

std::string Field::to_string(const Scalar& a) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return as_q(a).get_str();
    case FieldKind::PrimeField:
      return std::to_string(std::get<std::uint64_t>(a.value));
    case FieldKind::SimpleExtension: {
      const auto& p = std::get<UPoly>(a.value);
      std::string s = upoly::to_string(base(), p, symbol());
      return p.size() > 1 ? "(" + s + ")" : s;
    }
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RationalFunction>(a.value);
      std::string n = upoly::to_string(base(), x.num, symbol());
      if (upoly::degree(x.den) == 0) return x.num.size() > 1 ? "(" + n + ")" : n;
      return "(" + n + ")/(" + upoly::to_string(base(), x.den, symbol()) + ")";
    }
  }
  return "?";
}

}  // namespace cartierlab
