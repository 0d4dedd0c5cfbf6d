#include <algorithm>

#include "cartierlab/errors.hpp"
#include "cartierlab/field.hpp"

namespace cartierlab::upoly {

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(const Field& k, UPoly& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

UPoly constant(const Field& k, const Scalar& c) {
  if (k.is_zero(c)) return {};
  return {c};
}

UPoly variable(const Field& k) { return {k.zero(), k.one()}; }

UPoly monomial(const Field& k, const Scalar& c, int deg) {
  if (k.is_zero(c)) return {};
  UPoly p(static_cast<std::size_t>(deg) + 1, k.zero());
  p.back() = c;
  return p;
}

const Scalar& leading(const UPoly& p) {
  if (p.empty()) throw InternalError("leading coefficient of the zero polynomial");
  return p.back();
}

bool equal(const Field& k, const UPoly& a, const UPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.equal(a[i], b[i])) return false;
  return true;
}

bool is_one(const Field& k, const UPoly& a) { return a.size() == 1 && k.is_one(a[0]); }

UPoly add(const Field& k, const UPoly& a, const UPoly& b) {
  const UPoly& longer = a.size() >= b.size() ? a : b;
  const UPoly& shorter = a.size() >= b.size() ? b : a;
  UPoly r = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = k.add(r[i], shorter[i]);
  trim(k, r);
  return r;
}

UPoly neg(const Field& k, const UPoly& a) {
  UPoly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(k.neg(c));
  return r;
}

UPoly sub(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), k.zero());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
  trim(k, r);
  return r;
}

UPoly mul(const Field& k, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(k, r);
  return r;
}

UPoly scale(const Field& k, const UPoly& a, const Scalar& c) {
  if (k.is_zero(c)) return {};
  UPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(k.mul(x, c));
  trim(k, r);
  return r;
}

UPoly shift(const Field& k, const UPoly& a, int n) {
  if (a.empty() || n == 0) return a;
  UPoly r(static_cast<std::size_t>(n), k.zero());
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

std::pair<UPoly, UPoly> divmod(const Field& k, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw MathError("DivisionByZero", "polynomial division by zero");
  UPoly r = a;
  trim(k, r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, k.zero());
  Scalar lc_inv = k.inv(b.back());
  bool monic_b = k.is_one(b.back());
  for (int i = degree(r); i >= degree(b); --i) {
    const Scalar& top = r[static_cast<std::size_t>(i)];
    if (k.is_zero(top)) continue;
    Scalar c = monic_b ? top : k.mul(top, lc_inv);
    std::size_t off = static_cast<std::size_t>(i - degree(b));
    q[off] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[off + j] = k.sub(r[off + j], k.mul(c, b[j]));
  }
  trim(k, q);
  trim(k, r);
  return {q, r};
}

UPoly rem(const Field& k, const UPoly& a, const UPoly& b) { return divmod(k, a, b).second; }
UPoly quo(const Field& k, const UPoly& a, const UPoly& b) { return divmod(k, a, b).first; }

UPoly exact_quo(const Field& k, const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(k, a, b);
  if (!r.empty()) throw InternalError("inexact polynomial division");
  return q;
}

UPoly monic(const Field& k, const UPoly& a) {
  if (a.empty() || k.is_one(a.back())) return a;
  return scale(k, a, k.inv(a.back()));
}

UPoly gcd(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(k, x);
  trim(k, y);
  while (!y.empty()) {
    UPoly r = rem(k, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(k, x);
}

std::tuple<UPoly, UPoly, UPoly> xgcd(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  trim(k, r0);
  trim(k, r1);
  UPoly s0 = constant(k, k.one()), s1;
  UPoly t0, t1 = constant(k, k.one());
  while (!r1.empty()) {
    auto [q, r] = divmod(k, r0, r1);
    UPoly s2 = sub(k, s0, mul(k, q, s1));
    UPoly t2 = sub(k, t0, mul(k, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  Scalar c = k.inv(r0.back());
  return {scale(k, r0, c), scale(k, s0, c), scale(k, t0, c)};
}

UPoly derivative(const Field& k, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r;
  r.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(k.mul(a[i], k.from_int(static_cast<std::int64_t>(i))));
  trim(k, r);
  return r;
}

Scalar eval(const Field& k, const UPoly& a, const Scalar& x) {
  Scalar acc = k.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = k.add(k.mul(acc, x), *it);
  return acc;
}

UPoly compose(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = add(k, mul(k, acc, b), constant(k, *it));
  return acc;
}

UPoly powmod(const Field& k, const UPoly& a, const mpz_class& e, const UPoly& m) {
  UPoly result = rem(k, constant(k, k.one()), m);
  UPoly base = rem(k, a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(k, mul(k, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(k, mul(k, result, base), m);
  }
  return result;
}

std::string to_string(const Field& k, const UPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int i = degree(a); i >= 0; --i) {
    const Scalar& c = a[static_cast<std::size_t>(i)];
    if (k.is_zero(c)) continue;
    std::string cs = k.to_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = cs == "1";
    if (i == 0) {
      out += cs;
    } else {
      if (!unit) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace cartierlab::upoly
