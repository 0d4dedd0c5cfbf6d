#include "cartierlab/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "cartierlab/errors.hpp"

namespace cartierlab {

namespace {

constexpr std::uint64_t kFactorSeed = 0x5eedcafe2024ULL;
constexpr int kRationalDegreeLimit = 8;
constexpr long kKroneckerCombinationLimit = 2'000'000;

UPoly one_poly(const Field& k) { return upoly::constant(k, k.one()); }

// ---------------------------------------------------------------------------
// p-th roots and squarefree parts

bool is_finite_field(const Field& k) {
  return k.kind() == FieldKind::PrimeField ||
         (k.kind() == FieldKind::SimpleExtension && k.base().kind() == FieldKind::PrimeField);
}

std::optional<Scalar> pth_root(const Field& k, const Scalar& a) {
  std::uint64_t p = k.characteristic();
  switch (k.kind()) {
    case FieldKind::PrimeField:
      return a;
    case FieldKind::SimpleExtension: {
      if (k.base().kind() != FieldKind::PrimeField) return std::nullopt;
      // Frobenius has order d on F_{p^d}; its inverse is its (d-1)-th power.
      int d = upoly::degree(k.minimal_polynomial());
      Scalar r = a;
      for (int i = 0; i + 1 < d; ++i) r = k.pow(r, p);
      return r;
    }
    case FieldKind::RationalFunctions: {
      Field b = k.base();
      auto root_poly = [&](const UPoly& f) -> std::optional<UPoly> {
        UPoly out;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i % p != 0) {
            if (!b.is_zero(f[i])) return std::nullopt;
            continue;
          }
          out.push_back(f[i]);
        }
        upoly::trim(b, out);
        return out;
      };
      auto n = root_poly(k.numerator(a));
      auto d = root_poly(k.denominator(a));
      if (!n || !d) return std::nullopt;
      return k.from_fraction(*n, *d);
    }
    case FieldKind::Rationals:
      return a;
  }
  return std::nullopt;
}

std::optional<UPoly> pth_root_poly(const Field& k, const UPoly& f) {
  std::uint64_t p = k.characteristic();
  UPoly out;
  for (std::size_t i = 0; i < f.size(); i += p) {
    auto r = pth_root(k, f[i]);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  upoly::trim(k, out);
  return out;
}

UPoly lcm(const Field& k, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  return upoly::monic(k, upoly::exact_quo(k, upoly::mul(k, a, b), upoly::gcd(k, a, b)));
}

std::optional<UPoly> radical(const Field& k, const UPoly& f) {
  if (upoly::degree(f) <= 0) return one_poly(k);
  UPoly df = upoly::derivative(k, f);
  if (df.empty()) {
    auto root = pth_root_poly(k, f);
    if (!root) return std::nullopt;
    return radical(k, *root);
  }
  UPoly g = upoly::gcd(k, f, df);
  UPoly r = upoly::monic(k, upoly::exact_quo(k, f, g));
  if (k.characteristic() == 0) return r;
  for (;;) {
    UPoly h = upoly::gcd(k, g, r);
    if (upoly::degree(h) <= 0) break;
    g = upoly::exact_quo(k, g, h);
  }
  if (upoly::degree(g) <= 0) return r;
  auto root = pth_root_poly(k, g);
  if (!root) return std::nullopt;
  auto rest = radical(k, *root);
  if (!rest) return std::nullopt;
  return lcm(k, r, *rest);
}

// ---------------------------------------------------------------------------
// finite fields: Cantor-Zassenhaus

mpz_class field_order(const Field& k) {
  mpz_class q = static_cast<unsigned long>(k.characteristic());
  if (k.kind() == FieldKind::SimpleExtension) {
    mpz_class base = q;
    int d = upoly::degree(k.minimal_polynomial());
    mpz_pow_ui(q.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d));
  }
  return q;
}

Scalar random_element(const Field& k, std::mt19937_64& rng) {
  std::uint64_t p = k.characteristic();
  if (k.kind() == FieldKind::PrimeField) return k.from_int(static_cast<std::int64_t>(rng() % p));
  Field b = k.base();
  int d = upoly::degree(k.minimal_polynomial());
  UPoly c;
  for (int i = 0; i < d; ++i) c.push_back(b.from_int(static_cast<std::int64_t>(rng() % p)));
  upoly::trim(b, c);
  return Scalar(std::move(c));
}

std::vector<UPoly> equal_degree_split(const Field& k, const UPoly& g, int d, const mpz_class& q,
                                      std::mt19937_64& rng) {
  int n = upoly::degree(g);
  if (n == d) return {g};
  for (;;) {
    UPoly a;
    for (int i = 0; i < n; ++i) a.push_back(random_element(k, rng));
    upoly::trim(k, a);
    if (upoly::degree(a) < 1) continue;
    UPoly b;
    if (k.characteristic() != 2) {
      mpz_class qd;
      mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      mpz_class e = (qd - 1) / 2;
      b = upoly::sub(k, upoly::powmod(k, a, e, g), one_poly(k));
    } else {
      // Absolute trace to F_2 of F_{q^d}.
      long bits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2) - 1) * d;
      UPoly term = upoly::rem(k, a, g);
      b = term;
      for (long i = 1; i < bits; ++i) {
        term = upoly::rem(k, upoly::mul(k, term, term), g);
        b = upoly::add(k, b, term);
      }
    }
    UPoly u = upoly::gcd(k, b, g);
    int du = upoly::degree(u);
    if (du > 0 && du < n) {
      auto left = equal_degree_split(k, u, d, q, rng);
      auto right = equal_degree_split(k, upoly::monic(k, upoly::exact_quo(k, g, u)), d, q, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<UPoly> finite_field_factor(const Field& k, const UPoly& f_in) {
  std::mt19937_64 rng(kFactorSeed);
  mpz_class q = field_order(k);
  UPoly f = upoly::monic(k, f_in);
  UPoly x = upoly::variable(k);
  UPoly h = x;
  std::vector<UPoly> out;
  int d = 0;
  while (upoly::degree(f) >= 2 * (d + 1)) {
    ++d;
    h = upoly::powmod(k, h, q, f);
    UPoly g = upoly::gcd(k, upoly::sub(k, h, x), f);
    if (upoly::degree(g) > 0) {
      auto parts = equal_degree_split(k, g, d, q, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      f = upoly::exact_quo(k, f, g);
      h = upoly::rem(k, h, f);
    }
  }
  if (upoly::degree(f) > 0) out.push_back(upoly::monic(k, f));
  return out;
}

// ---------------------------------------------------------------------------
// rationals: rational roots + Kronecker

using ZPoly = std::vector<mpz_class>;

ZPoly to_primitive_integer(const UPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f) {
    const auto& q = std::get<mpq_class>(c.value);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  ZPoly z;
  mpz_class content = 0;
  for (const auto& c : f) {
    mpq_class v = std::get<mpq_class>(c.value) * den;
    z.push_back(v.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
  }
  if (content != 0 && content != 1)
    for (auto& c : z) c /= content;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

UPoly from_integer(const ZPoly& z) {
  UPoly out;
  for (const auto& c : z) out.push_back(Scalar(mpq_class(c)));
  return out;
}

/// Positive divisors of n != 0, or nothing when n cannot be factored
/// cheaply or has too many divisors.
std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> primes;
  for (unsigned long d = 2; d < 100000 && mpz_class(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        n /= d;
        ++e;
      }
      primes.emplace_back(mpz_class(d), e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    primes.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : primes) {
    std::size_t count = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
    if (divs.size() > 50000) return std::nullopt;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

mpz_class eval_z(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Newton interpolation through integer points; result over QQ.
UPoly interpolate(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  Field qq;
  std::size_t n = xs.size();
  std::vector<mpq_class> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - xs[i]) + dd[i]
    UPoly lin{qq.from_int(-xs[i]), qq.one()};
    result = upoly::add(qq, upoly::mul(qq, result, lin), upoly::constant(qq, Scalar(dd[i])));
  }
  return result;
}

struct KroneckerOutcome {
  std::optional<UPoly> factor;
  bool complete = true;
};

KroneckerOutcome kronecker_factor_of_degree(const ZPoly& f, int k) {
  Field qq;
  UPoly fq = from_integer(f);
  struct Point {
    long x;
    mpz_class y;
    std::vector<mpz_class> divisors;
  };
  std::vector<Point> pts;
  for (long step = 0; step <= 80; ++step) {
    long x = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    mpz_class y = eval_z(f, x);
    if (y == 0) continue;
    auto divs = positive_divisors(y);
    if (!divs) continue;
    pts.push_back({x, y, std::move(*divs)});
  }
  if (static_cast<int>(pts.size()) < k + 1) return {std::nullopt, false};
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
  pts.resize(static_cast<std::size_t>(k) + 1);

  long combos = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    long c = static_cast<long>(pts[i].divisors.size()) * (i == 0 ? 1 : 2);
    if (combos > kKroneckerCombinationLimit / c) return {std::nullopt, false};
    combos *= c;
  }

  std::vector<long> xs;
  for (const auto& p : pts) xs.push_back(p.x);
  std::vector<std::size_t> idx(pts.size(), 0);
  std::vector<mpz_class> ys(pts.size());
  const mpz_class& lead = f.back();
  for (;;) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::size_t nd = pts[i].divisors.size();
      std::size_t j = idx[i];
      ys[i] = (j < nd) ? pts[i].divisors[j] : -pts[i].divisors[j - nd];
    }
    UPoly g = interpolate(xs, ys);
    if (upoly::degree(g) == k) {
      bool integral = true;
      for (const auto& c : g)
        if (std::get<mpq_class>(c.value).get_den() != 1) integral = false;
      if (integral) {
        mpz_class glead = std::get<mpq_class>(g.back().value).get_num();
        if (mpz_divisible_p(lead.get_mpz_t(), glead.get_mpz_t()) && upoly::rem(qq, fq, g).empty())
          return {upoly::monic(qq, g), true};
      }
    }
    // odometer
    std::size_t pos = 0;
    for (; pos < pts.size(); ++pos) {
      std::size_t limit = pts[pos].divisors.size() * (pos == 0 ? 1 : 2);
      if (++idx[pos] < limit) break;
      idx[pos] = 0;
    }
    if (pos == pts.size()) break;
  }
  return {std::nullopt, true};
}

Factorization rational_factor(const UPoly& f_in) {
  Field qq;
  Factorization out;
  ZPoly z = to_primitive_integer(f_in);
  // rational roots
  for (;;) {
    if (z.size() <= 2) break;
    if (z[0] == 0) {
      out.factors.push_back(upoly::variable(qq));
      z.erase(z.begin());
      continue;
    }
    auto num_divs = positive_divisors(z[0]);
    auto den_divs = positive_divisors(z.back());
    if (!num_divs || !den_divs) {
      out.complete = false;
      out.reason = "coefficients too large to enumerate rational roots";
      break;
    }
    bool found = false;
    for (const auto& qd : *den_divs) {
      for (const auto& pn : *num_divs) {
        for (int sign : {1, -1}) {
          mpz_class p = pn * sign;
          mpz_class g;
          mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qd.get_mpz_t());
          if (g != 1) continue;
          // sum a_i p^i q^(n-i)
          mpz_class acc = 0, qpow = 1;
          std::size_t n = z.size() - 1;
          std::vector<mpz_class> qpows(n + 1);
          for (std::size_t i = 0; i <= n; ++i) {
            qpows[i] = qpow;
            qpow *= qd;
          }
          mpz_class ppow = 1;
          for (std::size_t i = 0; i <= n; ++i) {
            acc += z[i] * ppow * qpows[n - i];
            ppow *= p;
          }
          if (acc != 0) continue;
          mpq_class root(p, qd);
          root.canonicalize();
          UPoly lin{qq.from_rational(-root), qq.one()};
          out.factors.push_back(lin);
          UPoly rest = upoly::exact_quo(qq, from_integer(z), lin);
          z = to_primitive_integer(rest);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  int n = static_cast<int>(z.size()) - 1;
  if (n <= 0) return out;
  if (!out.complete || n <= 3) {
    out.factors.push_back(upoly::monic(qq, from_integer(z)));
    return out;
  }
  if (n > kRationalDegreeLimit) {
    out.factors.push_back(upoly::monic(qq, from_integer(z)));
    out.complete = false;
    out.reason = "degree " + std::to_string(n) + " exceeds the rational factorization limit of " +
                 std::to_string(kRationalDegreeLimit);
    return out;
  }
  for (int k = 2; 2 * k <= static_cast<int>(z.size()) - 1;) {
    auto r = kronecker_factor_of_degree(z, k);
    if (!r.complete) {
      out.complete = false;
      out.reason = "Kronecker search exceeded its combination budget";
      break;
    }
    if (!r.factor) {
      ++k;
      continue;
    }
    out.factors.push_back(*r.factor);
    z = to_primitive_integer(upoly::exact_quo(qq, from_integer(z), *r.factor));
  }
  if (z.size() > 1) out.factors.push_back(upoly::monic(qq, from_integer(z)));
  return out;
}

// ---------------------------------------------------------------------------
// rational function fields: v-adic Hensel lifting

using BiPoly = std::vector<UPoly>;  // index = w-degree, entries polynomials in v
using Series = std::vector<UPoly>;  // index = v-degree, entries polynomials in w

Series to_series(const Field& k, const BiPoly& f, int precision) {
  Series s(static_cast<std::size_t>(precision));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f[i].size() && static_cast<int>(j) < precision; ++j) {
      if (k.is_zero(f[i][j])) continue;
      UPoly& slot = s[j];
      if (slot.size() <= i) slot.resize(i + 1, k.zero());
      slot[i] = f[i][j];
    }
  for (auto& p : s) upoly::trim(k, p);
  return s;
}

BiPoly from_series(const Field& k, const Series& s) {
  BiPoly f;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < s[j].size(); ++i) {
      if (k.is_zero(s[j][i])) continue;
      if (f.size() <= i) f.resize(i + 1);
      UPoly& slot = f[i];
      if (slot.size() <= j) slot.resize(j + 1, k.zero());
      slot[j] = s[j][i];
    }
  for (auto& p : f) upoly::trim(k, p);
  return f;
}

Series series_mul(const Field& k, const Series& a, const Series& b, int precision) {
  Series r(static_cast<std::size_t>(precision));
  for (int i = 0; i < precision; ++i) {
    if (a[static_cast<std::size_t>(i)].empty()) continue;
    for (int j = 0; i + j < precision; ++j)
      r[static_cast<std::size_t>(i + j)] =
          upoly::add(k, r[static_cast<std::size_t>(i + j)],
                     upoly::mul(k, a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
  }
  return r;
}

std::pair<Series, Series> hensel_lift_pair(const Field& k, const Series& target, const UPoly& g0,
                                           const UPoly& h0, int precision) {
  auto [gg, s, t] = upoly::xgcd(k, g0, h0);
  (void)t;
  if (upoly::degree(gg) != 0) throw InternalError("Hensel lifting requires coprime factors");
  Series g(static_cast<std::size_t>(precision)), h(static_cast<std::size_t>(precision));
  g[0] = g0;
  h[0] = h0;
  for (int kk = 1; kk < precision; ++kk) {
    UPoly e = target[static_cast<std::size_t>(kk)];
    for (int j = 1; j < kk; ++j)
      e = upoly::sub(k, e, upoly::mul(k, g[static_cast<std::size_t>(j)], h[static_cast<std::size_t>(kk - j)]));
    if (e.empty()) continue;
    UPoly dh = upoly::rem(k, upoly::mul(k, s, e), h0);
    UPoly dg = upoly::exact_quo(k, upoly::sub(k, e, upoly::mul(k, g0, dh)), h0);
    g[static_cast<std::size_t>(kk)] = dg;
    h[static_cast<std::size_t>(kk)] = dh;
  }
  return {g, h};
}

std::optional<BiPoly> bi_divide(const Field& k, BiPoly num, const BiPoly& den) {
  int dd = static_cast<int>(den.size()) - 1;
  BiPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  auto trim_bi = [&](BiPoly& f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
  };
  trim_bi(num);
  while (static_cast<int>(num.size()) - 1 >= dd) {
    int shift_w = static_cast<int>(num.size()) - 1 - dd;
    UPoly lead = num.back();
    q[static_cast<std::size_t>(shift_w)] = lead;
    for (int i = 0; i <= dd; ++i) {
      auto idx = static_cast<std::size_t>(shift_w + i);
      num[idx] = upoly::sub(k, num[idx], upoly::mul(k, lead, den[static_cast<std::size_t>(i)]));
    }
    if (!num.back().empty()) throw InternalError("bivariate division failed to cancel the leading term");
    trim_bi(num);
  }
  if (!num.empty()) return std::nullopt;
  trim_bi(q);
  return q;
}

Factorization rational_function_factor(const Field& field, const UPoly& g_in) {
  Field k = field.base();
  Factorization out;
  UPoly g = upoly::monic(field, g_in);
  int n = upoly::degree(g);

  UPoly lcm_den = one_poly(k);
  for (const auto& c : g) lcm_den = lcm(k, lcm_den, field.denominator(c));
  std::vector<UPoly> lpow{one_poly(k)};
  for (int i = 1; i <= n; ++i) lpow.push_back(upoly::mul(k, lpow.back(), lcm_den));

  BiPoly w(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Scalar& c = g[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(i)] =
        upoly::exact_quo(k, upoly::mul(k, field.numerator(c), lpow[static_cast<std::size_t>(n - i)]),
                         field.denominator(c));
  }

  // Coefficients of monic factors of degree <= n have v-degree <= n * D.
  mpq_class growth = 0;
  for (int i = 0; i < n; ++i) {
    int d = upoly::degree(w[static_cast<std::size_t>(i)]);
    if (d < 0) continue;
    mpq_class r(d, n - i);
    r.canonicalize();
    if (r > growth) growth = r;
  }
  mpq_class nb = growth * n;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), nb.get_num_mpz_t(), nb.get_den_mpz_t());
  int precision = static_cast<int>(fl.get_si()) + 1;

  // good specialization v = c
  std::optional<Scalar> centre;
  UPoly w0;
  long tries = k.kind() == FieldKind::PrimeField ? static_cast<long>(std::min<std::uint64_t>(k.characteristic(), 400))
                                                   : 101;
  for (long step = 0; step < tries && !centre; ++step) {
    long c = k.kind() == FieldKind::PrimeField ? step : ((step % 2 == 0) ? step / 2 : -(step + 1) / 2);
    Scalar cs = k.from_int(c);
    UPoly spec;
    for (const auto& coef : w) spec.push_back(upoly::eval(k, coef, cs));
    upoly::trim(k, spec);
    UPoly d = upoly::derivative(k, spec);
    if (d.empty() || upoly::degree(upoly::gcd(k, spec, d)) != 0) continue;
    centre = cs;
    w0 = spec;
  }
  if (!centre) {
    out.factors.push_back(g);
    out.complete = false;
    out.reason = "no squarefree specialization found over " + field.describe();
    return out;
  }

  Factorization base = factor_squarefree(k, w0);
  if (!base.complete) {
    out.factors.push_back(g);
    out.complete = false;
    out.reason = "specialized factorization incomplete: " + base.reason;
    return out;
  }
  if (base.factors.size() == 1) {
    out.factors.push_back(g);
    return out;
  }

  UPoly shift_fwd{*centre, k.one()};
  UPoly shift_back{k.neg(*centre), k.one()};
  BiPoly shifted = w;
  for (auto& c : shifted) c = upoly::compose(k, c, shift_fwd);

  Series target = to_series(k, shifted, precision);
  std::vector<Series> lifted;
  for (std::size_t i = 0; i + 1 < base.factors.size(); ++i) {
    UPoly rest = one_poly(k);
    for (std::size_t j = i + 1; j < base.factors.size(); ++j) rest = upoly::mul(k, rest, base.factors[j]);
    auto [gi, hi] = hensel_lift_pair(k, target, base.factors[i], rest, precision);
    lifted.push_back(std::move(gi));
    target = std::move(hi);
  }
  lifted.push_back(std::move(target));

  // recombination
  std::vector<BiPoly> true_factors;
  BiPoly remaining = shifted;
  std::vector<std::size_t> pool(lifted.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> choose(size);
    for (std::size_t i = 0; i < size; ++i) choose[i] = i;
    for (;;) {
      Series prod(static_cast<std::size_t>(precision));
      prod[0] = one_poly(k);
      for (std::size_t c : choose) prod = series_mul(k, prod, lifted[pool[c]], precision);
      BiPoly cand = from_series(k, prod);
      if (auto q = bi_divide(k, remaining, cand)) {
        true_factors.push_back(cand);
        remaining = *q;
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(choose.begin(), choose.end(), i) == choose.end()) next.push_back(pool[i]);
        pool = std::move(next);
        found = true;
        break;
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && choose[pos - 1] == pool.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++choose[pos - 1];
      for (std::size_t i = pos; i < size; ++i) choose[i] = choose[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (remaining.size() > 1) true_factors.push_back(remaining);

  for (auto& f : true_factors) {
    for (auto& c : f) c = upoly::compose(k, c, shift_back);
    int deg = static_cast<int>(f.size()) - 1;
    UPoly fz;
    for (int i = 0; i <= deg; ++i) {
      UPoly num = upoly::mul(k, f[static_cast<std::size_t>(i)], lpow[static_cast<std::size_t>(i)]);
      fz.push_back(field.from_fraction(num, lpow[static_cast<std::size_t>(deg)]));
    }
    upoly::trim(field, fz);
    out.factors.push_back(upoly::monic(field, fz));
  }
  return out;
}

}  // namespace

std::optional<UPoly> squarefree_part(const Field& k, const UPoly& f) {
  UPoly g = f;
  upoly::trim(k, g);
  if (g.empty()) throw InternalError("squarefree part of the zero polynomial");
  return radical(k, upoly::monic(k, g));
}

Factorization factor_squarefree(const Field& k, const UPoly& f_in) {
  UPoly f = f_in;
  upoly::trim(k, f);
  if (upoly::degree(f) < 1) throw InternalError("factor_squarefree needs positive degree");
  f = upoly::monic(k, f);
  if (upoly::degree(f) == 1) return {{f}, true, {}};
  if (is_finite_field(k)) return {finite_field_factor(k, f), true, {}};
  switch (k.kind()) {
    case FieldKind::Rationals:
      return rational_factor(f);
    case FieldKind::RationalFunctions:
      return rational_function_factor(k, f);
    default:
      return {{f}, false, "factorization over " + k.describe() + " is not supported"};
  }
}

std::optional<bool> is_irreducible(const Field& k, const UPoly& f) {
  UPoly g = f;
  upoly::trim(k, g);
  if (upoly::degree(g) <= 1) return upoly::degree(g) == 1;
  auto rad = squarefree_part(k, g);
  if (!rad) return std::nullopt;
  if (upoly::degree(*rad) != upoly::degree(g)) return false;
  auto fac = factor_squarefree(k, g);
  if (fac.factors.size() > 1) return false;
  if (!fac.complete) return std::nullopt;
  return true;
}

std::optional<std::vector<Scalar>> roots(const Field& k, const UPoly& f) {
  auto rad = squarefree_part(k, f);
  if (!rad) return std::nullopt;
  std::vector<Scalar> out;
  if (upoly::degree(*rad) < 1) return out;
  auto fac = factor_squarefree(k, *rad);
  if (!fac.complete) return std::nullopt;
  for (const auto& p : fac.factors)
    if (upoly::degree(p) == 1) out.push_back(k.neg(p[0]));
  return out;
}

std::optional<Scalar> field_sqrt(const Field& k, const Scalar& a) {
  if (k.is_zero(a)) return k.zero();
  if (k.characteristic() == 2) {
    if (k.kind() == FieldKind::PrimeField) return a;
    return std::nullopt;
  }
  UPoly f{k.neg(a), k.zero(), k.one()};
  auto r = roots(k, f);
  if (!r || r->empty()) return std::nullopt;
  return r->front();
}

}  // namespace cartierlab
