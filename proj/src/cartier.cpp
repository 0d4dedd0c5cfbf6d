#include "cartierlab/cartier.hpp"

#include <algorithm>

#include "cartierlab/artinian.hpp"

namespace cartierlab {

using nlohmann::json;

namespace {

std::string ideal_string(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
  return s + ")";
}

std::string label_for(const Extension& ext) {
  return ext.hints().finite.value_or(false) ? "henselized stalk" : "fiber components only";
}

void set_components(StalkReport& r, const Ideal& fiber, Outcome<std::size_t> count) {
  r.fiber = presentation(fiber);
  r.empty = fiber.is_unit();
  if (r.empty) {
    r.fiber_components = Outcome<std::size_t>::of(0);
    r.stalk_rank = 0;
    return;
  }
  r.fiber_components = std::move(count);
  if (r.fiber_components.known()) r.stalk_rank = *r.fiber_components.value - 1;
}

/// B tensor_{K[v]} K(v) with v -> phi(v), as an ideal over K(v).
Ideal generic_fiber_ideal(const Extension& ext, std::size_t v) {
  const Ring& rb = ext.b_ring();
  const Field& k = rb->field();
  std::string z = ext.a_ring()->variables()[v];
  while (rb->index_of(z)) z += "_A";
  std::vector<std::string> names = rb->variables();
  names.push_back(z);
  Ring big = PolyRing::make(k, names);
  std::vector<std::size_t> into(rb->nvars());
  for (std::size_t i = 0; i < into.size(); ++i) into[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ext.b().generators()) gens.push_back(rename(g, big, into));
  gens.push_back(rename(ext.images()[v], big, into) - Polynomial::variable(big, rb->nvars()));
  Field kv = Field::rational_functions(k, z);
  Ring fr = PolyRing::make(kv, rb->variables());
  std::vector<Polynomial> absorbed;
  for (const auto& g : gens) absorbed.push_back(absorb_variable(g, fr, rb->nvars()));
  return Ideal(fr, std::move(absorbed));
}

Outcome<std::size_t> count_components(const Ideal& fiber) {
  try {
    return component_count(fiber);
  } catch (const MathError& e) {
    return Outcome<std::size_t>::unknown(e.what());
  }
}

}  // namespace

json StalkReport::to_json() const {
  json j;
  j["prime"] = prime;
  j["generic"] = generic;
  j["residue_field"] = residue_field;
  j["fiber"] = fiber;
  j["empty"] = empty;
  if (fiber_components.known())
    j["fiber_components"] = *fiber_components.value;
  else
    j["fiber_components"] = "Unknown: " + fiber_components.reason;
  j["stalk_rank"] = stalk_rank ? json(*stalk_rank) : json(nullptr);
  j["label"] = label;
  return j;
}

StalkReport stalk_rank(const Extension& ext, const std::vector<Polynomial>& prime) {
  const Ideal& ia = ext.a();
  Ideal p = ia.with_generators(prime);
  if (ia.contains(p)) return generic_stalk(ext);
  std::optional<FiniteAlgebra> quotient;
  try {
    quotient = FiniteAlgebra::quotient(p);
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
    throw MathError("NotPrime", ideal_string(prime) + ": only maximal and generic primes supported");
  }
  if (quotient->dim() == 0) throw MathError("NotPrime", ideal_string(prime) + " is the unit ideal of A");
  auto field = is_field(*quotient);
  if (!field.known()) throw MathError("NotPrime", ideal_string(prime) + ": " + field.reason);
  if (!*field.value) throw MathError("NotPrime", ideal_string(prime) + " is not a maximal ideal of A");
  StalkReport r;
  r.prime = ideal_string(prime);
  auto kp = residue_field(*quotient);
  r.residue_field = kp ? kp->describe() : "degree " + std::to_string(quotient->dim()) + " extension";
  std::vector<Polynomial> pushed;
  for (const auto& g : prime) pushed.push_back(ext.map(g));
  Ideal fiber = ext.b().with_generators(std::move(pushed));
  set_components(r, fiber, count_components(fiber));
  r.label = label_for(ext);
  return r;
}

StalkReport generic_stalk(const Extension& ext) {
  auto gv = generic_variable(ext.a());
  if (!gv.known()) throw MathError("NotPrime", "(0) is not known to be prime: " + gv.reason);
  if (!*gv.value) {
    // A is a field: (0) is maximal.
    auto quotient = FiniteAlgebra::quotient(ext.a());
    StalkReport r;
    r.prime = "(0)";
    r.generic = true;
    auto kp = residue_field(quotient);
    r.residue_field = kp ? kp->describe() : "degree " + std::to_string(quotient.dim()) + " extension";
    set_components(r, ext.b(), count_components(ext.b()));
    r.label = label_for(ext);
    return r;
  }
  std::size_t v = **gv.value;
  Ideal fiber = generic_fiber_ideal(ext, v);
  StalkReport r;
  r.prime = "(0)";
  r.generic = true;
  r.residue_field = "Frac(A), of finite degree over " + fiber.ring()->field().describe();
  Outcome<std::size_t> count = Outcome<std::size_t>::unknown("");
  try {
    count = component_count(FiniteAlgebra::quotient(fiber));
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
    count = Outcome<std::size_t>::unknown("generic fiber is not finite over " + fiber.ring()->field().describe());
  }
  set_components(r, fiber, std::move(count));
  r.label = label_for(ext);
  return r;
}

LIResult LIResult::known(std::int64_t rank, LIMethod m, json cert) {
  LIResult r;
  r.status = LIStatus::Known;
  r.rank = rank;
  r.method = m;
  r.certificate = std::move(cert);
  return r;
}

LIResult LIResult::unknown(std::string why, std::optional<LIMethod> m) {
  LIResult r;
  r.status = LIStatus::Unknown;
  r.method = m;
  r.reason = std::move(why);
  return r;
}

LIResult LIResult::inconclusive(std::string why, LIMethod m, json cert) {
  LIResult r;
  r.status = LIStatus::Inconclusive;
  r.method = m;
  r.reason = std::move(why);
  r.certificate = std::move(cert);
  return r;
}

json LIResult::to_json() const {
  json j;
  j["status"] = to_string(status);
  j["rank"] = rank ? json(*rank) : json(nullptr);
  j["method"] = method ? json(to_string(*method)) : json(nullptr);
  if (!reason.empty()) j["reason"] = reason;
  j["certificate"] = certificate;
  return j;
}

namespace {

json injectivity_note(const Extension& ext) {
  return ext.injectivity_assumed() ? json("assumed (--assume-injective)") : json("checked");
}

}  // namespace

LIResult li_hensel_local(const Extension& ext) {
  std::optional<FiniteAlgebra> a;
  try {
    a = FiniteAlgebra::quotient(ext.a());
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
    throw MathError("NotArtinianLocal", "A is not zero-dimensional");
  }
  auto ca = component_count(*a);
  if (!ca.known()) return LIResult::unknown(ca.reason, LIMethod::HenselLocalFormula);
  if (*ca.value != 1) throw MathError("NotArtinianLocal", "A has " + std::to_string(*ca.value) + " components");
  auto b = FiniteAlgebra::quotient(ext.b());
  auto cb = component_count(b);
  if (!cb.known()) return LIResult::unknown(cb.reason, LIMethod::HenselLocalFormula);
  json cert{{"A_dim", a->dim()},
            {"B_dim", b.dim()},
            {"c_A", *ca.value},
            {"c_B", *cb.value},
            {"injectivity", injectivity_note(ext)}};
  return LIResult::known(static_cast<std::int64_t>(*cb.value) - 1, LIMethod::HenselLocalFormula, cert);
}

LIResult li_finite_connected(const Extension& ext, const std::vector<std::vector<Polynomial>>& primes,
                             bool generic) {
  if (!ext.hints().finite.value_or(false))
    throw MathError("MissingHints", "the connectedness criterion needs hints.finite = true");
  json cert{{"hints_consumed", json::array({"finite"})}, {"injectivity", injectivity_note(ext)}};
  std::optional<FiniteAlgebra> a;
  try {
    a = FiniteAlgebra::quotient(ext.a());
  } catch (const MathError& e) {
    if (e.kind() != "NotZeroDimensional") throw;
  }
  if (a) {
    auto dec = idempotent_decomposition(*a);
    if (!dec.complete) return LIResult::inconclusive(dec.reason, LIMethod::FiniteConnected, cert);
    json fibers = json::array();
    bool connected = true;
    for (const auto& e : dec.idempotents) {
      Polynomial ep = a->to_polynomial(e);
      Ideal fiber = ext.b().with_generators({Polynomial::from_int(ext.b_ring(), 1) - ext.map(ep)});
      auto c = count_components(fiber);
      if (!c.known()) return LIResult::inconclusive(c.reason, LIMethod::FiniteConnected, cert);
      fibers.push_back({{"idempotent", ep.to_string()}, {"components", *c.value}});
      if (*c.value > 1) connected = false;
    }
    cert["fibers"] = fibers;
    cert["scope"] = "all maximal ideals of the Artinian ring A";
    if (!connected) return LIResult::inconclusive("a fiber is disconnected; the criterion gives no vanishing",
                                                  LIMethod::FiniteConnected, cert);
    return LIResult::known(0, LIMethod::FiniteConnected, cert);
  }
  std::vector<StalkReport> stalks;
  for (const auto& p : primes) stalks.push_back(stalk_rank(ext, p));
  if (generic) {
    try {
      stalks.push_back(generic_stalk(ext));
    } catch (const MathError& e) {
      if (e.kind() != "NotPrime") throw;
      cert["generic"] = std::string("skipped: ") + e.what();
    }
  }
  json table = json::array();
  for (const auto& s : stalks) table.push_back(s.to_json());
  cert["stalks"] = table;
  if (primes.empty())
    return LIResult::inconclusive("no primes supplied for a non-Artinian A", LIMethod::FiniteConnected, cert);
  for (const auto& s : stalks) {
    if (!s.stalk_rank)
      return LIResult::inconclusive("stalk at " + s.prime + " unknown: " + s.fiber_components.reason,
                                    LIMethod::FiniteConnected, cert);
    if (*s.stalk_rank > 0)
      return LIResult::inconclusive("stalk rank " + std::to_string(*s.stalk_rank) + " at " + s.prime +
                                        "; the criterion gives no vanishing",
                                    LIMethod::FiniteConnected, cert);
  }
  cert["scope"] = "certified over supplied primes only";
  return LIResult::known(0, LIMethod::FiniteConnected, cert);
}

LIResult li_conductor_square(const Extension& ext) {
  const auto& h = ext.hints();
  if (!h.finite.value_or(false) || !h.birational.value_or(false))
    throw MathError("MissingHints", "the conductor square needs hints.finite and hints.birational");
  Conductor c = conductor(ext);
  json cert{{"hints_consumed", json::array({"finite", "birational", "module_generators", "fractions"})},
            {"injectivity", injectivity_note(ext)}};
  json gens = json::array();
  for (const auto& g : c.generators) gens.push_back(g.to_string());
  cert["conductor"] = gens;
  cert["conductor_certificate"] = c.certificate;
  if (c.unit) {
    cert["note"] = "unit conductor: A = B";
    return LIResult::known(0, LIMethod::ConductorSquare, cert);
  }
  Extension red = reduce_mod_conductor(ext, c);
  auto qa = FiniteAlgebra::quotient(red.a());
  auto qb = FiniteAlgebra::quotient(red.b());
  auto ca = component_count(qa);
  auto cb = component_count(qb);
  cert["A_mod_c"] = presentation(red.a());
  cert["B_mod_c"] = presentation(red.b());
  cert["A_mod_c_dim"] = qa.dim();
  cert["B_mod_c_dim"] = qb.dim();
  if (!ca.known()) return LIResult::unknown(ca.reason, LIMethod::ConductorSquare);
  if (!cb.known()) return LIResult::unknown(cb.reason, LIMethod::ConductorSquare);
  cert["c_A_mod_c"] = *ca.value;
  cert["c_B_mod_c"] = *cb.value;
  return LIResult::known(static_cast<std::int64_t>(*cb.value) - static_cast<std::int64_t>(*ca.value),
                         LIMethod::ConductorSquare, cert);
}

LIResult li_five_term(const RankData& d) {
  if (d.c_A < 0 || d.c_B < 0 || d.lpic_A < 0 || d.lpic_B < 0 || d.lpic_kernel < 0)
    throw MathError("InvariantViolation", "rank data must be nonnegative");
  if (d.c_A > d.c_B) throw MathError("InvariantViolation", "c_A > c_B");
  if (d.lpic_kernel > d.lpic_A) throw MathError("InvariantViolation", "lpic_kernel > lpic_A");
  json cert{{"c_A", d.c_A}, {"c_B", d.c_B}, {"lpic_A", d.lpic_A}, {"lpic_B", d.lpic_B}, {"lpic_kernel", d.lpic_kernel}};
  return LIResult::known(d.c_B - d.c_A + d.lpic_kernel, LIMethod::FiveTermSequence, cert);
}

RankData rank_data(const Extension& ext) {
  const auto& h = ext.hints();
  if (!h.lpic_A_rank || !h.lpic_B_rank || !h.lpic_kernel_rank)
    throw MathError("MissingHints", "the five-term route needs lpic_A_rank, lpic_B_rank and lpic_kernel_rank");
  auto ca = component_count(ext.a());
  if (!ca.known()) throw MathError("MissingHints", "c_A unavailable: " + ca.reason);
  auto cb = component_count(ext.b());
  if (!cb.known()) throw MathError("MissingHints", "c_B unavailable: " + cb.reason);
  return {static_cast<std::int64_t>(*ca.value), static_cast<std::int64_t>(*cb.value), *h.lpic_A_rank,
          *h.lpic_B_rank, *h.lpic_kernel_rank};
}

namespace {

LIResult five_term_for(const Extension& ext) {
  LIResult r = li_five_term(rank_data(ext));
  r.certificate["hints_consumed"] = json::array({"lpic_A_rank", "lpic_B_rank", "lpic_kernel_rank"});
  r.certificate["injectivity"] = injectivity_note(ext);
  return r;
}

}  // namespace

LIResult li_auto(const Extension& ext, const std::vector<std::vector<Polynomial>>& primes, bool generic) {
  json attempts = json::array();
  auto attempt = [&](LIMethod m, auto&& run) -> std::optional<LIResult> {
    try {
      LIResult r = run();
      if (r.is_known()) return r;
      attempts.push_back({{"method", to_string(m)}, {"outcome", to_string(r.status) + ": " + r.reason}});
    } catch (const MathError& e) {
      attempts.push_back({{"method", to_string(m)}, {"outcome", e.what()}});
    }
    return std::nullopt;
  };
  auto finish = [&](LIResult r) {
    r.certificate["attempts"] = attempts;
    return r;
  };
  if (auto r = attempt(LIMethod::HenselLocalFormula, [&] { return li_hensel_local(ext); })) return finish(*r);
  if (ext.hints().finite.value_or(false)) {
    if (auto r = attempt(LIMethod::ConductorSquare, [&] { return li_conductor_square(ext); })) return finish(*r);
    if (auto r = attempt(LIMethod::FiniteConnected, [&] { return li_finite_connected(ext, primes, generic); }))
      return finish(*r);
  }
  if (auto r = attempt(LIMethod::FiveTermSequence, [&] { return five_term_for(ext); })) return finish(*r);
  std::string why = ext.hints().finite.value_or(false)
                        ? "no route applies"
                        : "non-finite extension: fiber components only, and no five-term rank data";
  LIResult u = LIResult::unknown(why);
  u.certificate["attempts"] = attempts;
  if (ext.hints().expected_li_rank) u.certificate["expected_rank_recorded"] = *ext.hints().expected_li_rank;
  return u;
}

LIResult li_by_method(const Extension& ext, const std::string& method,
                      const std::vector<std::vector<Polynomial>>& primes, bool generic) {
  if (method == "auto") return li_auto(ext, primes, generic);
  if (method == "hensel") return li_hensel_local(ext);
  if (method == "connected") return li_finite_connected(ext, primes, generic);
  if (method == "conductor") return li_conductor_square(ext);
  if (method == "fiveterm") return five_term_for(ext);
  if (method == "reduced") {
    Extension red = li_reduce_red(ext);
    LIResult inner = li_auto(red, primes, generic);
    json cert{{"A_red", presentation(red.a())}, {"B_red", presentation(red.b())}, {"reduced_result", inner.to_json()}};
    if (!inner.is_known()) {
      LIResult r = LIResult::unknown("reduced extension: " + inner.reason, LIMethod::ReductionToReduced);
      r.certificate = cert;
      return r;
    }
    return LIResult::known(*inner.rank, LIMethod::ReductionToReduced, cert);
  }
  throw InputError("unknown method '" + method + "' (auto, hensel, connected, conductor, fiveterm, reduced)");
}

json NIVerdict::to_json() const {
  json j;
  j["status"] = status == NIStatus::UnknownUpToBound ? "UnknownUpToBound(" + std::to_string(bound) + ")"
                                                      : to_string(status);
  j["bound"] = bound;
  j["witness"] = witness ? json(witness->to_string()) : json(nullptr);
  if (!nil_reason.empty()) j["nil_reason"] = nil_reason;
  return j;
}

NIVerdict ni_verdict(const Extension& ext, unsigned degree_bound) {
  NIVerdict v;
  v.bound = degree_bound;
  NilComparison nil = nil_comparison(ext);
  if (nil.status == NilStatus::Differ) {
    v.status = NIStatus::NonZero;
    v.witness = nil.witness;
    v.nil_reason = nil.reason;
    return v;
  }
  if (nil.status == NilStatus::Unknown) v.nil_reason = nil.reason;
  if (ext.is_surjective()) {
    v.status = NIStatus::Zero;
    v.nil_reason = "A = B";
    return v;
  }
  auto res = closure_search(ext, WitnessKind::Seminormal, degree_bound);
  if (!res.witnesses.empty()) {
    v.status = NIStatus::NonZero;
    v.witness = res.witnesses.front();
    return v;
  }
  v.status = NIStatus::UnknownUpToBound;
  return v;
}

json StabilityVerdict::to_json() const {
  return {{"verdict", to_string(verdict)}, {"reason", reason}, {"li", li.to_json()}, {"ni", ni.to_json()}};
}

StabilityVerdict laurent_stability(const Extension& ext, const std::vector<std::vector<Polynomial>>& primes,
                                   unsigned degree_bound) {
  StabilityVerdict s;
  s.li = li_auto(ext, primes);
  s.ni = ni_verdict(ext, degree_bound);
  if (s.li.is_known() && *s.li.rank > 0) {
    s.verdict = Verdict::No;
    s.reason = "LI has rank " + std::to_string(*s.li.rank);
  } else if (s.ni.status == NIStatus::NonZero) {
    s.verdict = Verdict::No;
    s.reason = "NI is nonzero (A is not seminormal in B)";
  } else if (s.li.is_known() && s.ni.status == NIStatus::Zero) {
    s.verdict = Verdict::Yes;
    s.reason = "LI = 0 and NI = 0";
  } else {
    s.verdict = Verdict::Unknown;
    s.reason = s.li.is_known() ? "NI not certified zero up to the bound" : "LI unknown: " + s.li.reason;
  }
  return s;
}

std::vector<std::pair<std::string, mpz_class>> decomposition_terms(unsigned n) {
  std::vector<std::pair<std::string, mpz_class>> out;
  out.emplace_back("I", 1);
  if (n >= 1) out.emplace_back("L", n);
  for (unsigned i = 1; i <= n; ++i) {
    mpz_class binom, pow2;
    mpz_bin_uiui(binom.get_mpz_t(), n, i);
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, i);
    out.emplace_back("N^" + std::to_string(i), pow2 * binom);
  }
  return out;
}

Outcome<bool> tower_check(const LIResult& ab, const LIResult& ac, const LIResult& bc) {
  if (!ab.is_known() || !ac.is_known() || !bc.is_known())
    return Outcome<bool>::unknown("all three ranks must be known");
  return Outcome<bool>::of(*ab.rank <= *ac.rank && *ac.rank <= *ab.rank + *bc.rank);
}

LIResult product_rank(const std::vector<LIResult>& results) {
  std::int64_t total = 0;
  json parts = json::array();
  for (const auto& r : results) {
    if (!r.is_known()) return LIResult::unknown("a factor has unknown rank: " + r.reason);
    total += *r.rank;
    parts.push_back(*r.rank);
  }
  LIResult out = LIResult::known(total, LIMethod::FiveTermSequence, {{"factors", parts}});
  out.method.reset();
  return out;
}

Extension li_reduce_red(const Extension& ext) {
  auto ra = radical(ext.a());
  if (!ra.known()) throw MathError("RadicalUnavailable", "A: " + ra.reason);
  auto rb = radical(ext.b());
  if (!rb.known()) throw MathError("RadicalUnavailable", "B: " + rb.reason);
  ExtensionHints h = ext.hints();
  h.module_generators.clear();
  h.fractions.clear();
  return Extension::make(*ra.value, *rb.value, ext.images(), std::move(h), ext.injectivity_assumed());
}

std::string to_string(LIMethod m) {
  switch (m) {
    case LIMethod::HenselLocalFormula: return "HenselLocalFormula";
    case LIMethod::FiniteConnected: return "FiniteConnected";
    case LIMethod::ConductorSquare: return "ConductorSquare";
    case LIMethod::FiveTermSequence: return "FiveTermSequence";
    case LIMethod::ReductionToReduced: return "ReductionToReduced";
  }
  return "?";
}

std::string to_string(LIStatus s) {
  switch (s) {
    case LIStatus::Known: return "Known";
    case LIStatus::Unknown: return "Unknown";
    case LIStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(NIStatus s) {
  switch (s) {
    case NIStatus::Zero: return "Zero";
    case NIStatus::NonZero: return "NonZero";
    case NIStatus::UnknownUpToBound: return "UnknownUpToBound";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace cartierlab
