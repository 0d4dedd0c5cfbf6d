#include "doctest.h"

#include "cartierlab/artinian.hpp"
#include "cartierlab/extension.hpp"

using namespace cartierlab;

namespace {

Ideal presented(const Field& k, std::vector<std::string> vars, std::initializer_list<const char*> rels) {
  Ring r = PolyRing::make(k, std::move(vars));
  std::vector<Polynomial> ps;
  for (const char* g : rels) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, ps);
}

Extension make_ext(const Ideal& a, const Ideal& b, std::initializer_list<const char*> images,
                   ExtensionHints hints = {}) {
  std::vector<Polynomial> im;
  for (const char* s : images) im.push_back(parse_polynomial(s, b.ring()));
  return Extension::make(a, b, im, std::move(hints));
}

Extension node() {
  Field q = Field::rationals();
  Ideal a = presented(q, {"x", "y"}, {"y^2 - x^3 - x^2"});
  Ideal b = presented(q, {"t"}, {});
  ExtensionHints h;
  h.finite = true;
  h.birational = true;
  h.module_generators = {Polynomial::from_int(b.ring(), 1), parse_polynomial("t", b.ring())};
  h.fractions = {{parse_polynomial("1", a.ring()), parse_polynomial("1", a.ring())},
                 {parse_polynomial("y", a.ring()), parse_polynomial("x", a.ring())}};
  return make_ext(a, b, {"t^2 - 1", "t^3 - t"}, h);
}

Extension cusp() {
  Field q = Field::rationals();
  Ideal a = presented(q, {"x", "y"}, {"y^2 - x^3"});
  Ideal b = presented(q, {"t"}, {});
  ExtensionHints h;
  h.finite = true;
  h.birational = true;
  h.module_generators = {Polynomial::from_int(b.ring(), 1), parse_polynomial("t", b.ring())};
  h.fractions = {{parse_polynomial("1", a.ring()), parse_polynomial("1", a.ring())},
                 {parse_polynomial("y", a.ring()), parse_polynomial("x", a.ring())}};
  return make_ext(a, b, {"t^2", "t^3"}, h);
}

/// Membership oracle for the node: b in QQ[t] lies in A iff b(1) = b(-1)
/// (A is the set of polynomials identifying the two preimages of the node).
bool node_oracle(const Polynomial& b) {
  const Field& k = b.field();
  Scalar at1 = k.zero(), atm1 = k.zero();
  for (const auto& t : b.terms()) {
    at1 = k.add(at1, t.coef);
    atm1 = k.add(atm1, t.exp[0] % 2 ? k.neg(t.coef) : t.coef);
  }
  return k.equal(at1, atm1);
}

/// Cusp oracle: b lies in QQ[t^2, t^3] iff its t-coefficient vanishes.
bool cusp_oracle(const Polynomial& b) {
  return b.field().is_zero(b.coefficient(Exponents{1}));
}

}  // namespace

TEST_CASE("construction checks") {
  Field q = Field::rationals();
  CHECK_NOTHROW(node());
  Ideal a = presented(q, {"x", "y"}, {"y^2 - x^3 - x^2"});
  Ideal b = presented(q, {"t"}, {});
  try {
    make_ext(a, b, {"t^2", "t^3 - t"});
    FAIL("expected NotWellDefined");
  } catch (const MathError& e) {
    CHECK(e.kind() == "NotWellDefined");
  }
  Ideal ax = presented(q, {"x"}, {});
  Ideal bq = presented(q, {}, {});
  try {
    make_ext(ax, bq, {"0"});
    FAIL("expected NotInjective");
  } catch (const MathError& e) {
    CHECK(e.kind() == "NotInjective");
  }
  CHECK_NOTHROW(Extension::make(ax, bq, {Polynomial(bq.ring())}, {}, true));
}

TEST_CASE("membership against oracles") {
  Extension n = node();
  Ring rb = n.b_ring();
  auto t = [&](const char* s) { return parse_polynomial(s, rb); };
  CHECK_FALSE(n.contains(t("t")).member);
  auto m = n.contains(t("t^4 - 2*t^2"));
  REQUIRE(m.member);
  CHECK(n.map(*m.preimage) == t("t^4 - 2*t^2"));
  CHECK(m.preimage->to_string() == "x^2 - 1");
  for (int d = 0; d <= 7; ++d) {
    Polynomial mono = t("t").pow(static_cast<std::uint64_t>(d));
    CHECK(n.contains(mono).member == node_oracle(mono));
    Polynomial shifted = mono + t("t");
    CHECK(n.contains(shifted).member == node_oracle(shifted));
  }
  Extension c = cusp();
  for (int d = 0; d <= 7; ++d) {
    Polynomial mono = t("t").pow(static_cast<std::uint64_t>(d)) + t("3*t^2");
    CHECK(c.contains(mono).member == cusp_oracle(mono));
  }
}

TEST_CASE("membership is closed under ring operations") {
  Extension n = node();
  Ring rb = n.b_ring();
  std::vector<Polynomial> members;
  for (const char* s : {"t^2 - 1", "t^3 - t", "t^4 + 5", "t^5 - t^3 + 2*t^2"})
    members.push_back(parse_polynomial(s, rb));
  for (const auto& a : members) {
    REQUIRE(n.contains(a).member);
    for (const auto& b : members) {
      CHECK(n.contains(a + b).member);
      CHECK(n.contains(a * b).member);
    }
  }
}

TEST_CASE("witness predicates") {
  Extension n = node(), c = cusp();
  Ring rb = n.b_ring();
  Polynomial t = Polynomial::variable(rb, 0);
  CHECK(c.is_seminormal_witness(t));
  CHECK(c.contains(t * t).member);
  CHECK(c.contains(t.pow(3)).member);
  CHECK_FALSE(c.contains(t).member);
  CHECK_FALSE(n.is_seminormal_witness(t));
  CHECK_FALSE(n.is_anodal_witness(t));
  CHECK_FALSE(n.is_seminormal_witness(n.images()[0]));
  CHECK_FALSE(n.is_anodal_witness(n.images()[1]));
  Polynomial half = parse_polynomial("1/2*t + 1/2", rb);
  CHECK(n.is_anodal_witness(half));

  Field q = Field::rationals();
  Ideal a = presented(q, {}, {});
  Ideal b = presented(q, {"u"}, {"u^2 - u"});
  Extension diag = Extension::make(a, b, {});
  CHECK(diag.is_anodal_witness(parse_polynomial("u", b.ring())));
}

TEST_CASE("closure search") {
  Extension c = cusp();
  auto sn = closure_search(c, WitnessKind::Seminormal, 3);
  REQUIRE(sn.witnesses.size() == 1);
  CHECK(sn.witnesses[0].to_string() == "t");
  CHECK_FALSE(sn.exhausted);
  CHECK(sn.extension.is_surjective());

  Extension n = node();
  auto none = closure_search(n, WitnessKind::Seminormal, 4);
  CHECK(none.witnesses.empty());
  CHECK(none.exhausted);
  auto ano = closure_search(n, WitnessKind::Anodal, 6);
  REQUIRE(ano.witnesses.size() == 1);
  CHECK(ano.witnesses[0].to_string() == "1/2*t + 1/2");
  CHECK_FALSE(ano.exhausted);
  CHECK(closure_search(c, WitnessKind::Anodal, 6).witnesses.empty());

  // B inside B: nothing to adjoin.
  Ideal b = presented(Field::rationals(), {"t"}, {});
  Extension same = make_ext(b, b, {"t"});
  auto id = closure_search(same, WitnessKind::Seminormal, 3);
  CHECK(id.witnesses.empty());
  CHECK_FALSE(id.exhausted);
}

TEST_CASE("closure output has no witness below the bound") {
  Field q = Field::rationals();
  // QQ[t^2, t^5] inside QQ[t]: t^3 is not in A but t^6, t^9 are.
  Ideal a = presented(q, {"x", "y"}, {"y^2 - x^5"});
  Ideal b = presented(q, {"t"}, {});
  Extension e = make_ext(a, b, {"t^2", "t^5"});
  auto res = closure_search(e, WitnessKind::Seminormal, 4);
  CHECK_FALSE(res.witnesses.empty());
  Ring rb = b.ring();
  for (int d = 1; d <= 4; ++d)
    CHECK_FALSE(res.extension.is_seminormal_witness(Polynomial::variable(rb, 0).pow(static_cast<std::uint64_t>(d))));
}

TEST_CASE("conductor") {
  Extension n = node();
  Conductor cn = conductor(n);
  CHECK_FALSE(cn.unit);
  Ideal expect = presented(Field::rationals(), {"x", "y"}, {"x", "y"});
  CHECK(cn.ideal.equals(expect));
  CHECK(cn.certificate.size() == cn.generators.size() * 2);

  Conductor cc = conductor(cusp());
  CHECK(cc.ideal.equals(expect));

  Ideal b = presented(Field::rationals(), {"t"}, {});
  ExtensionHints h;
  h.module_generators = {Polynomial::from_int(b.ring(), 1)};
  h.fractions = {{Polynomial::from_int(b.ring(), 1), Polynomial::from_int(b.ring(), 1)}};
  Extension same = make_ext(b, b, {"t"}, h);
  CHECK(conductor(same).unit);
  CHECK_THROWS_AS(reduce_mod_conductor(same), MathError);

  Extension bare = make_ext(b, b, {"t"});
  CHECK_THROWS_AS(conductor(bare), MathError);
}

TEST_CASE("reduction modulo the conductor") {
  Extension rn = reduce_mod_conductor(node());
  auto an = FiniteAlgebra::quotient(rn.a());
  auto bn = FiniteAlgebra::quotient(rn.b());
  CHECK(an.dim() == 1);
  CHECK(bn.dim() == 2);
  CHECK(rn.b().equals(presented(Field::rationals(), {"t"}, {"t^2 - 1"})));
  CHECK(*component_count(bn).value == 2);

  Extension rc = reduce_mod_conductor(cusp());
  CHECK(FiniteAlgebra::quotient(rc.a()).dim() == 1);
  CHECK(rc.b().equals(presented(Field::rationals(), {"t"}, {"t^2"})));
}

TEST_CASE("nil comparison") {
  Field q = Field::rationals();
  Ideal a = presented(q, {}, {});
  Ideal b = presented(q, {"u"}, {"u^2"});
  auto d = nil_comparison(Extension::make(a, b, {}));
  CHECK(d.status == NilStatus::Differ);
  REQUIRE(d.witness);
  CHECK(d.witness->to_string() == "u");
  CHECK(nil_comparison(make_ext(b, b, {"u"})).status == NilStatus::Equal);
  CHECK(nil_comparison(node()).status == NilStatus::Equal);
  Ideal b2 = presented(q, {"x", "y"}, {"y^2"});
  Ideal a2 = presented(q, {"x"}, {});
  CHECK(nil_comparison(make_ext(a2, b2, {"x"})).status == NilStatus::Unknown);
}
