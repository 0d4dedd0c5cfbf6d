#include "doctest.h"

#include "cartierlab/artinian.hpp"
#include "cartierlab/cartier.hpp"

using namespace cartierlab;

namespace {

Ideal presented(std::vector<std::string> vars, std::initializer_list<const char*> rels,
                const Field& k = Field::rationals()) {
  Ring r = PolyRing::make(k, std::move(vars));
  std::vector<Polynomial> ps;
  for (const char* g : rels) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, ps);
}

std::vector<Polynomial> polys(const Ring& r, std::initializer_list<const char*> xs) {
  std::vector<Polynomial> out;
  for (const char* s : xs) out.push_back(parse_polynomial(s, r));
  return out;
}

Extension curve(const char* rel, std::initializer_list<const char*> images, bool with_fractions = true) {
  Ideal a = presented({"x", "y"}, {rel});
  Ideal b = presented({"t"}, {});
  ExtensionHints h;
  h.finite = true;
  h.birational = true;
  if (with_fractions) {
    h.module_generators = polys(b.ring(), {"1", "t"});
    h.fractions = {{Polynomial::from_int(a.ring(), 1), Polynomial::from_int(a.ring(), 1)},
                   {parse_polynomial("y", a.ring()), parse_polynomial("x", a.ring())}};
  }
  return Extension::make(a, b, polys(b.ring(), images), h);
}

Extension node() { return curve("y^2 - x^3 - x^2", {"t^2 - 1", "t^3 - t"}); }
Extension cusp() { return curve("y^2 - x^3", {"t^2", "t^3"}); }

Extension over_field(Ideal b, ExtensionHints h = {}) {
  h.finite = true;
  return Extension::make(presented({}, {}), std::move(b), {}, h);
}

Extension lines() {
  Ideal a = presented({"x"}, {});
  Ideal b = presented({"x", "y"}, {"y^2 - x^2"});
  ExtensionHints h;
  h.finite = true;
  h.birational = false;
  h.lpic_A_rank = 0;
  h.lpic_B_rank = 0;
  h.lpic_kernel_rank = 0;
  return Extension::make(a, b, polys(b.ring(), {"x"}), h);
}

}  // namespace

TEST_CASE("stalks") {
  Extension n = node();
  auto s = stalk_rank(n, polys(n.a_ring(), {"x", "y"}));
  CHECK(*s.fiber_components.value == 2);
  CHECK(*s.stalk_rank == 1);
  CHECK(s.label == "henselized stalk");

  Extension l = lines();
  auto at0 = stalk_rank(l, polys(l.a_ring(), {"x"}));
  CHECK(*at0.fiber_components.value == 1);
  CHECK(*at0.stalk_rank == 0);
  auto at1 = stalk_rank(l, polys(l.a_ring(), {"x - 1"}));
  CHECK(*at1.stalk_rank == 1);
  auto gen = generic_stalk(l);
  CHECK(gen.generic);
  CHECK(*gen.fiber_components.value == 2);
  CHECK(*gen.stalk_rank == 1);
  CHECK(*stalk_rank(l, {Polynomial(l.a_ring())}).stalk_rank == 1);

  CHECK_THROWS_AS(stalk_rank(n, polys(n.a_ring(), {"x"})), MathError);
  CHECK_THROWS_AS(stalk_rank(n, polys(n.a_ring(), {"x - 1", "y"})), MathError);  // unit ideal

  // A fiber that is empty.
  Ideal a = presented({"x"}, {});
  Ideal b = presented({"x", "u"}, {"x*u - 1"});
  Extension loc = Extension::make(a, b, polys(b.ring(), {"x"}));
  auto e = stalk_rank(loc, polys(a.ring(), {"x"}));
  CHECK(e.empty);
  CHECK(*e.stalk_rank == 0);
  CHECK(e.label == "fiber components only");
}

TEST_CASE("hensel local formula") {
  CHECK(*li_hensel_local(over_field(presented({"u"}, {"u^2 - u"}))).rank == 1);
  CHECK(*li_hensel_local(over_field(presented({"u"}, {"u^2"}))).rank == 0);
  CHECK(*li_hensel_local(over_field(presented({}, {}))).rank == 0);
  CHECK_THROWS_AS(li_hensel_local(node()), MathError);
}

TEST_CASE("finite connected") {
  Extension c = cusp();
  std::vector<std::vector<Polynomial>> primes{polys(c.a_ring(), {"x", "y"}), polys(c.a_ring(), {"x - 1", "y - 1"})};
  auto r = li_finite_connected(c, primes);
  REQUIRE(r.is_known());
  CHECK(*r.rank == 0);
  CHECK(r.certificate["stalks"].size() == 3);

  auto art = li_finite_connected(over_field(presented({"u"}, {"u^3"})), {});
  REQUIRE(art.is_known());
  CHECK(*art.rank == 0);

  Extension n = node();
  auto inc = li_finite_connected(n, {polys(n.a_ring(), {"x", "y"})});
  CHECK(inc.status == LIStatus::Inconclusive);
  CHECK(li_finite_connected(c, {}).status == LIStatus::Inconclusive);
}

TEST_CASE("conductor square and five-term agree on the node") {
  auto cs = li_conductor_square(node());
  REQUIRE(cs.is_known());
  CHECK(*cs.rank == 1);
  CHECK(cs.certificate["c_B_mod_c"] == 2);
  CHECK(*li_five_term({1, 1, 1, 0, 1}).rank == 1);
  CHECK(*li_conductor_square(cusp()).rank == 0);

  Ideal b = presented({"t"}, {});
  ExtensionHints h;
  h.finite = true;
  h.birational = true;
  h.module_generators = polys(b.ring(), {"1"});
  h.fractions = {{Polynomial::from_int(b.ring(), 1), Polynomial::from_int(b.ring(), 1)}};
  CHECK(*li_conductor_square(Extension::make(b, b, polys(b.ring(), {"t"}), h)).rank == 0);
  CHECK_THROWS_AS(li_conductor_square(lines()), MathError);
}

TEST_CASE("five-term") {
  CHECK(*li_five_term({1, 2, 0, 0, 0}).rank == 1);
  CHECK(*li_five_term({1, 1, 1, 0, 1}).rank == 1);
  CHECK(*li_five_term({1, 1, 0, 0, 0}).rank == 0);
  CHECK_THROWS_AS(li_five_term({2, 1, 0, 0, 0}), MathError);
  CHECK_THROWS_AS(li_five_term({1, 1, 0, 0, 1}), MathError);
  auto r = li_auto(lines(), {});
  REQUIRE(r.is_known());
  CHECK(*r.rank == 0);
  CHECK(*r.method == LIMethod::FiveTermSequence);
}

TEST_CASE("auto route") {
  auto n = li_auto(node(), {});
  CHECK(*n.rank == 1);
  CHECK(*n.method == LIMethod::ConductorSquare);
  auto c = li_auto(cusp(), {});
  CHECK(*c.rank == 0);
  Ideal a = presented({"x"}, {});
  Ideal b = presented({"x", "b", "e"}, {"e^2 - e - b*x"});
  ExtensionHints h;
  h.finite = false;
  h.expected_li_rank = 0;
  auto u = li_auto(Extension::make(a, b, polys(b.ring(), {"x"}), h), {});
  CHECK_FALSE(u.is_known());
  CHECK(u.certificate["expected_rank_recorded"] == 0);
}

TEST_CASE("fiber table for a non-finite map") {
  Ideal a = presented({"x"}, {});
  Ideal b = presented({"x", "b", "e"}, {"e^2 - e - b*x"});
  Extension e = Extension::make(a, b, polys(b.ring(), {"x"}));
  CHECK(*stalk_rank(e, polys(a.ring(), {"x"})).fiber_components.value == 2);
  CHECK(*stalk_rank(e, polys(a.ring(), {"x - 1"})).fiber_components.value == 1);
}

TEST_CASE("NI verdicts and Laurent stability") {
  auto c = ni_verdict(cusp(), 6);
  CHECK(c.status == NIStatus::NonZero);
  CHECK(c.witness->to_string() == "t");
  auto u = ni_verdict(over_field(presented({"u"}, {"u^2"})), 6);
  CHECK(u.status == NIStatus::NonZero);
  CHECK_FALSE(u.nil_reason.empty());
  auto n = ni_verdict(node(), 4);
  CHECK(n.status == NIStatus::UnknownUpToBound);
  CHECK_FALSE(n.witness);

  CHECK(laurent_stability(cusp(), {}, 6).verdict == Verdict::No);
  CHECK(laurent_stability(node(), {}, 6).verdict == Verdict::No);
  Ideal b = presented({"t"}, {});
  ExtensionHints h;
  h.finite = true;
  h.birational = true;
  h.module_generators = polys(b.ring(), {"1"});
  h.fractions = {{Polynomial::from_int(b.ring(), 1), Polynomial::from_int(b.ring(), 1)}};
  CHECK(laurent_stability(Extension::make(b, b, polys(b.ring(), {"t"}), h), {}, 6).verdict == Verdict::Yes);
}

TEST_CASE("decomposition terms") {
  auto t1 = decomposition_terms(1);
  REQUIRE(t1.size() == 3);
  CHECK(t1[0] == std::make_pair(std::string("I"), mpz_class(1)));
  CHECK(t1[1] == std::make_pair(std::string("L"), mpz_class(1)));
  CHECK(t1[2] == std::make_pair(std::string("N^1"), mpz_class(2)));
  auto t2 = decomposition_terms(2);
  CHECK(t2[2].second == 4);
  CHECK(t2[3].second == 4);
  CHECK(decomposition_terms(0).size() == 1);
  // Summing over i gives 3^n - 1 N-terms.
  for (unsigned n = 0; n <= 8; ++n) {
    mpz_class total = 0;
    for (const auto& [label, c] : decomposition_terms(n))
      if (label[0] == 'N') total += c;
    mpz_class three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, n);
    CHECK(total == three - 1);
  }
}

TEST_CASE("tower and products") {
  auto k = [](std::int64_t r) { return li_five_term({1, 1 + r, 0, 0, 0}); };
  CHECK(*tower_check(k(0), k(1), k(1)).value);
  CHECK(*tower_check(k(1), k(1), k(0)).value);
  CHECK_FALSE(*tower_check(k(1), k(0), k(5)).value);
  CHECK(*product_rank({k(1), k(0)}).rank == 1);
  CHECK(*product_rank({}).rank == 0);
  CHECK(*product_rank({k(1), k(1), k(2)}).rank == 4);
  CHECK(*product_rank({li_conductor_square(node()), li_conductor_square(cusp())}).rank == 1);
}

TEST_CASE("reduction to reduced rings") {
  Extension toy = over_field(presented({"u"}, {"u^2"}));
  Extension red = li_reduce_red(toy);
  CHECK(FiniteAlgebra::quotient(red.b()).dim() == 1);
  CHECK(*li_auto(red, {}).rank == 0);
  CHECK(ni_verdict(toy, 6).status == NIStatus::NonZero);

  Ideal e = presented({"e"}, {"e^2 - e"});
  Extension same = Extension::make(e, e, polys(e.ring(), {"e"}));
  Extension r2 = li_reduce_red(same);
  CHECK(r2.a().equals(e));
  CHECK(r2.b().equals(e));
  CHECK(li_reduce_red(node()).b().is_zero());
}
