#include "doctest.h"

#include <random>

#include "cartierlab/laurent.hpp"

using namespace cartierlab;

namespace {

Base base_of(std::vector<std::string> vars, std::initializer_list<const char*> rels,
             const Field& k = Field::rationals()) {
  Ring r = PolyRing::make(k, std::move(vars));
  std::vector<Polynomial> ps;
  for (const char* g : rels) ps.push_back(parse_polynomial(g, r));
  return std::make_shared<const FiniteAlgebra>(FiniteAlgebra::quotient(Ideal(r, ps)));
}

Vec elem(const Base& b, const char* s) { return b->from_polynomial(parse_polynomial(s, b->ring())); }

}  // namespace

TEST_CASE("parse and print") {
  Base b = base_of({"eps"}, {"eps^2"});
  auto x = parse_laurent("2*t^-1 + 2*eps", b);
  CHECK(x.coefficients().size() == 2);
  CHECK(x.to_string() == "2*eps + 2*t^(-1)");
  CHECK(parse_laurent("t^(-2)*t^2", b).is_one());
  CHECK_THROWS_AS(parse_laurent("eps^-1", b), InputError);
}

TEST_CASE("unit test") {
  Base q = base_of({}, {});
  CHECK(*is_laurent_unit(parse_laurent("t", q)).value);
  CHECK_FALSE(*is_laurent_unit(parse_laurent("1 + t", q)).value);
  Base d = base_of({"eps"}, {"eps^2"});
  auto x = parse_laurent("1 + eps*t", d);
  CHECK(*is_laurent_unit(x).value);
  CHECK((x * parse_laurent("1 - eps*t", d)).is_one());
  CHECK_FALSE(*is_laurent_unit(parse_laurent("0", d)).value);
}

TEST_CASE("decomposition examples") {
  Base q = base_of({}, {});
  auto a = bass_decompose(parse_laurent("5*t^3", q));
  CHECK(q->to_string(a.u0) == "5");
  CHECK(a.exponents == std::vector<std::int64_t>{3});
  CHECK(a.p_part.is_one());
  CHECK(a.q_part.is_one());

  Base d = base_of({"eps"}, {"eps^2"});
  auto b = bass_decompose(parse_laurent("2*t^-1*(1 + eps*t)", d));
  CHECK(d->to_string(b.u0) == "2");
  CHECK(b.exponents == std::vector<std::int64_t>{-1});
  CHECK(b.p_part == parse_laurent("1 + eps*t", d));
  CHECK(b.q_part.is_one());

  Base e = base_of({"e"}, {"e^2 - e"});
  auto c = bass_decompose(parse_laurent("e*t + 1 - e", e));
  CHECK(e->to_string(c.u0) == "1");
  CHECK(e->to_string(c.idempotents[0]) == "e");
  CHECK(c.exponents == std::vector<std::int64_t>{1, 0});
  CHECK(c.p_part.is_one());
  CHECK(c.q_part.is_one());

  CHECK_THROWS_AS(bass_decompose(parse_laurent("1 + t", q)), MathError);
}

TEST_CASE("mixed tails need the iteration") {
  // (1 + u t)(1 + u t^-1) = 1 + u^2 + u t + u t^-1: the constant term is
  // not the unit part.
  Base b = base_of({"u"}, {"u^3"});
  auto x = parse_laurent("3*(1 + u*t)*(1 + u*t^-1)", b);
  auto d = bass_decompose(x);
  CHECK(b->to_string(d.u0) == "3");
  CHECK(d.p_part == parse_laurent("1 + u*t", b));
  CHECK(d.q_part == parse_laurent("1 + u*t^-1", b));
  CHECK(d.recompose() == x);
}

TEST_CASE("lu rank") {
  CHECK(*lu_rank(*base_of({}, {})).value == 1);
  CHECK(*lu_rank(*base_of({"e"}, {"e^2 - e"})).value == 2);
  CHECK(*lu_rank(*base_of({"t"}, {"t^3 - t"})).value == 3);
}

TEST_CASE("units of a base are their own decomposition") {
  Base b = base_of({"e", "u"}, {"e^2 - e", "u^2", "e*u"});
  auto x = LaurentElement::constant(b, elem(b, "2 + u - 3*e"));
  auto d = bass_decompose(x);
  CHECK(d.p_part.is_one());
  CHECK(d.q_part.is_one());
  for (auto n : d.exponents) CHECK(n == 0);
}
