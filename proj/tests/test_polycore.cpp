#include "doctest.h"

#include <random>

#include "cartierlab/errors.hpp"
#include "cartierlab/ideal.hpp"

using namespace cartierlab;

namespace {

Ring qq_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(Field::rationals(), std::move(vars), order);
}

Polynomial P(const Ring& r, const char* s) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("parse and print") {
  auto r = qq_ring({"x", "y"});
  auto f = P(r, "y^2 - x^3 - x^2");
  CHECK(f.terms().size() == 3);
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "(x+y)^2 - x^2 - 2*x*y") == P(r, "y^2"));
  CHECK(P(r, "3/6*x") == P(r, "1/2 * x"));
  CHECK(P(r, "-x + 1") == P(r, "1 - x"));
  for (const char* s : {"y^2 - x^3 - x^2", "1/3*x*y - 7", "(x - 1)^3*(y + 2/5)", "-x"}) {
    auto p = P(r, s);
    CHECK(P(r, p.to_string().c_str()) == p);
    CHECK(P(r, p.to_string().c_str()).to_string() == p.to_string());
  }
  CHECK_THROWS_AS(P(r, "2x"), InputError);
  CHECK_THROWS_AS(P(r, "x/y"), InputError);
  CHECK_THROWS_AS(P(r, "z + 1"), InputError);
  CHECK_THROWS_AS(P(r, "x^-1"), InputError);
  CHECK_THROWS_AS(P(r, "(x + 1"), InputError);
  CHECK_THROWS_AS(P(r, "1/0"), InputError);
  CHECK_THROWS_AS(PolyRing::make(Field::rationals(), {"x", "x"}), InputError);
  CHECK_THROWS_AS(PolyRing::make(Field::rationals(), {"1x"}), InputError);

  auto lr = qq_ring({"t", "tinv"});
  ParseOptions opts;
  opts.inverse_names["t"] = "tinv";
  CHECK(parse_polynomial("2*t^-3 + t^(-1)", lr, opts) == P(lr, "2*tinv^3 + tinv"));
}

TEST_CASE("prime field literals") {
  auto r = PolyRing::make(Field::prime(5), {"x"});
  CHECK(P(r, "x + 7") == P(r, "x + 2"));
  CHECK(P(r, "1/2*x") == P(r, "3*x"));
  CHECK_THROWS_AS(P(r, "1/5"), InputError);
}

TEST_CASE("groebner examples") {
  auto r = qq_ring({"x", "y"}, MonomialOrder::lex());
  auto gb = groebner_basis(r, {P(r, "x^2 - 1"), P(r, "x*y - 1")});
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == P(r, "y^2 - 1"));
  CHECK(gb[1] == P(r, "x - y"));
  CHECK(groebner_basis(r, {}).empty());
  auto g2 = groebner_basis(r, {P(r, "x"), P(r, "y")});
  CHECK(g2.size() == 2);

  auto t = qq_ring({"t"});
  Ideal i(t, {P(t, "t^2 - 1")});
  CHECK(i.normal_form(P(t, "t^3 - t")).is_zero());
  Ideal m(qq_ring({"x", "y"}), {});
  auto rr = m.ring();
  Ideal xy(rr, {P(rr, "x"), P(rr, "y")});
  CHECK(xy.normal_form(P(rr, "1")) == P(rr, "1"));
  CHECK(xy.normal_form(P(rr, "x")).is_zero());
}

TEST_CASE("ideal operations") {
  auto r = qq_ring({"x", "y"});
  Ideal ix(r, {P(r, "x")}), iy(r, {P(r, "y")});
  CHECK(intersect(ix, iy).equals(Ideal(r, {P(r, "x*y")})));
  CHECK(colon(Ideal(r, {P(r, "x*y")}), P(r, "x")).equals(iy));
  CHECK(colon(Ideal(r, {P(r, "x*y")}), ix).equals(iy));
  auto e = eliminate(Ideal(r, {P(r, "y - x^2"), P(r, "x - 1")}), {0});
  REQUIRE(e.ring()->nvars() == 1);
  CHECK(e.equals(Ideal(e.ring(), {P(e.ring(), "y - 1")})));
  CHECK(saturate(Ideal(r, {P(r, "x^2*y")}), P(r, "x")).equals(iy));
  CHECK(product(ix, iy).equals(Ideal(r, {P(r, "x*y")})));
  CHECK(sum(ix, iy).contains(P(r, "x + y")));
  CHECK(Ideal(r, {P(r, "x"), P(r, "x - 1")}).is_unit());
}

TEST_CASE("pair budget is enforced") {
  auto r = qq_ring({"x", "y", "z"});
  auto saved = pair_budget();
  set_pair_budget(1);
  CHECK_THROWS_AS(groebner_basis(r, {P(r, "x^2 + y*z"), P(r, "y^2 + x*z"), P(r, "z^2 + x*y")}), ResourceLimit);
  set_pair_budget(saved);
}

TEST_CASE("membership of random combinations") {
  auto r = qq_ring({"x", "y", "z"});
  std::mt19937_64 rng(7);
  auto random_poly = [&](int terms) {
    Polynomial p(r);
    for (int i = 0; i < terms; ++i) {
      Exponents e{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                  static_cast<std::uint32_t>(rng() % 2)};
      p += Polynomial::monomial(r, e, r->field().from_int(static_cast<long>(rng() % 7) - 3));
    }
    return p;
  };
  for (int round = 0; round < 5; ++round) {
    std::vector<Polynomial> gens{random_poly(3), random_poly(3)};
    Ideal id(r, gens);
    if (id.is_unit()) continue;
    Polynomial f = gens[0] * random_poly(2) + gens[1] * random_poly(2);
    CHECK(id.contains(f));
    CHECK_FALSE(id.contains(f + Polynomial::from_int(r, 1)));
    auto nf = id.normal_form(random_poly(4));
    CHECK(id.normal_form(nf) == nf);
  }
}
