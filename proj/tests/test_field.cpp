#include "doctest.h"

#include "cartierlab/errors.hpp"
#include "cartierlab/factor.hpp"
#include "cartierlab/field.hpp"

using namespace cartierlab;

namespace {

UPoly ints(const Field& k, std::initializer_list<long> cs) {
  UPoly p;
  for (long c : cs) p.push_back(k.from_int(c));
  upoly::trim(k, p);
  return p;
}

UPoly product(const Field& k, const std::vector<UPoly>& fs) {
  UPoly acc = upoly::constant(k, k.one());
  for (const auto& f : fs) acc = upoly::mul(k, acc, f);
  return acc;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Field qq;
  auto a = qq.from_rational(mpq_class(1, 2));
  auto b = qq.from_rational(mpq_class(1, 3));
  CHECK(qq.equal(qq.add(a, b), qq.from_rational(mpq_class(5, 6))));
  CHECK(qq.equal(qq.inv(a), qq.from_int(2)));
  CHECK_THROWS_AS(qq.inv(qq.zero()), MathError);
}

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  CHECK(f7.equal(f7.inv(f7.from_int(3)), f7.from_int(5)));
  CHECK(f7.equal(f7.from_int(-1), f7.from_int(6)));
  CHECK_THROWS_AS(Field::prime(9), InputError);
}

TEST_CASE("extension fields reject reducible moduli") {
  Field qq;
  Field qi = Field::extension(qq, ints(qq, {1, 0, 1}), "i");
  Scalar i = qi.generator();
  CHECK(qi.equal(qi.mul(i, i), qi.from_int(-1)));
  CHECK(qi.equal(qi.mul(qi.inv(qi.add(i, qi.one())), qi.add(i, qi.one())), qi.one()));
  CHECK_THROWS_AS(Field::extension(qq, ints(qq, {-1, 0, 1})), InputError);
}

TEST_CASE("rational functions are normalized") {
  Field qq;
  Field qx = Field::rational_functions(qq, "x");
  Scalar x = qx.generator();
  Scalar r = qx.div(qx.sub(qx.mul(x, x), qx.one()), qx.sub(x, qx.one()));
  CHECK(qx.is_polynomial(r));
  CHECK(qx.equal(r, qx.add(x, qx.one())));
}

TEST_CASE("factor over F_p") {
  Field f5 = Field::prime(5);
  // x^4 - 1 splits completely mod 5
  auto fac = factor_squarefree(f5, ints(f5, {-1, 0, 0, 0, 1}));
  CHECK(fac.complete);
  CHECK(fac.factors.size() == 4);
  Field f2 = Field::prime(2);
  // x^3 + x + 1 irreducible over F_2, x^2 + x = x(x+1)
  CHECK(is_irreducible(f2, ints(f2, {1, 1, 0, 1})).value());
  CHECK(factor_squarefree(f2, ints(f2, {0, 1, 1})).factors.size() == 2);
  // (x^2+1)(x^2+x+2) over F_3
  Field f3 = Field::prime(3);
  auto g = upoly::mul(f3, ints(f3, {1, 0, 1}), ints(f3, {2, 1, 1}));
  auto gf = factor_squarefree(f3, g);
  CHECK(gf.factors.size() == 2);
  CHECK(upoly::equal(f3, product(f3, gf.factors), g));
}

TEST_CASE("factor over QQ") {
  Field qq;
  auto fac = factor_squarefree(qq, ints(qq, {-1, 0, 1}));
  CHECK(fac.factors.size() == 2);
  // (x^2 + 1)(x^2 - 2)(x^2 + x + 1)(x - 3)
  auto g = product(qq, {ints(qq, {1, 0, 1}), ints(qq, {-2, 0, 1}), ints(qq, {1, 1, 1}), ints(qq, {-3, 1})});
  auto gf = factor_squarefree(qq, g);
  CHECK(gf.complete);
  CHECK(gf.factors.size() == 4);
  CHECK(upoly::equal(qq, product(qq, gf.factors), upoly::monic(qq, g)));
  CHECK(is_irreducible(qq, ints(qq, {1, 0, 0, 0, 1})).value());
  CHECK_FALSE(is_irreducible(qq, ints(qq, {4, 0, 0, 0, 1})).value());  // x^4+4 = Sophie Germain
  CHECK(squarefree_part(qq, ints(qq, {0, 0, 1})).value().size() == 2);
  auto s = field_sqrt(qq, qq.from_rational(mpq_class(9, 4)));
  REQUIRE(s);
  CHECK(qq.equal(qq.mul(*s, *s), qq.from_rational(mpq_class(9, 4))));
  CHECK_FALSE(field_sqrt(qq, qq.from_int(2)));
}

TEST_CASE("factor over QQ(x)") {
  Field qq;
  Field qx = Field::rational_functions(qq, "x");
  Scalar x = qx.generator();
  // z^2 - x^2
  UPoly f{qx.neg(qx.mul(x, x)), qx.zero(), qx.one()};
  auto fac = factor_squarefree(qx, f);
  CHECK(fac.complete);
  CHECK(fac.factors.size() == 2);
  CHECK(upoly::equal(qx, product(qx, fac.factors), f));
  // z^2 - z - x irreducible
  UPoly g{qx.neg(x), qx.from_int(-1), qx.one()};
  CHECK(is_irreducible(qx, g).value());
  // z^2 - 1/x^2 = (z - 1/x)(z + 1/x)
  Scalar inv2 = qx.inv(qx.mul(x, x));
  UPoly h{qx.neg(inv2), qx.zero(), qx.one()};
  auto hf = factor_squarefree(qx, h);
  CHECK(hf.factors.size() == 2);
  CHECK(upoly::equal(qx, product(qx, hf.factors), h));
  // (z^2 - x)(z - x - 1)(z^3 + x z + 1) over F_5(x)
  Field f5x = Field::rational_functions(Field::prime(5), "x");
  Scalar y = f5x.generator();
  UPoly a{f5x.neg(y), f5x.zero(), f5x.one()};
  UPoly b{f5x.neg(f5x.add(y, f5x.one())), f5x.one()};
  UPoly c{f5x.one(), y, f5x.zero(), f5x.one()};
  auto abc = product(f5x, {a, b, c});
  auto af = factor_squarefree(f5x, abc);
  CHECK(af.complete);
  CHECK(af.factors.size() == 3);
  CHECK(upoly::equal(f5x, product(f5x, af.factors), abc));
}
