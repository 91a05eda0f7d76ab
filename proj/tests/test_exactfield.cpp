#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wbu/field.hpp"

using namespace wbu;

namespace {

FieldTower gf2t() { return FieldTower::prime_field(2).adjoin_transcendental("t"); }

FieldTower gf2t_theta() {
  FieldTower k = gf2t();
  UPoly m = UPoly::monomial(k.one(), 2) + UPoly::constant(k.generator());
  return k.extend("θ", m);
}

UPoly poly(const FieldTower& k, std::initializer_list<long> cs) {
  std::vector<FieldElem> v;
  for (long c : cs) v.push_back(k.from_int(c));
  return UPoly(k, v);
}

UPoly expand(const std::vector<std::pair<UPoly, int>>& fs, const FieldTower& k) {
  UPoly acc = UPoly::constant(k.one());
  for (const auto& [f, m] : fs) acc = acc * f.pow(static_cast<std::uint64_t>(m));
  return acc;
}

}  // namespace

TEST_CASE("arithmetic") {
  FieldTower k = gf2t();
  CHECK((k.generator() + k.generator()).is_zero());
  FieldTower q;
  CHECK(q.from_rational(mpq_class(1, 2)) * q.from_rational(mpq_class(2, 3)) ==
        q.from_rational(mpq_class(1, 3)));
  FieldTower l = gf2t_theta();
  CHECK(l.generator() * l.generator() == l.embed(k.generator()));
  CHECK_THROWS_AS(q.one() / q.zero(), FieldError);
  CHECK_THROWS_AS(q.one() + k.one(), FieldError);
}

TEST_CASE("descriptors") {
  CHECK(FieldTower().descriptor() == "QQ");
  CHECK(FieldTower::prime_field(2).descriptor() == "GF(2)");
  CHECK(gf2t().descriptor() == "GF(2)(t)");
  CHECK(gf2t_theta().descriptor() == "GF(2)(t)[θ]/(θ^2+t)");
}

TEST_CASE("pth_root") {
  FieldTower k = gf2t();
  FieldElem t = k.generator();
  CHECK_FALSE(pth_root(t).has_value());
  REQUIRE(pth_root(t * t).has_value());
  CHECK(*pth_root(t * t) == t);
  FieldTower l = gf2t_theta();
  auto r = pth_root(l.embed(t));
  REQUIRE(r.has_value());
  CHECK(*r == l.generator());
  CHECK_FALSE(pth_root(l.generator()).has_value());
  CHECK_THROWS_AS(pth_root(FieldTower().one()), FieldError);
  FieldElem frac = (t * t + k.one()) / (t * t * t * t);
  auto fr = pth_root(frac);
  REQUIRE(fr.has_value());
  CHECK(fr->pow(2) == frac);
}

TEST_CASE("pth_root over a separable step of an imperfect field") {
  FieldTower k = gf2t();
  FieldTower l = k.extend("a", poly(k, {1, 1, 1}));
  FieldElem a = l.generator();
  FieldElem t = l.embed(k.generator());
  FieldElem x = a * t + l.one();
  auto r = pth_root(x * x);
  REQUIRE(r.has_value());
  CHECK(*r == x);
  CHECK_FALSE(pth_root(a * t).has_value());
}

TEST_CASE("nth_root") {
  FieldTower q;
  CHECK(*nth_root(q.from_int(4), 2) == q.from_int(2));
  CHECK_FALSE(nth_root(q.from_int(2), 2).has_value());
  CHECK(*nth_root(q.from_rational(mpq_class(-8, 27)), 3) == q.from_rational(mpq_class(-2, 3)));
  FieldTower k = gf2t();
  FieldElem t = k.generator();
  CHECK(*nth_root(t.pow(4), 4) == t);
  CHECK(*nth_root((t + k.one()).pow(3) / t.pow(6), 3) == (t + k.one()) / t.pow(2));
  CHECK_THROWS_AS(nth_root(t, 0), FieldError);
}

TEST_CASE("squarefree") {
  FieldTower q;
  auto s = univar_squarefree(poly(q, {0, 0, 1, 1}));
  REQUIRE(s.size() == 2);
  CHECK(expand(s, q) == poly(q, {0, 0, 1, 1}));
  FieldTower k = gf2t();
  UPoly g = UPoly::monomial(k.one(), 2) + UPoly::constant(k.generator());
  auto s2 = univar_squarefree(g);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].first == g);
  CHECK(s2[0].second == 1);
  FieldTower f2 = FieldTower::prime_field(2);
  auto s3 = univar_squarefree(poly(f2, {1, 1}).pow(4));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].first == poly(f2, {1, 1}));
  CHECK(s3[0].second == 4);
  // (x^2+1)(x^2+t) over GF(2)(t) has the square (x+1)^2 hidden behind x -> x^2
  UPoly mixed = (UPoly::monomial(k.one(), 2) + UPoly::constant(k.one())) * g;
  auto s4 = univar_squarefree(mixed);
  CHECK(expand(s4, k) == mixed);
  bool found = false;
  for (const auto& [h, m] : s4) found |= (h == poly(k, {1, 1}) && m == 2);
  CHECK(found);
}

TEST_CASE("factorization") {
  FieldTower q;
  auto f = univar_factor(poly(q, {-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first.degree() == 1);
  CHECK(expand(f, q) == poly(q, {-1, 0, 1}));
  FieldTower f2 = FieldTower::prime_field(2);
  CHECK(is_irreducible(poly(f2, {1, 1, 1})));
  CHECK(is_irreducible(poly(q, {-2, 0, 0, 1})));
  UPoly big = poly(q, {-2, 0, 0, 1}) * poly(q, {1, 1, 1}) * poly(q, {3, 0, 1}) * poly(q, {-5, 2});
  auto fb = univar_factor(big);
  CHECK(fb.size() == 4);
  CHECK(expand(fb, q) == big.monic());
  UPoly swinnerton = poly(q, {1, 0, -10, 0, 1});  // x^4-10x^2+1, irreducible, splits mod every prime
  CHECK(is_irreducible(swinnerton));
  FieldTower f3 = FieldTower::prime_field(3);
  UPoly x9 = UPoly::monomial(f3.one(), 9) - UPoly::x(f3);
  auto f9 = univar_factor(x9);
  CHECK(f9.size() == 6);  // three linear, three quadratic
}

TEST_CASE("factorization over a function field") {
  FieldTower k = gf2t();
  FieldElem t = k.generator();
  UPoly x = UPoly::x(k);
  UPoly a = x * x + x * UPoly::constant(t) + UPoly::constant(k.one());
  UPoly b = x + UPoly::constant(t * t);
  auto fs = univar_factor(a * b);
  REQUIRE(fs.size() == 2);
  CHECK(expand(fs, k) == (a * b).monic());
  CHECK(is_irreducible(x * x + UPoly::constant(t)));
  FieldTower qt = FieldTower().adjoin_transcendental("t");
  UPoly y = UPoly::x(qt);
  UPoly d = y * y - UPoly::constant(qt.generator().pow(2));
  CHECK(univar_factor(d).size() == 2);
}

TEST_CASE("factorization over algebraic steps") {
  FieldTower q;
  FieldTower r2 = q.extend("r", poly(q, {-2, 0, 1}));
  UPoly x = UPoly::x(r2);
  auto fs = univar_factor(UPoly::monomial(r2.one(), 2) - UPoly::constant(r2.from_int(2)));
  CHECK(fs.size() == 2);
  CHECK(roots(x * x - UPoly::constant(r2.from_int(8))).size() == 2);
  CHECK(is_irreducible(x * x - UPoly::constant(r2.from_int(3))));
  FieldTower l = gf2t_theta();
  UPoly z = UPoly::x(l);
  UPoly sq = z * z + UPoly::constant(l.embed(gf2t().generator()));
  auto fl = univar_factor(sq);
  REQUIRE(fl.size() == 1);
  CHECK(fl[0].second == 2);
  FieldTower f4 = FieldTower::prime_field(2).extend("w", poly(FieldTower::prime_field(2), {1, 1, 1}));
  CHECK(roots(UPoly::monomial(f4.one(), 3) - UPoly::constant(f4.one())).size() == 3);
}

TEST_CASE("extend") {
  FieldTower q;
  CHECK_THROWS_AS(q.extend("a", poly(q, {-1, 0, 1})), FieldError);
  FieldTower l = gf2t_theta();
  UPoly m = l.minpoly().embed(l);
  CHECK(m.eval(l.generator()).is_zero());
}

TEST_CASE("field axioms on random triples") {
  FieldTower l = gf2t_theta();
  std::mt19937 rng(7);
  auto rnd = [&] {
    FieldElem t = l.embed(gf2t().generator());
    FieldElem th = l.generator();
    FieldElem e = l.zero();
    for (int i = 0; i < 3; ++i)
      if (rng() % 2) e += t.pow(static_cast<std::int64_t>(rng() % 3)) * th.pow(static_cast<std::int64_t>(rng() % 2));
    FieldElem d = t + l.from_int(static_cast<long>(rng() % 2));
    return e / d;
  };
  for (int i = 0; i < 30; ++i) {
    FieldElem a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == l.one());
  }
}
