#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wbu/parse.hpp"
#include "wbu/wblowup.hpp"

using namespace wbu;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Poly P(const std::string& s, const FieldTower& k, const std::vector<std::string>& vars = kXY) {
  return parse_poly(s, k, vars);
}

Center yx_center(mpq_class a1, mpq_class a2) {
  Center j;
  j.first = 1;
  j.second = 0;
  j.a1 = a1;
  j.a2 = a2;
  return j;
}

struct Blowup {
  Poly source;
  Center j;
  BPlusChart chart;
  ProperTransform t;
};

Blowup blow_up(const Poly& f) {
  CharPolyResult r = characterize(LocalModel(f));
  Blowup b;
  b.source = r.model.f;
  b.j = center_from_invariant(r);
  b.chart = rees_chart(r.model.f.vars(), b.j, reduce_center(b.j));
  b.t = proper_transform(r.model.f, b.j, b.chart);
  return b;
}

}  // namespace

TEST_CASE("reduced centers") {
  auto check = [](mpq_class a1, mpq_class a2, int w1, int w2, int ell) {
    ReducedCenter rc = reduce_center(a1, a2);
    CHECK(rc.w1 == w1);
    CHECK(rc.w2 == w2);
    CHECK(rc.ell == ell);
  };
  check(4, 6, 3, 2, 12);
  check(2, 3, 3, 2, 6);
  check(5, 5, 1, 1, 5);
  check(2, 5, 5, 2, 10);
  check(2, mpq_class(13, 2), 13, 4, 26);
  check(3, mpq_class(9, 2), 3, 2, 9);
  CHECK_THROWS(reduce_center(0, 1));
}

TEST_CASE("reduced center weights are coprime and divide exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int a1 = 1 + static_cast<int>(rng() % 9);
    mpq_class a2(static_cast<long>(a1 + rng() % 20), static_cast<long>(1 + rng() % 6));
    a2.canonicalize();
    if (a2 < a1) continue;
    ReducedCenter rc = reduce_center(a1, a2);
    CHECK(std::gcd(rc.w1, rc.w2) == 1);
    CHECK(mpq_class(rc.ell) / a1 == rc.w1);
    CHECK(mpq_class(rc.ell) / a2 == rc.w2);
  }
}

TEST_CASE("admissibility and the leading split") {
  const FieldTower q = FieldTower::rationals();
  Poly cusp = P("y^2 - x^3", q);
  CHECK(admissible(yx_center(2, 3), cusp));
  CHECK_FALSE(admissible(yx_center(2, 4), cusp));
  CHECK_THROWS_AS(proper_transform(cusp, yx_center(2, 4),
                                   rees_chart(kXY, yx_center(2, 4), reduce_center(2, 4))),
                  FieldError);

  const FieldTower k = FieldTower::prime_field(2).adjoin_transcendental("z");
  Poly f = P("y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y", k);
  auto [lead, rest] = split_leading(f, yx_center(4, 6));
  CHECK(lead == P("y^4 + x^3*y^2*z^5 + x^6*z^3", k));
  CHECK(rest == P("x^5*y", k));
}

TEST_CASE("transform of the mixed-characteristic example") {
  const FieldTower k = FieldTower::prime_field(2).adjoin_transcendental("z");
  Poly f = P("y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y", k);
  Blowup b = blow_up(f);
  CHECK(b.j.str(kXY) == "(y^4, x^6)");
  CHECK(b.chart.rc.w1 == 3);
  CHECK(b.chart.rc.w2 == 2);
  CHECK(b.chart.rc.ell == 12);
  CHECK(b.chart.vars == std::vector<std::string>{"s", "x'", "y'"});
  CHECK(b.chart.weights == std::vector<int>{-1, 2, 3});
  const std::vector<std::string> cv{"s", "x'", "y'"};
  CHECK(b.t.f_prime == P("y'^4 + x'^3*y'^2*z^5 + x'^6*z^3 + s*x'^5*y'", k, cv));
  CHECK(b.t.leading == P("y'^4 + x'^3*y'^2*z^5 + x'^6*z^3", k, cv));
  CHECK(b.t.rest == P("x'^5*y'", k, cv));
  CHECK(check_identities(b.source, b.j, b.chart, b.t).all());

  Dehomogenized d = dehomogenize(b.t.leading, b.chart);
  CHECK(d.first_exp == 0);
  CHECK(d.second_exp == 0);
  CHECK(d.g.str("u") == P("u^2 + z^5*u + z^3", k, {"u"}).to_upoly(0).str("u"));

  auto orbits = exceptional_orbits(b.t, b.chart);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].kind == ExceptionalOrbit::Kind::Generic);
  CHECK(orbits[0].g.degree() == 2);
  int max_order = 0;
  for (const auto& o : orbits) max_order = std::max(max_order, o.order);
  CHECK(max_order <= 2);
  CHECK(max_order < 4);
}

TEST_CASE("cusp stabilizers and the smooth transform") {
  const FieldTower q = FieldTower::rationals();
  Poly cusp = P("y^2 - x^3", q);
  Blowup b = blow_up(cusp);
  CHECK(b.chart.rc.w1 == 3);
  CHECK(b.chart.rc.w2 == 2);
  StabilizerReport st = stabilizers(b.chart);
  CHECK(st.first_axis == 2);
  CHECK(st.second_axis == 3);
  CHECK(st.generic == 1);
  CHECK(check_identities(b.source, b.j, b.chart, b.t).all());

  auto orbits = exceptional_orbits(b.t, b.chart);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].order == 1);
  CHECK(orbits[0].point[b.chart.x1].is_one());
  CHECK(orbits[0].point[b.chart.x2].is_one());

  std::vector<FieldElem> origin_axis{q.zero(), q.zero(), q.zero()};
  CHECK_THROWS_AS(log_order(b.t, b.chart, origin_axis), FieldError);
  // Off the exceptional divisor log_order is the plain order.
  std::vector<FieldElem> off{q.one(), q.one(), q.one()};
  CHECK(log_order(b.t, b.chart, off) == 1);
}

TEST_CASE("axis orbits of a monomial leading form") {
  const FieldTower q = FieldTower::rationals();
  Poly f = P("y^2*x^2 + y^4 + x^7", q);
  Center j = yx_center(4, 4);
  BPlusChart chart = rees_chart(kXY, j, reduce_center(j));
  ProperTransform t = proper_transform(f, j, chart);
  CHECK(t.leading == P("x'^2*y'^2 + y'^4", q, chart.vars));
  CHECK(check_identities(f, j, chart, t).all());
  auto orbits = exceptional_orbits(t, chart);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].kind == ExceptionalOrbit::Kind::FirstAxis);
  CHECK(orbits[0].multiplicity == 2);
  CHECK(orbits[0].order == 2);
  CHECK(orbits[1].kind == ExceptionalOrbit::Kind::Generic);
  CHECK(orbits[1].order == 1);  // u = -1: x'^2 + y'^2 over a quadratic extension
}

TEST_CASE("identities on random admissible inputs") {
  std::mt19937_64 rng(11);
  const FieldTower k = FieldTower::prime_field(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int a1 = 2 + static_cast<int>(rng() % 3);
    const int a2 = a1 + static_cast<int>(rng() % 4);
    Center j = yx_center(a1, a2);
    Poly f(k, kXY);
    for (int n = 0; n < 5; ++n) {
      const int i = static_cast<int>(rng() % 9), jj = static_cast<int>(rng() % 6);
      Exponent e{i, jj};
      if (v_J(e, j.valuation()) < 1) continue;
      f.add_term(e, k.from_int(1 + static_cast<long>(rng() % 2)));
    }
    if (f.is_zero()) continue;
    BPlusChart chart = rees_chart(kXY, j, reduce_center(j));
    ProperTransform t = proper_transform(f, j, chart);
    CHECK(check_identities(f, j, chart, t).all());
  }
}
