#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wbu/parse.hpp"
#include "wbu/resolver.hpp"

using namespace wbu;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Poly P(const std::string& s, const FieldTower& k, const std::vector<std::string>& vars = kXY) {
  return parse_poly(s, k, vars);
}

const ResolutionNode& root(const ResolutionTree& t) { return t.nodes.at(static_cast<std::size_t>(t.roots.at(0))); }

}  // namespace

TEST_CASE("one-step resolutions over the rationals") {
  const FieldTower q = FieldTower::rationals();
  ResolutionTree cusp = resolve(LocalModel(P("y^2 - x^3", q)));
  CHECK(cusp.max_depth == 1);
  CHECK(cusp.certified());
  const ResolutionNode& n = root(cusp);
  CHECK(n.verdict == ResolutionNode::Verdict::BlownUp);
  CHECK(n.invariant->str() == "(2,3)");
  CHECK(n.rc.w1 == 3);
  CHECK(n.rc.w2 == 2);
  CHECK(n.children.empty());
  CHECK(n.transform.f_prime == P("y'^2 - x'^3", q, {"s1", "x'", "y'"}));
  const StabilizerReport st = stabilizers(n.chart);
  CHECK(st.first_axis == 2);
  CHECK(st.second_axis == 3);
  for (const auto& p : n.certificate.points) CHECK(p.order <= 1);

  ResolutionTree tac = resolve(LocalModel(P("y^2 - x^4", q)));
  CHECK(tac.max_depth == 1);
  CHECK(tac.certified());
  CHECK(root(tac).rc.w1 == 2);
  CHECK(root(tac).rc.w2 == 1);
  CHECK(root(tac).ambient.torus.at(0).weights == std::vector<int>{-1, 1, 2});
  for (const auto& p : root(tac).certificate.points) CHECK(p.order <= 1);
  CHECK(root(tac).certificate.points.size() == 2);  // y' = x'^2 and y' = -x'^2
}

TEST_CASE("quasi-regular inputs give an empty tree") {
  const FieldTower q = FieldTower::rationals();
  for (const char* s : {"y^2", "((1-x)*y - x)^2"}) {
    ResolutionTree t = resolve(LocalModel(P(s, q)));
    CHECK(t.quasiregular_input());
    CHECK(t.max_depth == 0);
    CHECK(root(t).children.empty());
  }
}

TEST_CASE("classical blow-up of a node separates the branches") {
  const FieldTower q = FieldTower::rationals();
  ResolutionTree t = resolve(LocalModel(P("y^2 + x^2 + x^3", q)));
  const ResolutionNode& n = root(t);
  CHECK(n.invariant->str() == "(2,2)");
  CHECK(n.rc.w1 == 1);
  CHECK(n.rc.w2 == 1);
  CHECK(t.max_depth == 1);
  CHECK(t.certified());
  for (const auto& p : n.certificate.points) CHECK(p.order <= 1);
}

TEST_CASE("mixed-characteristic example resolves in one step") {
  const FieldTower k = FieldTower::prime_field(2).adjoin_transcendental("z");
  ResolutionTree t = resolve(LocalModel(P("y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y", k)));
  CHECK(t.certified());
  const ResolutionNode& n = root(t);
  CHECK(n.invariant->str() == "(4,6)");
  CHECK(n.certificate.bound == 4);
  for (const auto& p : n.certificate.points) CHECK(p.order <= 2);
  CHECK(verify_order_drop(n).holds);
}

TEST_CASE("a two-step resolution descends lexicographically") {
  const FieldTower q = FieldTower::rationals();
  ResolutionTree t = resolve(LocalModel(P("(y^2 - x^3)^2 - x^7", q)));
  CHECK(t.certified());
  CHECK(t.max_depth >= 2);
  const ResolutionNode& n = root(t);
  CHECK(n.invariant->str() == "(4,6)");
  REQUIRE(n.children.size() == 1);
  const ResolutionNode& c = t.nodes[static_cast<std::size_t>(n.children[0])];
  CHECK(c.orbit.locus == OrbitPoint::Locus::Generic);
  REQUIRE(c.invariant);
  CHECK(*c.invariant < *n.invariant);

  ResolutionTree again = resolve(LocalModel(P("(y^2 - x^3)^2 - x^7", q)));
  CHECK(again.to_json() == t.to_json());
}

TEST_CASE("three nested cusps need three blow-ups") {
  const FieldTower q = FieldTower::rationals();
  ResolutionTree t = resolve(LocalModel(P("((y^2 - x^3)^2 - x^7)^2 - x^20", q)));
  CHECK(t.certified());
  CHECK(t.max_depth == 3);
  const ResolutionNode* n = &root(t);
  CHECK(n->invariant->str() == "(8,12)");
  std::vector<std::string> path{n->invariant->str()};
  while (!n->children.empty()) {
    const ResolutionNode& c = t.nodes[static_cast<std::size_t>(n->children[0])];
    if (!c.invariant) break;
    CHECK(*c.invariant < *n->invariant);
    path.push_back(c.invariant->str());
    n = &c;
  }
  CHECK(path == std::vector<std::string>{"(8,12)", "(4,4)", "(2,12)"});
}

TEST_CASE("torus stabilizer at a special orbit") {
  const FieldTower q = FieldTower::rationals();
  // The leading form y'^2*(y'^2 + x'^3) is singular along the axis y' = 0.
  ResolutionTree t = resolve(LocalModel(P("y^4 + x^3*y^2 + x^9", q)));
  CHECK(t.certified());
  CHECK(t.max_depth == 2);
  const ResolutionNode& n = root(t);
  REQUIRE(n.children.size() == 1);
  const ResolutionNode& c = t.nodes[static_cast<std::size_t>(n.children[0])];
  CHECK(c.orbit.locus == OrbitPoint::Locus::FirstAxis);
  CHECK(c.orbit.stabilizer == 2);
  CHECK(c.residual_weights == std::vector<int>{1, 1});
  CHECK(c.model.f == P("s1^6 + y'^4 + y'^2", q, {"s1", "y'"}));
  CHECK(c.invariant->str() == "(2,6)");
  CHECK(c.equivariance.semi_invariant);
  REQUIRE(c.ambient.torus.size() == 2);
  CHECK(c.ambient.torus[1].order == 2);
  CHECK(c.ambient.semi_invariant());

  // Over GF(2) the same slice is a square of a regular curve.
  ResolutionTree t2 = resolve(LocalModel(P("y^4 + x^3*y^2 + x^9", FieldTower::prime_field(2))));
  CHECK(t2.certified());
  CHECK(t2.max_depth == 1);
}

TEST_CASE("singular points of global curves") {
  const FieldTower q = FieldTower::rationals();
  auto pts = singular_points(P("y^2 - x^3", q));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].model.f == P("y^2 - x^3", q));

  auto two = singular_points(P("y^2 - x^2*(x-1)^2*(x+1)", q));
  CHECK(two.size() == 2);

  auto conj = singular_points(P("y^2 - (x^2 - 2)^3", q));
  REQUIRE(conj.size() == 1);
  CHECK(conj[0].model.tower().algebraic_degree() == 2);
  CHECK(invariant(conj[0].model).str() == "(2,3)");

  CHECK(singular_points(P("y - x^2", q)).empty());
  ResolutionTree t = resolve_curve(P("y^2 - x^2*(x-1)^2*(x+1)", q));
  CHECK(t.roots.size() == 2);
  CHECK(t.certified());
}

TEST_CASE("localization at an inseparable point rechooses the coefficient field") {
  const FieldTower k = parse_field("GF(2)(t)");
  const std::vector<std::string> v{"x1", "x2", "y"};
  Poly f = parse_poly("y^2 - x1^3*(x1^2 + t)^7 - t*x2^6", k, v);
  UPoly g = parse_poly("x1^2 + t", k, v).to_upoly(0);
  LocalModel m = localize_point(f, 0, g, "θ");
  CHECK(m.tower().descriptor() == "GF(2)(t)[θ]/(θ^2+t)");
  CHECK(m.f == parse_poly("y^2 + θ^3*x1^7 + x1*x2^6 + θ^2*x2^6", m.tower(), v));
}

TEST_CASE("absorbing an invertible variable") {
  const FieldTower k = FieldTower::prime_field(2);
  Poly f = parse_poly("y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y", k, {"x", "y", "z"});
  Poly g = absorb_variable(f, "z");
  CHECK(g.field().descriptor() == "GF(2)(z)");
  CHECK(g == P("y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y", g.field()));
}

TEST_CASE("tree exports") {
  const FieldTower q = FieldTower::rationals();
  ResolutionTree t = resolve(LocalModel(P("y^2 - x^3", q)));
  auto j = t.to_json();
  CHECK(j["schema"] == "wbu.tree/1");
  CHECK(j["max_depth"] == 1);
  CHECK(j["nodes"][0]["reduced_center"]["ell"] == 6);
  CHECK(j["nodes"][0]["chart"]["stabilizers"]["first_axis"] == 2);
  const std::string dot = t.to_dot();
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("(2,3)") != std::string::npos);
}

TEST_CASE("cusp along an inseparable point") {
  const FieldTower k = parse_field("GF(2)(t)");
  Poly f = P("y^2 + (x^2 + t)^3", k);
  CHECK_THROWS_AS(singular_points(f), UnsupportedError);  // the Jacobian vanishes identically
  LocalModel m = localize_point(f, 0, P("x^2 + t", k).to_upoly(0), "θ");
  CHECK(m.f == P("y^2 + x^3", m.tower()));
  ResolutionTree t = resolve(m);
  CHECK(t.certified());
  CHECK(t.max_depth == 1);
}
