// One PASS/FAIL line per acceptance criterion. Exact comparisons only; the
// runtime limits and corpus sizes below are fixed.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "wbu/job.hpp"
#include "wbu/oracle.hpp"
#include "wbu/parse.hpp"

using namespace wbu;

namespace {

constexpr double kLimitExampleB = 5.0;
constexpr double kLimitExampleA = 5.0;
constexpr double kLimitHiddenVertex = 1.0;
constexpr double kLimitClassical = 1.0;  // per curve
constexpr double kLimitIdentities = 60.0;
constexpr double kLimitOracle = 120.0;
constexpr double kLimitDescent = 120.0;
constexpr double kLimitBaseChange = 60.0;
constexpr double kLimitGuard = 1.0;

constexpr int kIdentityInstances = 200;
constexpr int kOracleInstances = 50;
constexpr int kDescentRandom = 40;
constexpr int kExtensionsPerExample = 5;

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXXY{"x1", "x2", "y"};

const char* kExampleA = "y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y";
const char* kExampleB = "y^2 - x1^3*(x1^2 + t)^7 - t*x2^6";

Poly P(const std::string& s, const FieldTower& k, const std::vector<std::string>& vars = kXY) {
  return parse_poly(s, k, vars);
}

Point pt(mpq_class a, mpq_class b) { return {a, b}; }

// Collects failed checks with a short description each.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 4) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << count_ - failed_ << "/" << count_ << " checks";
    for (const auto& f : failures_) os << "; failed: " << f;
    return os.str();
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  const std::string& notes() const { return notes_; }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit;
  std::function<void(Checks&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs `body`, failing the check on any exception and on exceeding `limit`.
void timed(Checks& c, const std::string& what, double limit, const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    c.expect(false, what + " threw: " + e.what());
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os.precision(3);
  os << what << " " << s << "s";
  c.note(os.str());
  c.expect(s < limit, what + " over the time limit");
}

void example_b(Checks& c) {
  timed(c, "example", kLimitExampleB, [&] {
    const FieldTower k = parse_field("GF(2)(t)");
    const Poly f = P(kExampleB, k, kXXY);
    const LocalModel m(f);
    const ContactResult prep = maximal_contact_prep(m);
    c.expect(!prep.directrix_zero, "origin is prepared");
    const ProjPolyhedron origin = build_polyhedron(prep.model);
    c.expect(origin.vertices == std::vector<Point>{pt(0, 3), pt(mpq_class(3, 2), 0)}, "origin vertices");
    c.expect(!vertex_solvable(initial_at_vertex(prep.model, pt(0, 3)), 2), "vertex (0,3) unsolvable");
    c.expect(characterize(m).solved.empty(), "no dissolution at the origin");

    const LocalModel q = localize_point(f, 0, P("x1^2 + t", k, kXXY).to_upoly(0), "θ");
    c.expect(q.tower().descriptor() == "GF(2)(t)[θ]/(θ^2+t)", "extended tower");
    const ProjPolyhedron before = build_polyhedron(q);
    c.expect(before.vertices == std::vector<Point>{pt(0, 3), pt(mpq_class(7, 2), 0)}, "vertices before dissolution");
    const CharPolyResult r = dissolve(q);
    c.expect(r.solved == std::vector<Point>{pt(0, 3)}, "one dissolution at (0,3)");
    c.expect(!r.model.log.empty() && r.model.log.back().str(kXXY) == "y -> y+θ*x2^3", "dissolving change");
    c.expect(r.polyhedron.vertices == std::vector<Point>{pt(mpq_class(1, 2), 3), pt(mpq_class(7, 2), 0)},
             "final vertices");
    bool none = true;
    for (const auto& v : r.polyhedron.vertices)
      if (vertex_solvable(initial_at_vertex(r.model, v), 2)) none = false;
    c.expect(none, "no solvable vertex left");
  });
}

void example_a(Checks& c) {
  timed(c, "example", kLimitExampleA, [&] {
    const FieldTower k = parse_field("GF(2)(z)");
    const Poly f = P(kExampleA, k);
    const CharPolyResult r = characterize(LocalModel(f));
    c.expect(r.nu == 4, "nu = 4");
    c.expect(r.delta && *r.delta == mpq_class(3, 2), "delta = 3/2");
    c.expect(invariant_of(r) == Invariant{4, 6}, "invariant (4,6)");
    const Center j = center_from_invariant(r);
    c.expect(j.str(kXY) == "(y^4, x^6)", "center (y^4, x^6)");
    const ReducedCenter rc = reduce_center(j);
    c.expect(rc.w1 == 3 && rc.w2 == 2 && rc.ell == 12, "w = (3,2), ell = 12");
    auto [lead, rest] = split_leading(r.model.f, j);
    c.expect(lead == P("y^4 + x^3*y^2*z^5 + x^6*z^3", k), "leading form");
    c.expect(rest == P("x^5*y", k), "remainder x^5*y");
    const BPlusChart chart = rees_chart(kXY, j, rc);
    const ProperTransform t = proper_transform(r.model.f, j, chart);
    c.expect(t.f_prime == P("y'^4 + x'^3*y'^2*z^5 + x'^6*z^3 + s*x'^5*y'", k, chart.vars), "proper transform");
    c.expect(check_identities(r.model.f, j, chart, t).all(), "identities");
    const ResolutionTree tree = resolve(LocalModel(f));
    const ResolutionNode& root = tree.nodes.at(0);
    c.expect(root.certificate.bound == 4 && root.certificate.holds, "certificate against 4");
    int worst = 0;
    for (const auto& p : root.certificate.points) worst = std::max(worst, p.order);
    c.expect(worst <= 2, "max exceptional order <= 2");
    c.expect(tree.certified(), "tree certified");
  });
}

void hidden_vertex(Checks& c) {
  timed(c, "both", kLimitHiddenVertex, [&] {
    const CharPolyResult r = characterize(LocalModel(P("y^2 + x^4 + x^5", FieldTower::prime_field(2))));
    c.expect(r.solved.size() == 1, "one dissolution");
    c.expect(r.polyhedron.vertices == std::vector<Point>{{mpq_class(5, 2)}}, "vertex 5/2");
    c.expect(invariant_of(r) == Invariant{2, 5}, "invariant (2,5)");
    const CharPolyResult s = characterize(LocalModel(P("y^2 + t*x^4 + x^5", parse_field("GF(2)(t)"))));
    c.expect(s.solved.empty(), "no dissolution with t");
    c.expect(s.polyhedron.vertices == std::vector<Point>{{mpq_class(2)}}, "vertex 2 stays");
  });
}

void classical(Checks& c) {
  const FieldTower q = FieldTower::rationals();
  struct Case {
    const char* f;
    int w1, w2;
  };
  for (const Case& cs : {Case{"y^2 - x^3", 3, 2}, Case{"y^2 - x^4", 2, 1}}) {
    timed(c, cs.f, kLimitClassical, [&] {
      const ResolutionTree t = resolve(LocalModel(P(cs.f, q)));
      c.expect(t.max_depth == 1, std::string(cs.f) + " depth 1");
      const ResolutionNode& n = t.nodes.at(0);
      c.expect(n.rc.w1 == cs.w1 && n.rc.w2 == cs.w2, std::string(cs.f) + " weights");
      for (const auto& p : n.certificate.points) c.expect(p.order <= 1, std::string(cs.f) + " order <= 1");
      c.expect(t.certified(), std::string(cs.f) + " certified");
      if (cs.w1 == 3) {
        const StabilizerReport st = stabilizers(n.chart);
        c.expect(st.first_axis == 2 && st.second_axis == 3, "cusp stabilizers mu_2, mu_3");
      }
    });
  }
}

// Every blow-up of a random instance and of the resolution trees below it.
void identities(Checks& c) {
  timed(c, "corpus", kLimitIdentities, [&] {
    std::mt19937_64 rng(5);
    const std::vector<FieldTower> fields{FieldTower::prime_field(2), FieldTower::prime_field(3),
                                         FieldTower::prime_field(5), FieldTower::rationals()};
    int instances = 0, blowups = 0, violations = 0;
    for (int i = 0; i < kIdentityInstances; ++i) {
      const FieldTower& k = fields[static_cast<std::size_t>(i) % fields.size()];
      const LocalModel m = random_instance(k, rng);
      c.expect(m.f.total_degree() <= 8, "degree <= 8");
      const CharPolyResult r = characterize(m);
      const Center j = center_from_invariant(r);
      const BPlusChart chart = rees_chart(kXY, j, reduce_center(j));
      const ProperTransform t = proper_transform(r.model.f, j, chart);
      ++instances;
      ++blowups;
      if (!check_identities(r.model.f, j, chart, t).all()) ++violations;
      if (i % 4 == 0) {
        const ResolutionTree tree = resolve(m);
        for (const auto& n : tree.nodes) {
          if (n.verdict != ResolutionNode::Verdict::BlownUp) continue;
          ++blowups;
          if (!n.identities.all()) ++violations;
        }
      }
    }
    c.expect(instances >= kIdentityInstances, "instance count");
    c.expect(violations == 0, std::to_string(violations) + " identity violations");
    c.note(std::to_string(instances) + " instances, " + std::to_string(blowups) + " blow-ups");
  });
}

void oracle(Checks& c) {
  timed(c, "corpus", kLimitOracle, [&] {
    std::mt19937_64 rng(6);
    const std::vector<FieldTower> fields{FieldTower::prime_field(2), FieldTower::prime_field(3),
                                         FieldTower::prime_field(5), FieldTower::rationals()};
    int agree = 0, total = 0, f2 = 0;
    auto record = [&](const LocalModel& m) {
      const auto rec = agreement_record(m, default_budget(m.tower()));
      ++total;
      if (rec["agree"].get<bool>())
        ++agree;
      else
        c.expect(false, rec.dump());
      if (m.tower().descriptor() == "GF(2)") ++f2;
    };
    for (int i = 0; i < kOracleInstances; ++i)
      record(random_instance(fields[static_cast<std::size_t>(i) % fields.size()], rng));
    const FieldTower q = FieldTower::rationals();
    for (const char* g : {"y^2 - x^3", "y^2 - x^4", "y^2 + x^2 + x^3", "(y^2 - x^3)^2 - x^7", "y^4 + x^3*y^2 + x^9"})
      record(LocalModel(P(g, q)));
    record(LocalModel(P(kExampleA, parse_field("GF(2)(z)"))));
    record(LocalModel(P("y^2 + x^4 + x^5", FieldTower::prime_field(2))));
    record(LocalModel(P("y^2 + t*x^4 + x^5", parse_field("GF(2)(t)"))));
    c.expect(total >= kOracleInstances + 8, "instance count");
    c.expect(f2 > 0, "GF(2) instances present");
    c.note(std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(f2) + " over GF(2)");
  });
}

void descent(Checks& c) {
  timed(c, "corpus", kLimitDescent, [&] {
    const FieldTower q = FieldTower::rationals();
    std::vector<LocalModel> corpus;
    for (const char* g : {"y^2 - x^3", "y^2 - x^4", "y^2 + x^2 + x^3", "(y^2 - x^3)^2 - x^7", "y^4 + x^3*y^2 + x^9",
                          "y^3 - x^7", "y^2 - x^5", "(y^2 - x^3)*(y^2 - 2*x^3)",
                          "((y^2 - x^3)^2 - x^7)^2 - x^20"})
      corpus.emplace_back(P(g, q));
    corpus.emplace_back(P(kExampleA, parse_field("GF(2)(z)")));
    corpus.emplace_back(P("y^2 + x^4 + x^5", FieldTower::prime_field(2)));
    corpus.emplace_back(P("y^4 + x^3*y^2 + x^9", FieldTower::prime_field(2)));
    corpus.emplace_back(P("y^3 + x^4 + x^5", FieldTower::prime_field(3)));
    std::mt19937_64 rng(7);
    const std::vector<FieldTower> fields{FieldTower::prime_field(2), FieldTower::prime_field(3),
                                         FieldTower::prime_field(5), FieldTower::rationals()};
    InstanceOptions deep;
    deep.max_degree = 12;
    deep.max_nu = 4;
    deep.extra_terms = 5;
    for (int i = 0; i < kDescentRandom; ++i)
      corpus.push_back(random_instance(fields[static_cast<std::size_t>(i) % fields.size()], rng, i % 2 ? deep : InstanceOptions{}));
    int trees = 0, edges = 0, points = 0;
    for (const auto& m : corpus) {
      const ResolutionTree t = resolve(m);
      ++trees;
      c.expect(t.certified(), m.f.str() + " certified");
      for (const auto& n : t.nodes) {
        if (n.verdict == ResolutionNode::Verdict::BlownUp) {
          const OrderCertificate oc = verify_order_drop(n);
          c.expect(oc.holds, m.f.str() + " order drop at node " + std::to_string(n.id));
          for (const auto& p : oc.points) {
            ++points;
            c.expect(p.order < n.invariant->a1, m.f.str() + " point order");
          }
          for (int ch : n.children) {
            ++edges;
            const auto& child = t.nodes[static_cast<std::size_t>(ch)];
            c.expect(!child.invariant || *child.invariant < *n.invariant, m.f.str() + " lexicographic descent");
          }
        } else {
          c.expect(n.children.empty(), "leaf without children");
        }
      }
    }
    const ResolutionTree global = resolve_curve(P("y^2 - x^2*(x - 1)^2*(x + 1)", q));
    c.expect(global.certified(), "global nodal curve certified");
    c.note(std::to_string(trees) + " trees, " + std::to_string(edges) + " edges, " + std::to_string(points) +
           " exceptional points");
  });
}

void base_change(Checks& c) {
  timed(c, "all", kLimitBaseChange, [&] {
    struct Golden {
      std::string field;
      std::string f;
      std::vector<std::string> vars;
      std::vector<std::string> extensions;
    };
    const std::vector<std::string> overQ{"T^2 - 2", "T^2 + 1", "T^2 - 3", "T^3 - 2", "T^2 + T + 1"};
    const std::vector<std::string> overF2{"T^2 + T + 1", "T^3 + T + 1", "T^3 + T^2 + 1", "T^4 + T + 1",
                                          "T^5 + T^2 + 1"};
    const std::vector<Golden> golden{
        {"QQ", "y^2 - x^3", kXY, overQ},
        {"QQ", "y^2 - x^4", kXY, overQ},
        {"QQ", "(y^2 - x^3)^2 - x^7", kXY, overQ},
        {"GF(2)", "y^2 + x^4 + x^5", kXY, overF2},
        {"GF(2)(z)", kExampleA, kXY, {"T^2 + T + z", "T^2 + T + 1", "T^3 + T + 1", "T^2 + z*T + 1", "T^2 + z*T + z"}},
        {"GF(2)(t)", kExampleB, kXXY, {"T^2 + T + t", "T^2 + T + 1", "T^3 + T + 1", "T^2 + t*T + 1", "T^2 + t*T + t"}},
    };
    int stable = 0;
    for (const auto& g : golden) {
      const FieldTower k = parse_field(g.field);
      const LocalModel m(P(g.f, k, g.vars));
      c.expect(g.extensions.size() == kExtensionsPerExample, "extension count");
      for (const auto& e : g.extensions) {
        const BaseChangeReport r = separable_basechange_check(m, P(e, k, {"T"}).to_upoly(0), "β");
        c.expect(r.verdict == BaseChangeReport::Verdict::Stable, g.f + " over " + r.extension + ": " + r.before +
                                                                     " -> " + r.after + " (" + r.verdict_str() + ")");
        stable += r.verdict == BaseChangeReport::Verdict::Stable;
      }
    }
    const FieldTower ft = parse_field("GF(2)(t)");
    const BaseChangeReport ctl = basechange_report(LocalModel(P("y^2 + t*x^6", ft)), P("T^2 + t", ft, {"T"}).to_upoly(0), "θ");
    c.expect(!ctl.separable, "control is inseparable");
    c.expect(!ctl.invariant_equal, "control changes the invariant");
    c.expect(ctl.verdict == BaseChangeReport::Verdict::ExpectedChange, "control reported as expected change");
    c.note(std::to_string(stable) + " stable base changes; control " + ctl.before + " -> " + ctl.after + " (" +
           ctl.verdict_str() + ")");
  });
}

void guard(Checks& c) {
  timed(c, "all", kLimitGuard, [&] {
    const FieldTower q = FieldTower::rationals();
    for (const char* g : {"y^2", "((1 - x)*y - x)^2"}) {
      const LocalModel m(P(g, q));
      c.expect(quasiregular_check(m), std::string(g) + " quasi-regular");
      const CharPolyResult r = characterize(m);
      c.expect(r.quasiregular && r.solved.empty() && r.history.empty(), std::string(g) + " no dissolution loop");
      const ResolutionTree t = resolve(m);
      c.expect(t.quasiregular_input() && t.max_depth == 0, std::string(g) + " empty tree");
      const RunResult run = run_job(parse_job(std::string("f = ") + g + "; resolve;"), RunOptions{".", false});
      c.expect(run.exit_code == 0 && run.summary.find("quasi-regular") != std::string::npos,
               std::string(g) + " job verdict");
    }
    DissolveOptions off;
    off.guard = false;
    bool budget = false;
    try {
      characterize(LocalModel(P("((1 - x)*y - x)^2", q)), off);
    } catch (const BudgetError&) {
      budget = true;
    }
    c.expect(budget, "budget error with the guard disabled");
  });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "imperfect-field example: origin and extended point", kLimitExampleB, example_b},
      {2, "mixed-characteristic example: center, transform, certificate", kLimitExampleA, example_a},
      {3, "characteristic-2 dissolution and its imperfect-field variant", kLimitHiddenVertex, hidden_vertex},
      {4, "one-step classical resolutions", kLimitClassical, classical},
      {5, "blow-up identities on the randomized corpus", kLimitIdentities, identities},
      {6, "exhaustive search agrees with the invariant", kLimitOracle, oracle},
      {7, "lexicographic descent and order-drop certificates", kLimitDescent, descent},
      {8, "separable base change stability and inseparable control", kLimitBaseChange, base_change},
      {9, "quasi-regular guard and budget error path", kLimitGuard, guard},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks c;
    cr.body(c);
    failed += !c.ok();
    std::cout << (c.ok() ? "PASS" : "FAIL") << " " << cr.id << " " << cr.title << " [" << c.detail() << "; "
              << c.notes() << "]\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
