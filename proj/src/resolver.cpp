#include "wbu/resolver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wbu {

namespace {

int mod(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

std::string fresh_name(const FieldTower& k, const std::vector<std::string>& vars, const std::string& base) {
  for (int i = 0;; ++i) {
    std::string name = i == 0 ? base : base + std::to_string(i);
    if (!k.named_generator(name) && std::find(vars.begin(), vars.end(), name) == vars.end()) return name;
  }
}

bool inseparable(const UPoly& g) { return g.degree() >= 1 && g.derivative().is_zero(); }

// g with variable `var` set to `value` and removed.
Poly slice(const Poly& g, std::size_t var, const FieldElem& value) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < g.arity(); ++i)
    if (i != var) vars.push_back(g.vars()[i]);
  std::vector<Poly> images;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < g.arity(); ++i)
    images.push_back(i == var ? Poly::constant(g.field(), vars, value) : Poly::variable(g.field(), vars, pos++));
  return g.substitute(images);
}

UPoly upoly_in(const Poly& g, std::size_t var, const std::vector<FieldElem>& point) {
  // g restricted to the line where every other variable takes its point value.
  std::vector<Poly> images;
  const FieldTower& k = point.front().tower();
  const std::vector<std::string> one{"_"};
  for (std::size_t i = 0; i < g.arity(); ++i)
    images.push_back(i == var ? Poly::variable(k, one, 0) : Poly::constant(k, one, point[i]));
  return g.embed(k).substitute(images).to_upoly(0);
}

std::string locus_name(OrbitPoint::Locus l) {
  switch (l) {
    case OrbitPoint::Locus::Origin:
      return "origin";
    case OrbitPoint::Locus::Point:
      return "point";
    case OrbitPoint::Locus::FirstAxis:
      return "first-axis";
    case OrbitPoint::Locus::SecondAxis:
      return "second-axis";
    case OrbitPoint::Locus::Generic:
      return "generic";
  }
  return {};
}

std::string verdict_name(ResolutionNode::Verdict v) {
  switch (v) {
    case ResolutionNode::Verdict::Regular:
      return "regular";
    case ResolutionNode::Verdict::QuasiRegular:
      return "quasi-regular";
    case ResolutionNode::Verdict::BlownUp:
      return "blown-up";
  }
  return {};
}

OrderCertificate certify(const std::vector<ExceptionalOrbit>& orbits, const ProperTransform& t,
                         const BPlusChart& chart, int bound) {
  OrderCertificate c;
  c.bound = bound;
  c.holds = true;
  int generic_degree = 0;
  for (const auto& o : orbits) {
    CertifiedPoint p;
    p.orbit = o.str(chart);
    p.residue_field = o.residue.descriptor();
    for (std::size_t i = 0; i < o.point.size(); ++i) p.coordinates.push_back(chart.vars[i] + "=" + o.point[i].str());
    p.order = o.order;
    if (o.order >= bound) c.holds = false;
    if (o.kind == ExceptionalOrbit::Kind::Generic) generic_degree += o.g.degree() * o.multiplicity;
    c.points.push_back(std::move(p));
  }
  const Dehomogenized d = dehomogenize(t.leading, chart);
  c.degree_accounting = generic_degree == std::max(d.g.degree(), 0);
  c.holds = c.holds && c.degree_accounting;
  return c;
}

bool orbit_before(const ExceptionalOrbit& a, const ExceptionalOrbit& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  const std::string sa = a.g.is_zero() ? "" : a.g.str("u"), sb = b.g.is_zero() ? "" : b.g.str("u");
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  return sa < sb;
}

}  // namespace

int AmbientChart::character(std::size_t factor, const Exponent& e) const {
  const TorusFactor& f = torus.at(factor);
  long c = 0;
  for (std::size_t i = 0; i < e.size(); ++i) c += static_cast<long>(f.weights.at(i)) * e[i];
  return f.order > 0 ? mod(c, f.order) : static_cast<int>(c);
}

bool AmbientChart::semi_invariant() const {
  for (std::size_t k = 0; k < torus.size(); ++k) {
    std::optional<int> chi;
    for (const auto& [e, c] : transform.terms()) {
      const int x = character(k, e);
      if (chi && *chi != x) return false;
      chi = x;
    }
  }
  return true;
}

std::string OrbitPoint::str() const {
  std::string s = locus_name(locus);
  if (!description.empty()) s += " " + description;
  if (stabilizer > 1) s += " μ" + std::to_string(stabilizer);
  return s;
}

Poly absorb_variable(const Poly& f, const std::string& name) {
  const auto idx = f.var_index(name);
  if (!idx) throw FieldError("no variable named " + name);
  const FieldTower k = f.field().adjoin_transcendental(name);
  std::vector<std::string> vars;
  for (const auto& v : f.vars())
    if (v != name) vars.push_back(v);
  const FieldElem t = k.generator();
  Poly out(k, vars);
  for (const auto& [e, c] : f.terms()) {
    Exponent ne;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != *idx) ne.push_back(e[i]);
    out.add_term(ne, k.embed(c) * t.pow(static_cast<std::int64_t>(e[*idx])));
  }
  return out;
}

LocalModel localize_point(const Poly& f, std::size_t var, const UPoly& g_in, const std::string& theta) {
  const FieldTower& k = f.field();
  if (g_in.field() != k) throw FieldError("point polynomial must be over the curve's field");
  if (g_in.degree() < 1) throw FieldError("point polynomial must be nonconstant");
  const UPoly g = g_in.monic();
  std::vector<FieldElem> point(f.arity(), k.zero());
  if (g.degree() == 1) {
    point[var] = -g.coeff(0);
    return LocalModel(f.taylor_shift(point));
  }
  const FieldTower ext = k.extend_unchecked(theta, g);
  if (!inseparable(g)) {
    std::vector<FieldElem> p(f.arity(), ext.zero());
    p[var] = ext.generator();
    return LocalModel(f.taylor_shift(p));
  }

  // Inseparable residue extension: rechoose the coefficient field.
  if (k.kind() != FieldTower::Kind::Transcendental)
    throw UnsupportedError("inseparable point over a field without a top transcendental: " + k.descriptor());
  const FieldTower base = k.parent();
  UPoly den = UPoly::constant(base.one());
  for (const auto& c : g.coeffs()) den = den * c.den().exact_div(gcd(den, c.den()));
  UPoly a_part(base), b_part(base);
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    const FieldElem& c = g.coeffs()[i];
    const UPoly num = c.num() * den.exact_div(c.den());
    if (num.degree() > 1)
      throw UnsupportedError("point polynomial is not linear in " + k.generator_name() + ": " + g.str(f.vars()[var]));
    a_part = a_part + UPoly::monomial(num.coeff(1), i);
    b_part = b_part + UPoly::monomial(num.coeff(0), i);
  }
  if (a_part.is_zero()) throw UnsupportedError("point polynomial does not involve " + k.generator_name());
  const FieldElem th = ext.generator();
  FieldElem a_theta = ext.zero();
  for (std::size_t i = a_part.coeffs().size(); i-- > 0;) a_theta = a_theta * th + ext.embed(a_part.coeffs()[i]);
  if (a_theta.is_zero()) throw UnsupportedError("degenerate point polynomial");

  const std::vector<std::string>& vars = f.vars();
  const Poly t_image = Poly::constant(ext, vars, ext.embed(k.generator())) +
                       Poly::variable(ext, vars, var) * a_theta.inv();
  std::vector<Poly> t_powers{Poly::constant(ext, vars, ext.one())};
  Poly out(ext, vars);
  for (const auto& [e, c] : f.terms()) {
    if (c.den().degree() > 0)
      throw UnsupportedError("coefficient with a denominator in " + k.generator_name() + ": " + c.str());
    const FieldElem inv_den = ext.embed(c.den().coeff(0)).inv();
    Exponent rest = e;
    rest[var] = 0;
    const FieldElem xpow = th.pow(static_cast<std::int64_t>(e[var]));
    Poly coeff(ext, vars);
    for (std::size_t j = 0; j < c.num().coeffs().size(); ++j) {
      if (c.num().coeffs()[j].is_zero()) continue;
      while (t_powers.size() <= j) t_powers.push_back(t_powers.back() * t_image);
      coeff += t_powers[j] * (ext.embed(c.num().coeffs()[j]) * inv_den);
    }
    out += coeff.multiply_monomial(rest) * xpow;
  }
  return LocalModel(out);
}

std::vector<LocalizedPoint> singular_points(const Poly& f) {
  if (f.arity() != 2) throw UnsupportedError("singular point search is for plane curves");
  std::vector<LocalizedPoint> out;
  if (f.is_constant()) return out;
  const FieldTower& k = f.field();
  const Poly fr = radical(f);
  const std::size_t ye = fr.involves(1) ? 1 : 0, xe = 1 - ye;
  const std::vector<Poly> partials{fr.derivative(xe), fr.derivative(ye)};

  auto coeff_list = [&](const Poly& g) {
    std::vector<UPoly> c;
    for (const auto& p : g.coefficients_in(ye)) c.push_back(p.to_upoly(xe));
    return c;
  };
  UPoly r(k);
  for (const auto& p : partials) {
    if (p.is_zero()) continue;
    UPoly res = resultant_y(coeff_list(fr), coeff_list(p));
    if (res.is_zero()) continue;
    r = r.is_zero() ? res : gcd(r, res);
  }
  if (r.is_zero()) throw UnsupportedError("the non-smooth locus of " + f.str() + " is not finite");
  if (r.degree() < 1) return out;

  const std::string& xname = f.vars()[xe];
  const std::string& yname = f.vars()[ye];
  for (const auto& [h, mult] : univar_factor(r)) {
    (void)mult;
    FieldTower kx = k;
    FieldElem alpha;
    if (h.degree() == 1) {
      alpha = -h.coeff(0) / h.coeff(1);
    } else {
      kx = k.extend_unchecked(fresh_name(k, f.vars(), "α"), h.monic());
      alpha = kx.generator();
    }
    std::vector<FieldElem> at(2, kx.zero());
    at[xe] = alpha;
    UPoly line(kx);
    for (const Poly* p : {&fr, &partials[0], &partials[1]}) {
      if (p->is_zero()) continue;
      UPoly u = upoly_in(*p, ye, at);
      if (u.is_zero()) continue;
      line = line.is_zero() ? u : gcd(line, u);
    }
    if (line.is_zero()) throw UnsupportedError("non-isolated non-smooth points over " + h.str(xname));
    if (line.degree() < 1) continue;
    for (const auto& [rf, rmult] : univar_factor(line)) {
      (void)rmult;
      LocalizedPoint lp;
      lp.orbit.locus = OrbitPoint::Locus::Point;
      lp.orbit.description = "{" + h.monic().str(xname) + "=0, " + rf.str(yname) + "=0}";
      const bool x_insep = h.degree() > 1 && inseparable(h);
      const bool y_insep = rf.degree() > 1 && inseparable(rf);
      if (!x_insep && !y_insep) {
        FieldTower kxy = kx;
        FieldElem beta;
        if (rf.degree() == 1) {
          beta = -rf.coeff(0) / rf.coeff(1);
        } else {
          kxy = kx.extend_unchecked(fresh_name(kx, f.vars(), "β"), rf.monic());
          beta = kxy.generator();
        }
        std::vector<FieldElem> p(2, kxy.zero());
        p[xe] = kxy.embed(alpha);
        p[ye] = beta;
        lp.model = LocalModel(f.taylor_shift(p));
        if (kxy != k) lp.orbit.residue_minpoly = kxy == kx ? h.monic() : rf.monic();
      } else if (x_insep && rf.degree() == 1) {
        // Move the point onto y = 0 with a polynomial change over k, then
        // localize along the inseparable x-coordinate.
        const FieldElem beta = -rf.coeff(0) / rf.coeff(1);
        const Poly shift = Poly::from_upoly(beta.rep(), f.vars(), xe);
        const Poly moved = f.substitute_var(ye, Poly::variable(k, f.vars(), ye) + shift);
        lp.model = localize_point(moved, xe, h, fresh_name(k, f.vars(), "θ"));
        lp.orbit.residue_minpoly = h.monic();
      } else if (!x_insep && h.degree() == 1) {
        std::vector<FieldElem> p(2, k.zero());
        p[xe] = alpha;
        lp.model = localize_point(f.taylor_shift(p), ye, rf, fresh_name(k, f.vars(), "θ"));
        lp.orbit.residue_minpoly = rf.monic();
      } else {
        throw UnsupportedError("point with a doubly inseparable residue field: " + lp.orbit.description);
      }
      if (ord_at_origin(lp.model) < 2 || quasiregular_check(lp.model)) continue;
      out.push_back(std::move(lp));
    }
  }
  return out;
}

LocalizedPoint localize_orbit(const ProperTransform& t, const BPlusChart& chart, const ExceptionalOrbit& o,
                              const std::string& sigma_name, const std::string& u_name) {
  LocalizedPoint lp;
  lp.orbit.log_order = o.order;
  const Poly& fp = t.f_prime;
  const FieldTower& k = fp.field();
  const int w1 = chart.rc.w1, w2 = chart.rc.w2;
  switch (o.kind) {
    case ExceptionalOrbit::Kind::FirstAxis: {
      lp.orbit.locus = OrbitPoint::Locus::FirstAxis;
      lp.orbit.description = "{" + chart.vars[chart.s] + "=" + chart.vars[chart.x1] + "=0}";
      lp.orbit.stabilizer = w2;
      lp.model = LocalModel(slice(fp, chart.x2, k.one()));
      if (w2 > 1) lp.residual_weights = {mod(-1, w2), mod(w1, w2)};
      return lp;
    }
    case ExceptionalOrbit::Kind::SecondAxis: {
      lp.orbit.locus = OrbitPoint::Locus::SecondAxis;
      lp.orbit.description = "{" + chart.vars[chart.s] + "=" + chart.vars[chart.x2] + "=0}";
      lp.orbit.stabilizer = w1;
      lp.model = LocalModel(slice(fp, chart.x1, k.one()));
      if (w1 > 1) lp.residual_weights = {mod(-1, w1), mod(w2, w1)};
      return lp;
    }
    case ExceptionalOrbit::Kind::Generic:
      break;
  }
  // Invariant coordinates sigma = s*x1'^-d*x2'^c and u = x1'^w2/x2'^w1 on the
  // section (sigma, u) -> (sigma, u^c, u^d).
  long c = 0, d = 0;
  for (c = 0; c < std::max(w1, 1); ++c)
    if ((c * w2 - 1) % w1 == 0) break;
  d = (c * w2 - 1) / w1;
  std::vector<std::pair<Exponent, FieldElem>> terms;
  long min_u = 0;
  bool first = true;
  for (const auto& [e, coef] : fp.terms()) {
    const long u = e[chart.x1] * c + e[chart.x2] * d;
    min_u = first ? u : std::min(min_u, u);
    first = false;
    terms.push_back({Exponent{e[chart.s], static_cast<int>(u)}, coef});
  }
  const std::vector<std::string> vars{sigma_name, u_name};
  Poly inv(k, vars);
  for (auto& [e, coef] : terms) {
    e[1] -= static_cast<int>(min_u);  // a power of u is a unit near the orbit
    inv.add_term(e, coef);
  }
  lp.orbit.locus = OrbitPoint::Locus::Generic;
  lp.orbit.description = o.str(chart);
  lp.orbit.residue_minpoly = o.g.monic();
  lp.model = localize_point(inv, 1, o.g, fresh_name(k, vars, "θ"));
  return lp;
}

std::vector<LocalizedPoint> singular_orbits(const ProperTransform& t, const BPlusChart& chart,
                                            const std::string& sigma_name, const std::string& u_name) {
  auto orbits = exceptional_orbits(t, chart);
  std::stable_sort(orbits.begin(), orbits.end(), orbit_before);
  std::vector<LocalizedPoint> out;
  for (const auto& o : orbits) {
    if (o.order <= 1) continue;
    LocalizedPoint lp = localize_orbit(t, chart, o, sigma_name, u_name);
    if (ord_at_origin(lp.model) < 2 || quasiregular_check(lp.model)) continue;
    out.push_back(std::move(lp));
  }
  return out;
}

EquivariantCenter equivariant_center(const CharPolyResult& r, const Center& j, int order,
                                     const std::vector<int>& residual_weights) {
  EquivariantCenter ec;
  ec.center = j;
  if (order <= 1 || residual_weights.empty()) return ec;
  const auto& vars = r.model.f.vars();
  if (residual_weights.size() != vars.size()) throw FieldError("residual weight count mismatch");
  std::vector<int> w = residual_weights;
  const std::size_t y = r.model.y_index();
  for (const auto& s : r.model.log) {
    switch (s.kind) {
      case Substitution::Kind::Swap:
        std::swap(w[y], w[s.swap_with]);
        break;
      case Substitution::Kind::Shift: {
        long chi = 0;
        for (std::size_t i = 0; i < s.v.size(); ++i) chi += static_cast<long>(w[i]) * s.v[i];
        if (mod(chi, order) != mod(w[y], order) && ec.semi_invariant) {
          ec.semi_invariant = false;
          ec.offending = s.str(vars);
        }
        break;
      }
      case Substitution::Kind::Scale:
        break;
    }
  }
  ec.first_character = mod(w[j.first], order);
  ec.second_character = mod(w[j.second], order);
  return ec;
}

BlowupStep blowup_step(const CharPolyResult& r, const EquivariantCenter& ec, int residual_order,
                       const std::string& s_name) {
  BlowupStep b;
  const Poly& f = r.model.f;
  b.chart = rees_chart(f.vars(), ec.center, reduce_center(ec.center), s_name);
  b.transform = proper_transform(f, ec.center, b.chart);
  b.identities = check_identities(f, ec.center, b.chart, b.transform);
  AmbientChart& a = b.ambient;
  a.tower = f.field();
  a.vars = b.chart.vars;
  a.invertible.assign(a.vars.size(), false);
  a.torus.push_back({0, b.chart.weights});
  if (residual_order > 1) {
    TorusFactor mu{residual_order, std::vector<int>(a.vars.size(), 0)};
    mu.weights[b.chart.x1] = ec.first_character;
    mu.weights[b.chart.x2] = ec.second_character;
    a.torus.push_back(mu);
  }
  a.exceptional = {b.chart.s};
  a.transform = b.transform.f_prime;
  return b;
}

OrderCertificate verify_order_drop(const ResolutionNode& node) {
  if (node.verdict != ResolutionNode::Verdict::BlownUp || !node.invariant)
    throw FieldError("order-drop certificates exist only for blown-up nodes");
  return certify(exceptional_orbits(node.transform, node.chart), node.transform, node.chart, node.invariant->a1);
}

namespace {

class Resolver {
 public:
  Resolver(ResolutionTree& tree, const ResolveOptions& opts) : tree_(tree), opts_(opts) {}

  int process(const LocalModel& model, const OrbitPoint& orbit, const std::vector<int>& residual, int parent,
              int depth) {
    if (depth > opts_.max_depth) throw BudgetError("resolution depth exceeds " + std::to_string(opts_.max_depth));
    const int id = static_cast<int>(tree_.nodes.size());
    {
      ResolutionNode n;
      n.id = id;
      n.parent = parent;
      n.depth = depth;
      n.orbit = orbit;
      n.model = model;
      n.residual_weights = residual;
      tree_.nodes.push_back(std::move(n));
    }
    if (ord_at_origin(model) <= 1) {
      tree_.nodes[id].verdict = ResolutionNode::Verdict::Regular;
      return id;
    }
    if (quasiregular_check(model)) {
      tree_.nodes[id].verdict = ResolutionNode::Verdict::QuasiRegular;
      return id;
    }
    const CharPolyResult r = characterize(model, opts_.dissolve);
    const Invariant inv = invariant_of(r);
    const Center j = center_from_invariant(r);
    const EquivariantCenter ec = equivariant_center(r, j, orbit.stabilizer, residual);
    const std::string level = std::to_string(depth + 1);
    BlowupStep step = blowup_step(r, ec, orbit.stabilizer, "s" + level);
    if (!step.identities.all()) throw std::logic_error("blow-up identities failed for " + r.model.f.str());

    auto orbits = exceptional_orbits(step.transform, step.chart);
    std::stable_sort(orbits.begin(), orbits.end(), orbit_before);
    {
      ResolutionNode& n = tree_.nodes[id];
      n.verdict = ResolutionNode::Verdict::BlownUp;
      n.invariant = inv;
      for (const auto& s : r.model.log) n.coordinate_changes.push_back(s.str(r.model.f.vars()));
      n.center = j.str(r.model.f.vars());
      n.rc = step.chart.rc;
      n.equivariance = ec;
      n.chart = step.chart;
      n.transform = step.transform;
      n.ambient = step.ambient;
      n.identities = step.identities;
      n.certificate = certify(orbits, step.transform, step.chart, inv.a1);
    }
    tree_.max_depth = std::max(tree_.max_depth, depth + 1);

    for (const auto& o : orbits) {
      OrbitPoint regular;
      regular.locus = o.kind == ExceptionalOrbit::Kind::FirstAxis    ? OrbitPoint::Locus::FirstAxis
                      : o.kind == ExceptionalOrbit::Kind::SecondAxis ? OrbitPoint::Locus::SecondAxis
                                                                     : OrbitPoint::Locus::Generic;
      regular.description = o.str(step.chart);
      regular.log_order = o.order;
      if (o.order <= 1) {
        tree_.nodes[id].regular_orbits.push_back(regular);
        continue;
      }
      LocalizedPoint lp = localize_orbit(step.transform, step.chart, o, "σ" + level, "u" + level);
      if (ord_at_origin(lp.model) < 2 || quasiregular_check(lp.model)) {
        regular.stabilizer = lp.orbit.stabilizer;
        tree_.nodes[id].regular_orbits.push_back(regular);
        continue;
      }
      const int child = process(lp.model, lp.orbit, lp.residual_weights, id, depth + 1);
      tree_.nodes[id].children.push_back(child);
      const ResolutionNode& c = tree_.nodes[child];
      if (c.invariant && !(*c.invariant < inv))
        throw std::logic_error("invariant " + c.invariant->str() + " did not drop below " + inv.str());
    }
    return id;
  }

 private:
  ResolutionTree& tree_;
  const ResolveOptions& opts_;
};

}  // namespace

ResolutionTree resolve(const LocalModel& m, const ResolveOptions& opts) {
  if (m.f.is_zero()) throw FieldError("cannot resolve the zero polynomial");
  ResolutionTree tree;
  Resolver r(tree, opts);
  tree.roots.push_back(r.process(m, OrbitPoint{}, {}, -1, 0));
  return tree;
}

ResolutionTree resolve_curve(const Poly& f, const ResolveOptions& opts) {
  if (f.is_zero()) throw FieldError("cannot resolve the zero polynomial");
  ResolutionTree tree;
  Resolver r(tree, opts);
  for (const auto& p : singular_points(f)) tree.roots.push_back(r.process(p.model, p.orbit, {}, -1, 0));
  return tree;
}

bool ResolutionTree::quasiregular_input() const {
  return !roots.empty() && std::all_of(roots.begin(), roots.end(), [&](int id) {
    return nodes[static_cast<std::size_t>(id)].verdict == ResolutionNode::Verdict::QuasiRegular;
  });
}

bool ResolutionTree::certified() const {
  for (const auto& n : nodes) {
    if (n.verdict != ResolutionNode::Verdict::BlownUp) continue;
    if (!n.certificate.holds || !n.identities.all() || !n.ambient.semi_invariant()) return false;
    for (int c : n.children) {
      const auto& child = nodes[static_cast<std::size_t>(c)];
      if (child.invariant && !(*child.invariant < *n.invariant)) return false;
    }
  }
  return true;
}

nlohmann::json ResolutionTree::to_json() const {
  using nlohmann::json;
  json out;
  out["schema"] = "wbu.tree/1";
  out["roots"] = roots;
  out["max_depth"] = max_depth;
  out["certified"] = certified();
  out["quasiregular_input"] = quasiregular_input();
  json arr = json::array();
  for (const auto& n : nodes) {
    json j;
    j["id"] = n.id;
    j["parent"] = n.parent;
    j["depth"] = n.depth;
    j["orbit"] = {{"locus", locus_name(n.orbit.locus)},
                  {"description", n.orbit.description},
                  {"stabilizer", n.orbit.stabilizer},
                  {"log_order", n.orbit.log_order}};
    if (n.orbit.residue_minpoly) j["orbit"]["residue_minpoly"] = n.orbit.residue_minpoly->str("T");
    j["field"] = n.model.tower().descriptor();
    j["variables"] = n.model.f.vars();
    j["local_model"] = n.model.f.str();
    j["verdict"] = verdict_name(n.verdict);
    j["children"] = n.children;
    if (n.verdict == ResolutionNode::Verdict::BlownUp) {
      j["invariant"] = {n.invariant->a1, n.invariant->a2.get_str()};
      j["coordinate_changes"] = n.coordinate_changes;
      j["center"] = n.center;
      j["reduced_center"] = {{"w1", n.rc.w1}, {"w2", n.rc.w2}, {"ell", n.rc.ell}};
      json torus = json::array();
      for (const auto& t : n.ambient.torus) torus.push_back({{"order", t.order}, {"weights", t.weights}});
      const StabilizerReport st = stabilizers(n.chart);
      j["chart"] = {{"variables", n.chart.vars},
                    {"torus", torus},
                    {"exceptional", json::array({n.chart.vars[n.chart.s]})},
                    {"excluded", "{" + n.chart.vars[n.chart.x1] + "=" + n.chart.vars[n.chart.x2] + "=0}"},
                    {"transform", n.transform.f_prime.str()},
                    {"leading", n.transform.leading.str()},
                    {"stabilizers",
                     {{"first_axis", st.first_axis}, {"second_axis", st.second_axis}, {"generic", st.generic}}}};
      j["identities"] = {{"rees", n.identities.rees}, {"s_one", n.identities.s_one}, {"s_zero", n.identities.s_zero}};
      j["equivariance"] = {{"semi_invariant", n.equivariance.semi_invariant && n.ambient.semi_invariant()},
                           {"offending", n.equivariance.offending}};
      json pts = json::array();
      for (const auto& p : n.certificate.points)
        pts.push_back({{"orbit", p.orbit}, {"residue_field", p.residue_field}, {"point", p.coordinates},
                       {"order", p.order}});
      j["certificate"] = {{"bound", n.certificate.bound},
                          {"holds", n.certificate.holds},
                          {"degree_accounting", n.certificate.degree_accounting},
                          {"points", pts}};
      json reg = json::array();
      for (const auto& o : n.regular_orbits) reg.push_back(o.str());
      j["regular_orbits"] = reg;
    }
    arr.push_back(std::move(j));
  }
  out["nodes"] = std::move(arr);
  return out;
}

std::string ResolutionTree::to_dot() const {
  auto esc = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '"') o += '\\';
      o += c;
    }
    return o;
  };
  std::ostringstream os;
  os << "digraph resolution {\n  node [shape=box];\n";
  for (const auto& n : nodes) {
    std::string label = std::to_string(n.id) + ": " + verdict_name(n.verdict);
    if (n.invariant) {
      label += "\\ninvariant " + n.invariant->str();
      label += "\\nw=(" + std::to_string(n.rc.w1) + "," + std::to_string(n.rc.w2) + ") ell=" + std::to_string(n.rc.ell);
    }
    if (n.orbit.stabilizer > 1) label += "\\nμ" + std::to_string(n.orbit.stabilizer);
    os << "  n" << n.id << " [label=\"" << esc(label) << "\"];\n";
  }
  for (const auto& n : nodes)
    if (n.parent >= 0)
      os << "  n" << n.parent << " -> n" << n.id << " [label=\"" << esc(n.orbit.description) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace wbu

