#include "wbu/charpoly.hpp"

#include <algorithm>

namespace wbu {

namespace {

mpq_class cross(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool dominates(const Point& big, const Point& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

mpq_class frac(int num, int den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool integral(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

Exponent unit_exponent(std::size_t n, std::size_t i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}

LocalModel swap_y(const LocalModel& m, std::size_t i) {
  LocalModel out = m;
  Substitution s;
  s.kind = Substitution::Kind::Swap;
  s.swap_with = i;
  const std::size_t y = m.y_index();
  std::vector<Poly> im;
  for (std::size_t j = 0; j < m.f.arity(); ++j) {
    const std::size_t src = j == y ? i : (j == i ? y : j);
    im.push_back(Poly::variable(m.tower(), m.f.vars(), src));
  }
  out.f = m.f.substitute(im);
  out.log.push_back(s);
  return out;
}

LocalModel scale(const LocalModel& m, const FieldElem& c) {
  if (c.is_one()) return m;
  LocalModel out = m;
  out.f = m.f * c.inv();
  Substitution s;
  s.kind = Substitution::Kind::Scale;
  s.eps = c;
  out.log.push_back(s);
  return out;
}

Exponent pure_power(std::size_t n, std::size_t i, int nu) {
  Exponent e(n, 0);
  e[i] = nu;
  return e;
}

int x_degree(const Poly& f) {
  int d = 0;
  for (const auto& [e, c] : f.terms()) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

bool is_prepared(const LocalModel& m) {
  const int nu = ord_at_origin(m);
  Poly in = initial_form_m(m);
  return in.num_terms() == 1 && in.terms().begin()->first == pure_power(m.f.arity(), m.y_index(), nu);
}

}  // namespace

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

mpq_class ProjPolyhedron::delta() const {
  if (vertices.empty()) throw FieldError("delta of an empty polyhedron");
  std::optional<mpq_class> best;
  for (const auto& v : vertices) {
    mpq_class s = 0;
    for (const auto& c : v) s += c;
    if (!best || s < *best) best = s;
  }
  return *best;
}

bool ProjPolyhedron::contains(const Point& p) const {
  if (vertices.empty()) return false;
  if (dim == 1) return p[0] >= vertices.front()[0];
  if (dim != 2) throw UnsupportedError("polyhedron membership in dimension > 2");
  if (p[0] < vertices.front()[0] || p[1] < vertices.back()[1]) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (cross(vertices[i], vertices[i + 1], p) < 0) return false;
  return true;
}

bool ProjPolyhedron::contains(const ProjPolyhedron& other) const {
  return std::all_of(other.vertices.begin(), other.vertices.end(),
                     [this](const Point& v) { return contains(v); });
}

ProjPolyhedron polyhedron_from_generators(std::size_t dim, std::vector<Point> gens) {
  ProjPolyhedron out;
  out.dim = dim;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  out.generators = gens;
  if (gens.empty()) return out;
  if (dim == 1) {
    out.vertices.push_back(gens.front());
    return out;
  }
  if (dim != 2) throw UnsupportedError("vertex computation in dimension > 2");
  std::vector<Point> minimal;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens)
      if (h != g && dominates(g, h)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }
  // sorted by first coordinate, so the second strictly decreases
  std::vector<Point> hull;
  for (const auto& c : minimal) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), c) <= 0) hull.pop_back();
    hull.push_back(c);
  }
  out.vertices = hull;
  return out;
}

ContactResult maximal_contact_prep(const LocalModel& m) {
  const int nu = ord_at_origin(m);
  const std::size_t n = m.f.arity();
  const std::size_t y = m.y_index();
  const Poly in = initial_form_m(m);
  ContactResult zero{true, m};

  std::optional<std::size_t> z;
  if (!in.coeff(pure_power(n, y, nu)).is_zero()) {
    z = y;
  } else {
    for (std::size_t i = 0; i < y; ++i)
      if (!in.coeff(pure_power(n, i, nu)).is_zero()) {
        z = i;
        break;
      }
  }
  if (!z) return zero;
  if (*z != y) {
    ContactResult r = maximal_contact_prep(swap_y(m, *z));
    if (r.directrix_zero) return zero;
    return r;
  }

  const std::uint64_t p = m.tower().characteristic();
  int q = 1;
  while (p != 0 && nu % (q * static_cast<int>(p)) == 0) q *= static_cast<int>(p);
  const int nu1 = nu / q;
  const Poly normalized = in * in.coeff(pure_power(n, y, nu)).inv();
  for (const auto& [e, c] : normalized.terms())
    for (int x : e)
      if (x % q) return zero;
  const Poly h = normalized.deflate(static_cast<std::uint64_t>(q));
  const FieldElem nu1_inv = m.tower().from_int(nu1).inv();
  Poly lin = Poly::variable(m.tower(), m.f.vars(), y);
  std::vector<FieldElem> coef(y, m.tower().zero());
  for (std::size_t i = 0; i < y; ++i) {
    Exponent e(n, 0);
    e[y] = nu1 - 1;
    e[i] = 1;
    coef[i] = h.coeff(e) * nu1_inv;
    lin.add_term(unit_exponent(n, i), coef[i]);
  }
  if (lin.pow(static_cast<std::uint64_t>(nu1)) != h) return zero;

  LocalModel out = m;
  for (std::size_t i = 0; i < y; ++i) {
    if (coef[i].is_zero()) continue;
    auto d = nth_root(coef[i], static_cast<std::uint64_t>(q));
    if (!d) return zero;
    out = shift_substitute(out, unit_exponent(n, i), -*d);
  }
  out = scale(out, out.f.coeff(pure_power(n, y, nu)));
  if (!is_prepared(out)) throw FieldError("internal: maximal contact preparation failed");
  return {false, out};
}

ProjPolyhedron build_polyhedron(const LocalModel& m) {
  const int nu = ord_at_origin(m);
  const std::size_t y = m.y_index();
  if (m.f.coeff(pure_power(m.f.arity(), y, nu)).is_zero())
    throw FieldError("polyhedron needs a y^nu term");
  std::vector<Point> gens;
  for (const auto& [e, c] : m.f.terms()) {
    if (e[y] >= nu) continue;
    Point pt;
    for (std::size_t i = 0; i < y; ++i) pt.push_back(frac(e[i], nu - e[y]));
    gens.push_back(pt);
  }
  return polyhedron_from_generators(m.e(), std::move(gens));
}

VertexData initial_at_vertex(const LocalModel& m, const Point& v) {
  const ProjPolyhedron poly = build_polyhedron(m);
  if (std::find(poly.vertices.begin(), poly.vertices.end(), v) == poly.vertices.end())
    throw FieldError(point_str(v) + " is not a vertex");
  const int nu = ord_at_origin(m);
  const std::size_t y = m.y_index();
  const Exponent top = pure_power(m.f.arity(), y, nu);
  Poly in = m.f.select([&](const Exponent& e) {
    if (e == top) return true;
    if (e[y] >= nu) return false;
    for (std::size_t i = 0; i < y; ++i)
      if (frac(e[i], nu - e[y]) != v[i]) return false;
    return true;
  });
  return {v, in, std::nullopt};
}

std::optional<FieldElem> vertex_solvable(const VertexData& vd, int nu) {
  if (!integral(vd.vertex)) return std::nullopt;
  const Poly& in = vd.initial_form;
  const std::size_t n = in.arity();
  const std::size_t y = n - 1;
  const FieldTower& k = in.field();
  const FieldElem top = in.coeff(pure_power(n, y, nu));
  if (top.is_zero()) return std::nullopt;
  const Poly normalized = in * top.inv();
  const std::uint64_t p = k.characteristic();
  int q = 1;
  while (p != 0 && nu % (q * static_cast<int>(p)) == 0) q *= static_cast<int>(p);
  const int nu1 = nu / q;
  Exponent probe(n, 0);
  Exponent xv(n, 0);
  for (std::size_t i = 0; i < y; ++i) {
    xv[i] = static_cast<int>(vd.vertex[i].get_num().get_si());
    probe[i] = q * xv[i];
  }
  probe[y] = nu - q;
  const FieldElem c = normalized.coeff(probe);
  if (c.is_zero()) return std::nullopt;
  auto lambda = nth_root(-c / k.from_int(nu1), static_cast<std::uint64_t>(q));
  if (!lambda) return std::nullopt;
  Poly lin = Poly::variable(k, in.vars(), y) - Poly::monomial(k, in.vars(), xv, *lambda);
  if (lin.pow(static_cast<std::uint64_t>(nu)) != normalized) return std::nullopt;
  return lambda;
}

bool quasiregular_check(const LocalModel& m) { return radical(m.f).order() <= 1; }

CharPolyResult dissolve(const LocalModel& prepared, const DissolveOptions& opts) {
  if (!is_prepared(prepared)) throw FieldError("dissolve needs in_m(f) = y^nu");
  CharPolyResult r;
  r.nu = ord_at_origin(prepared);
  const std::size_t budget =
      opts.budget ? *opts.budget : static_cast<std::size_t>(4 * std::max(1, x_degree(prepared.f)) * r.nu);
  LocalModel cur = prepared;
  for (;;) {
    ProjPolyhedron poly = build_polyhedron(cur);
    if (poly.empty()) {
      r.model = cur;
      r.polyhedron = poly;
      r.quasiregular = true;
      return r;
    }
    std::optional<FieldElem> lambda;
    Point target;
    for (const auto& v : poly.vertices) {
      if (!integral(v)) continue;
      lambda = vertex_solvable(initial_at_vertex(cur, v), r.nu);
      if (lambda) {
        target = v;
        break;
      }
    }
    if (!lambda) {
      r.model = cur;
      r.polyhedron = poly;
      r.delta = poly.delta();
      r.f_delta = delta_initial_lift(cur, r);
      return r;
    }
    if (r.solved.size() >= budget)
      throw BudgetError("dissolution budget of " + std::to_string(budget) + " steps exceeded");
    Exponent v(cur.f.arity(), 0);
    for (std::size_t i = 0; i < target.size(); ++i) v[i] = static_cast<int>(target[i].get_num().get_si());
    LocalModel next = shift_substitute(cur, v, *lambda);
    if (ord_at_origin(next) != r.nu) throw FieldError("internal: dissolution changed the order");
    ProjPolyhedron after = build_polyhedron(next);
    if (after.contains(target) || !poly.contains(after))
      throw FieldError("internal: dissolution did not shrink the polyhedron");
    r.history.push_back(poly);
    r.solved.push_back(target);
    cur = std::move(next);
  }
}

CharPolyResult characterize(const LocalModel& m, const DissolveOptions& opts) {
  if (opts.guard && quasiregular_check(m)) {
    CharPolyResult r;
    r.model = m;
    r.nu = ord_at_origin(m);
    r.quasiregular = true;
    return r;
  }
  ContactResult c = maximal_contact_prep(m);
  if (c.directrix_zero) {
    CharPolyResult r;
    r.model = m;
    r.nu = ord_at_origin(m);
    r.directrix_zero = true;
    r.delta = mpq_class(1);
    r.f_delta = initial_form_m(m);
    return r;
  }
  return dissolve(c.model, opts);
}

Poly delta_initial_lift(const LocalModel& m, const CharPolyResult& result) {
  if (!result.delta) throw FieldError("delta-initial form needs a finite delta");
  if (result.directrix_zero) return initial_form_m(m);
  const mpq_class delta = *result.delta;
  const int nu = result.nu;
  const std::size_t y = m.y_index();
  return m.f.select([&](const Exponent& e) {
    if (e[y] > nu) return false;
    int ax = 0;
    for (std::size_t i = 0; i < y; ++i) ax += e[i];
    return mpq_class(ax) == delta * (nu - e[y]);
  });
}

std::string Invariant::str() const { return "(" + std::to_string(a1) + "," + a2.get_str() + ")"; }

bool operator==(const Invariant& a, const Invariant& b) { return a.a1 == b.a1 && a.a2 == b.a2; }

bool operator<(const Invariant& a, const Invariant& b) {
  if (a.a1 != b.a1) return a.a1 < b.a1;
  return a.a2 < b.a2;
}

Invariant invariant_of(const CharPolyResult& r) {
  if (r.quasiregular || !r.delta) throw QuasiRegularError("invariant of a quasi-regular point");
  mpq_class a2 = *r.delta * r.nu;
  a2.canonicalize();
  return {r.nu, a2};
}

Invariant invariant(const LocalModel& m) { return invariant_of(characterize(m)); }

}  // namespace wbu
