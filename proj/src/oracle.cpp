#include "wbu/oracle.hpp"

#include <algorithm>

namespace wbu {

namespace {

void push_unique(std::vector<FieldElem>& v, const FieldElem& e) {
  if (std::find(v.begin(), v.end(), e) == v.end()) v.push_back(e);
}

// Lex-max (b1, b2) for the given coordinates: b1 = ord, b2 from the support.
std::optional<std::pair<int, mpq_class>> support_center(const Poly& g) {
  const int nu = g.order();
  std::optional<mpq_class> b2;
  for (const auto& [e, c] : g.terms()) {
    const int i = e[0], j = e[1];
    if (j >= nu) continue;
    mpq_class cand(i * nu, nu - j);
    cand.canonicalize();
    if (!b2 || cand < *b2) b2 = cand;
  }
  if (!b2) return std::nullopt;
  return std::make_pair(nu, *b2);
}

Poly swap_xy(const Poly& f) {
  return f.substitute({Poly::variable(f.field(), f.vars(), 1), Poly::variable(f.field(), f.vars(), 0)});
}

// Center parameters (z, x) of the final coordinates, written in the original ones.
std::pair<Poly, Poly> center_parameters(const CharPolyResult& r, const FieldTower& k,
                                        const std::vector<std::string>& vars) {
  const std::size_t y = vars.size() - 1;
  std::vector<Poly> coords;
  for (std::size_t i = 0; i < vars.size(); ++i) coords.push_back(Poly::variable(k, vars, i));
  for (const auto& s : r.model.log) {
    switch (s.kind) {
      case Substitution::Kind::Swap:
        std::swap(coords[y], coords[s.swap_with]);
        break;
      case Substitution::Kind::Shift: {
        Poly mono = Poly::constant(k, vars, k.embed(s.eps));
        for (std::size_t i = 0; i < s.v.size(); ++i)
          if (s.v[i]) mono = mono * coords[i].pow(static_cast<std::uint64_t>(s.v[i]));
        coords[y] -= mono;
        break;
      }
      case Substitution::Kind::Scale:
        break;
    }
  }
  return {coords[y], coords[0]};
}

// Monomial valuation of (y^a1, x1^a2); the remaining variables weigh zero.
mpq_class center_value(const Poly& g, const Invariant& inv) {
  const std::size_t y = g.arity() - 1;
  std::optional<mpq_class> best;
  for (const auto& [e, c] : g.terms()) {
    mpq_class v = mpq_class(e[y], inv.a1) + e[0] / inv.a2;
    v.canonicalize();
    if (!best || v < *best) best = v;
  }
  if (!best) throw FieldError("valuation of zero");
  return *best;
}

struct Computed {
  bool quasiregular = false;
  CharPolyResult result;
  Invariant inv;
  std::string str() const { return quasiregular ? "quasi-regular" : inv.str(); }
};

Computed compute(const LocalModel& m) {
  Computed c;
  if (quasiregular_check(m)) {
    c.quasiregular = true;
    return c;
  }
  c.result = characterize(m);
  c.inv = invariant_of(c.result);
  return c;
}

// Same monomial valuation: each side's parameters have the expected values
// in the other side's coordinates.
bool same_center(const Computed& a, const Computed& b, const FieldTower& ext, const std::vector<std::string>& vars) {
  auto check = [&](const Computed& from, const Computed& in) {
    const auto [z, x] = center_parameters(from.result, ext, vars);
    const Poly zi = in.result.model.replay(z.embed(ext));
    const Poly xi = in.result.model.replay(x.embed(ext));
    return center_value(zi, in.inv) == mpq_class(1, in.inv.a1) && center_value(xi, in.inv) == 1 / in.inv.a2;
  };
  return check(a, b) && check(b, a);
}

}  // namespace

std::vector<FieldElem> default_probes(const FieldTower& k) {
  std::vector<FieldElem> out;
  switch (k.kind()) {
    case FieldTower::Kind::Rational:
      for (const mpq_class& q : {mpq_class(0), mpq_class(1), mpq_class(-1), mpq_class(2), mpq_class(-2),
                                 mpq_class(1, 2), mpq_class(-1, 2)})
        push_unique(out, k.from_rational(q));
      return out;
    case FieldTower::Kind::Prime: {
      const auto p = static_cast<long>(k.characteristic());
      if (p <= 5) {
        for (long i = 0; i < p; ++i) out.push_back(k.from_int(i));
      } else {
        for (long i : {0L, 1L, -1L, 2L, -2L}) push_unique(out, k.from_int(i));
      }
      return out;
    }
    case FieldTower::Kind::Transcendental: {
      const FieldElem t = k.generator();
      for (const FieldElem& e : {k.zero(), k.one(), t, t + k.one(), t * t}) push_unique(out, e);
      return out;
    }
    case FieldTower::Kind::Algebraic: {
      for (const auto& e : default_probes(k.parent())) push_unique(out, k.embed(e));
      const FieldElem th = k.generator();
      push_unique(out, th);
      push_unique(out, th + k.one());
      return out;
    }
  }
  return out;
}

SearchBudget default_budget(const FieldTower& k, int max_vertex) {
  return {max_vertex, default_probes(k)};
}

MaxCenter bruteforce_max_center(const LocalModel& m, const SearchBudget& budget) {
  const Poly& f = m.f;
  if (f.arity() != 2) throw UnsupportedError("the exhaustive center search is for plane local models");
  if (budget.max_vertex < 0 || budget.probes.empty()) throw FieldError("empty search budget");
  if (quasiregular_check(m)) throw QuasiRegularError("no center: the model is quasi-regular");
  const FieldTower& k = f.field();
  const auto v = static_cast<std::size_t>(budget.max_vertex);
  const std::size_t n = budget.probes.size();
  MaxCenter best;
  bool have = false;
  Poly best_poly;
  for (const bool swapped : {false, true}) {
    const Poly g0 = swapped ? swap_xy(f) : f;
    std::vector<std::size_t> idx(v, 0);
    for (;;) {
      Poly s(k, f.vars());
      std::vector<FieldElem> shift;
      for (std::size_t d = 0; d < v; ++d) {
        const FieldElem& c = budget.probes[idx[d]];
        shift.push_back(k.embed(c));
        if (!c.is_zero()) s.add_term(Exponent{static_cast<int>(d + 1), 0}, k.embed(c));
      }
      const Poly g = s.is_zero() ? g0 : g0.substitute_var(1, Poly::variable(k, f.vars(), 1) + s);
      ++best.candidates;
      if (auto bc = support_center(g)) {
        const bool better =
            !have || bc->first > best.b1 || (bc->first == best.b1 && bc->second > best.b2);
        if (better) {
          have = true;
          best.b1 = bc->first;
          best.b2 = bc->second;
          best.swapped = swapped;
          best.shift = shift;
          best.witness = (swapped ? "x <-> y; " : "") + std::string("y -> y+") + (s.is_zero() ? "0" : s.str());
          best_poly = g;
        }
      }
      std::size_t d = 0;
      while (d < v && ++idx[d] == n) idx[d++] = 0;
      if (d == v) break;
    }
  }
  if (!have) throw FieldError("no finite center found for " + f.str());

  // Certified when no solvable vertex is left at the winner.
  best.certified = true;
  const mpq_class delta = best.b2 / best.b1;
  const Poly top = best_poly.select([&](const Exponent& e) { return e[0] == 0 && e[1] == best.b1; });
  if (delta.get_den() == 1 && !top.is_zero()) {
    LocalModel w(best_poly);
    const Point vertex{delta};
    if (vertex_solvable(initial_at_vertex(w, vertex), best.b1)) {
      best.certified = false;
      best.note = "solvable vertex " + point_str(vertex) + " remains; the budget or probe set is too small";
    }
  }
  return best;
}

int independent_order(const Poly& g, const std::vector<FieldElem>& point) {
  if (point.size() != g.arity()) throw FieldError("point arity mismatch");
  if (g.is_zero()) throw FieldError("order of the zero polynomial");
  const FieldTower& k = point.empty() ? g.field() : point.front().tower();
  std::map<Exponent, FieldElem> acc;
  for (const auto& [e, c] : g.terms()) {
    std::map<Exponent, FieldElem> cur{{Exponent(g.arity(), 0), k.embed(c)}};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      std::map<Exponent, FieldElem> next;
      for (const auto& [ce, cc] : cur) {
        for (int j = 0; j <= e[i]; ++j) {
          mpz_class bin;
          mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(e[i]), static_cast<unsigned long>(j));
          const FieldElem w = cc * k.from_rational(mpq_class(bin)) * k.embed(point[i]).pow(std::int64_t{e[i] - j});
          if (w.is_zero()) continue;
          Exponent ne = ce;
          ne[i] = j;
          auto it = next.find(ne);
          if (it == next.end())
            next.emplace(ne, w);
          else
            it->second += w;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [ce, cc] : cur) {
      auto it = acc.find(ce);
      if (it == acc.end())
        acc.emplace(ce, cc);
      else
        it->second += cc;
    }
  }
  std::optional<int> best;
  for (const auto& [e, c] : acc) {
    if (c.is_zero()) continue;
    int deg = 0;
    for (int x : e) deg += x;
    if (!best || deg < *best) best = deg;
  }
  if (!best) throw FieldError("polynomial vanishes identically after the shift");
  return *best;
}

std::string BaseChangeReport::verdict_str() const {
  switch (verdict) {
    case Verdict::Stable:
      return "stable";
    case Verdict::ExpectedChange:
      return "expected-change";
    case Verdict::Violation:
      return "violation";
  }
  return {};
}

BaseChangeReport basechange_report(const LocalModel& m, const UPoly& ext, const std::string& name) {
  BaseChangeReport r;
  const UPoly g = ext.monic();
  r.separable = !g.derivative().is_zero() && gcd(g, g.derivative()).degree() == 0;
  const FieldTower big = m.tower().extend(name, g);
  r.extension = big.descriptor();
  const LocalModel mb(m.f.embed(big));
  const Computed before = compute(m);
  const Computed after = compute(mb);
  r.before = before.str();
  r.after = after.str();
  r.invariant_equal = r.before == r.after;
  if (r.invariant_equal && !before.quasiregular && m.f.arity() > 2)
    r.center_equal = before.result.polyhedron.vertices == after.result.polyhedron.vertices;
  else if (r.invariant_equal && !before.quasiregular)
    r.center_equal = same_center(before, after, big, m.f.vars());
  else
    r.center_equal = r.invariant_equal;
  if (r.invariant_equal && r.center_equal)
    r.verdict = BaseChangeReport::Verdict::Stable;
  else if (!r.separable)
    r.verdict = BaseChangeReport::Verdict::ExpectedChange;
  else
    r.verdict = BaseChangeReport::Verdict::Violation;
  return r;
}

BaseChangeReport separable_basechange_check(const LocalModel& m, const UPoly& ext, const std::string& name) {
  const UPoly g = ext.monic();
  if (g.derivative().is_zero() || gcd(g, g.derivative()).degree() > 0)
    throw FieldError("inseparable extension " + g.str(name));
  return basechange_report(m, ext, name);
}

LocalModel random_instance(const FieldTower& k, std::mt19937_64& rng, const InstanceOptions& opts) {
  const std::vector<std::string> vars{"x", "y"};
  const auto probes = default_probes(k);
  auto pick = [&](std::size_t n) { return static_cast<int>(rng() % n); };
  auto nonzero = [&] {
    for (;;) {
      const FieldElem& c = probes[static_cast<std::size_t>(pick(probes.size()))];
      if (!c.is_zero()) return c;
    }
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int nu = 2 + pick(static_cast<std::size_t>(std::max(opts.max_nu - 1, 1)));
    const int sdeg = opts.max_shift_degree;
    Poly g = Poly::monomial(k, vars, {0, nu}, k.one());
    // A pure x-power keeps the curve away from the quasi-regular case.
    const int lo = nu + 1, hi = std::max(lo, opts.max_degree);
    g.add_term({lo + pick(static_cast<std::size_t>(hi - lo + 1)), 0}, nonzero());
    for (int t = 0; t < opts.extra_terms; ++t) {
      const int j = pick(static_cast<std::size_t>(nu));
      const int room = opts.max_degree - j * sdeg;
      const int imin = std::max(nu - j, 1);
      if (room < imin) continue;
      const int i = imin + pick(static_cast<std::size_t>(room - imin + 1));
      g.add_term({i, j}, nonzero());
    }
    Poly s(k, vars);
    for (int d = 1; d <= sdeg; ++d) {
      const FieldElem& c = probes[static_cast<std::size_t>(pick(probes.size()))];
      if (!c.is_zero()) s.add_term({d, 0}, c);
    }
    Poly f = g.substitute_var(1, Poly::variable(k, vars, 1) - s);
    LocalModel m(f);
    if (f.is_zero() || f.order() < 2 || quasiregular_check(m)) continue;
    return m;
  }
  throw FieldError("could not draw a singular instance over " + k.descriptor());
}

nlohmann::json agreement_record(const LocalModel& m, const SearchBudget& budget) {
  nlohmann::json j;
  j["field"] = m.tower().descriptor();
  j["f"] = m.f.str();
  const Invariant inv = invariant(m);
  const MaxCenter mc = bruteforce_max_center(m, budget);
  j["engine"] = inv.str();
  j["bruteforce"] = Invariant{mc.b1, mc.b2}.str();
  j["witness"] = mc.witness;
  j["certified"] = mc.certified;
  j["candidates"] = mc.candidates;
  if (!mc.note.empty()) j["note"] = mc.note;
  j["agree"] = inv.a1 == mc.b1 && inv.a2 == mc.b2;
  return j;
}

}  // namespace wbu
