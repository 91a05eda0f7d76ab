#include "wbu/wblowup.hpp"

#include <algorithm>
#include <numeric>

namespace wbu {

namespace {

std::string exponent_str(const mpq_class& a) {
  if (a.get_den() == 1) return a.get_str();
  return "(" + a.get_str() + ")";
}

std::vector<int> source_weights(std::size_t arity, const Center& j, const ReducedCenter& rc) {
  std::vector<int> w(arity, 0);
  w[j.first] = rc.w1;
  w[j.second] = rc.w2;
  return w;
}

std::string fresh_name(const FieldTower& k, int& counter) {
  const auto taken = k.generator_names();
  for (;;) {
    std::string name = "α" + std::to_string(++counter);
    if (std::find(taken.begin(), taken.end(), name) == taken.end()) return name;
  }
}

// c with c*w2 = 1 (mod w1), and d = (c*w2 - 1) / w1.
std::pair<long, long> bezout(int w1, int w2) {
  for (long c = 0; c < std::max(w1, 1); ++c) {
    const long r = c * w2 - 1;
    if (r % w1 == 0) return {c, r / w1};
  }
  throw FieldError("weights are not coprime");
}

}  // namespace

std::string Center::str(const std::vector<std::string>& vars) const {
  return "(" + vars.at(first) + "^" + exponent_str(a1) + ", " + vars.at(second) + "^" +
         exponent_str(a2) + ")";
}

Center center_from_invariant(const CharPolyResult& r) {
  if (r.model.e() != 1) throw UnsupportedError("weighted centers are built for plane local models");
  if (r.quasiregular || !r.delta) throw QuasiRegularError("no center: the model is quasi-regular");
  Center j;
  j.first = r.model.y_index();
  j.second = 0;
  j.a1 = r.nu;
  j.a2 = *r.delta * r.nu;
  j.a2.canonicalize();
  return j;
}

bool admissible(const Center& j, const Poly& f) {
  if (f.is_zero()) return true;
  return v_J(f, j.valuation()) >= 1;
}

ReducedCenter reduce_center(const mpq_class& a1, const mpq_class& a2) {
  if (sgn(a1) <= 0 || sgn(a2) <= 0) throw FieldError("center exponents must be positive");
  const mpz_class n1 = a1.get_num(), n2 = a2.get_num();
  mpz_class ell;
  mpz_lcm(ell.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
  const mpz_class w1 = ell * a1.get_den() / n1;
  const mpz_class w2 = ell * a2.get_den() / n2;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), w1.get_mpz_t(), w2.get_mpz_t());
  if (g != 1) throw FieldError("no integral reduced center");
  if (!ell.fits_sint_p() || !w1.fits_sint_p() || !w2.fits_sint_p())
    throw UnsupportedError("reduced center weights too large");
  return {static_cast<int>(w1.get_si()), static_cast<int>(w2.get_si()), static_cast<int>(ell.get_si())};
}

std::pair<Poly, Poly> split_leading(const Poly& f, const Center& j) {
  const MonomialValuation v = j.valuation();
  for (const auto& [e, c] : f.terms())
    if (v_J(e, v) < 1) throw FieldError("center is not admissible for " + f.str());
  Poly lead = f.select([&](const Exponent& e) { return v_J(e, v) == 1; });
  return {lead, f - lead};
}

BPlusChart rees_chart(const std::vector<std::string>& source_vars, const Center& j,
                      const ReducedCenter& rc, const std::string& s_name,
                      std::vector<std::string> new_names) {
  if (j.first >= source_vars.size() || j.second >= source_vars.size() || j.first == j.second)
    throw FieldError("center variables out of range");
  if (new_names.empty())
    for (const auto& v : source_vars) new_names.push_back(v + "'");
  if (new_names.size() != source_vars.size()) throw FieldError("chart name count mismatch");
  BPlusChart chart;
  chart.vars.push_back(s_name);
  chart.vars.insert(chart.vars.end(), new_names.begin(), new_names.end());
  chart.s = 0;
  chart.x1 = j.first + 1;
  chart.x2 = j.second + 1;
  chart.weights.assign(chart.vars.size(), 0);
  chart.weights[chart.s] = -1;
  chart.weights[chart.x1] = rc.w1;
  chart.weights[chart.x2] = rc.w2;
  chart.rc = rc;
  return chart;
}

ProperTransform proper_transform(const Poly& f, const Center& j, const BPlusChart& chart) {
  if (!admissible(j, f)) throw FieldError("center is not admissible for " + f.str());
  const std::vector<std::string> names(chart.vars.begin() + 1, chart.vars.end());
  Poly pulled = weighted_substitute(f, source_weights(f.arity(), j, chart.rc), chart.vars[chart.s], names);
  const int ell = chart.rc.ell;
  if (!pulled.is_zero() && pulled.order_in(chart.s) < ell)
    throw FieldError("total transform is not divisible by s^" + std::to_string(ell));
  Exponent sl(chart.vars.size(), 0);
  sl[chart.s] = ell;
  ProperTransform t;
  t.ell = ell;
  t.f_prime = pulled.divide_monomial(sl);
  t.leading = t.f_prime.select([&](const Exponent& e) { return e[chart.s] == 0; });
  Exponent s1(chart.vars.size(), 0);
  s1[chart.s] = 1;
  t.rest = (t.f_prime - t.leading).divide_monomial(s1);
  return t;
}

StabilizerReport stabilizers(const BPlusChart& chart) {
  return {chart.rc.w2, chart.rc.w1, std::gcd(chart.rc.w1, chart.rc.w2)};
}

int log_order(const ProperTransform& t, const BPlusChart& chart, const std::vector<FieldElem>& point) {
  if (point.size() != chart.vars.size()) throw FieldError("point arity mismatch");
  if (point[chart.x1].is_zero() && point[chart.x2].is_zero())
    throw FieldError("the locus x1' = x2' = 0 is not part of the chart quotient");
  const Poly& g = point[chart.s].is_zero() ? t.leading : t.f_prime;
  Poly shifted = g.taylor_shift(point);
  return shifted.order();
}

Dehomogenized dehomogenize(const Poly& leading, const BPlusChart& chart) {
  if (leading.is_zero()) throw FieldError("zero leading form");
  Dehomogenized d;
  d.first_exp = leading.order_in(chart.x1);
  d.second_exp = leading.order_in(chart.x2);
  const int w1 = chart.rc.w1, w2 = chart.rc.w2;
  std::vector<FieldElem> coeffs;
  for (const auto& [e, c] : leading.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != chart.x1 && i != chart.x2 && e[i] != 0)
        throw FieldError("leading form involves other variables");
    if (e[chart.x1] * w1 + e[chart.x2] * w2 != chart.rc.ell)
      throw FieldError("leading form is not quasi-homogeneous");
    const int shift = e[chart.x1] - d.first_exp;
    if (shift % w2 != 0) throw FieldError("leading form is not quasi-homogeneous");
    const auto k = static_cast<std::size_t>(shift / w2);
    if (coeffs.size() <= k) coeffs.resize(k + 1, leading.field().zero());
    coeffs[k] = c;
  }
  d.g = UPoly(leading.field(), coeffs);
  return d;
}

std::string ExceptionalOrbit::str(const BPlusChart& chart) const {
  const std::string& x1 = chart.vars[chart.x1];
  const std::string& x2 = chart.vars[chart.x2];
  switch (kind) {
    case Kind::FirstAxis:
      return x1 + "=0";
    case Kind::SecondAxis:
      return x2 + "=0";
    case Kind::Generic:
      break;
  }
  auto power = [](const std::string& v, int n) { return n == 1 ? v : v + "^" + std::to_string(n); };
  return g.str("u") + "=0 with u=" + power(x1, chart.rc.w2) + "/" + power(x2, chart.rc.w1);
}

std::vector<ExceptionalOrbit> exceptional_orbits(const ProperTransform& t, const BPlusChart& chart) {
  const Dehomogenized d = dehomogenize(t.leading, chart);
  const FieldTower& k = t.leading.field();
  std::vector<ExceptionalOrbit> out;
  auto axis = [&](ExceptionalOrbit::Kind kind, int mult, std::size_t one_at) {
    ExceptionalOrbit o;
    o.kind = kind;
    o.multiplicity = mult;
    o.residue = k;
    o.point.assign(chart.vars.size(), k.zero());
    o.point[one_at] = k.one();
    o.order = log_order(t, chart, o.point);
    out.push_back(std::move(o));
  };
  if (d.first_exp > 0) axis(ExceptionalOrbit::Kind::FirstAxis, d.first_exp, chart.x2);
  if (d.second_exp > 0) axis(ExceptionalOrbit::Kind::SecondAxis, d.second_exp, chart.x1);
  if (d.g.degree() < 1) return out;
  const auto [c, dd] = bezout(chart.rc.w1, chart.rc.w2);
  int counter = 0;
  for (const auto& [h, mult] : univar_factor(d.g)) {
    ExceptionalOrbit o;
    o.kind = ExceptionalOrbit::Kind::Generic;
    o.g = h;
    o.multiplicity = mult;
    FieldElem alpha;
    if (h.degree() == 1) {
      o.residue = k;
      alpha = -h.coeff(0) / h.coeff(1);
    } else {
      o.residue = k.extend_unchecked(fresh_name(k, counter), h);
      alpha = o.residue.generator();
    }
    o.point.assign(chart.vars.size(), o.residue.zero());
    o.point[chart.x1] = alpha.pow(static_cast<std::int64_t>(c));
    o.point[chart.x2] = alpha.pow(static_cast<std::int64_t>(dd));
    o.order = log_order(t, chart, o.point);
    out.push_back(std::move(o));
  }
  return out;
}

IdentityReport check_identities(const Poly& f, const Center& j, const BPlusChart& chart,
                                const ProperTransform& t) {
  IdentityReport r;
  const std::vector<std::string> names(chart.vars.begin() + 1, chart.vars.end());
  Exponent sl(chart.vars.size(), 0);
  sl[chart.s] = t.ell;
  r.rees = weighted_substitute(f, source_weights(f.arity(), j, chart.rc), chart.vars[chart.s], names) ==
           t.f_prime.multiply_monomial(sl);

  const FieldTower& k = f.field();
  std::vector<Poly> to_source;
  to_source.push_back(Poly::constant(k, f.vars(), k.one()));
  for (std::size_t i = 0; i < f.arity(); ++i) to_source.push_back(Poly::variable(k, f.vars(), i));
  r.s_one = t.f_prime.substitute(to_source) == f;

  std::vector<Poly> to_chart;
  for (std::size_t i = 0; i < f.arity(); ++i) to_chart.push_back(Poly::variable(k, chart.vars, i + 1));
  const Poly lead = split_leading(f, j).first.substitute(to_chart);
  r.s_zero = t.f_prime.substitute_var(chart.s, Poly(k, chart.vars)) == lead && lead == t.leading;
  return r;
}

}  // namespace wbu
