#include "wbu/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace wbu {

namespace {

int exp_sum(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool needs_parens(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '+' || ch == '/' || ch == '*') return true;
    if (ch == '-' && i > 0) return true;
  }
  return false;
}

}  // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = exp_sum(a), db = exp_sum(b);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(FieldTower k, std::vector<std::string> vars) : k_(std::move(k)), vars_(std::move(vars)) {}

Poly Poly::constant(FieldTower k, std::vector<std::string> vars, const FieldElem& c) {
  Poly p(std::move(k), std::move(vars));
  p.add_term(Exponent(p.arity(), 0), c);
  return p;
}

Poly Poly::variable(FieldTower k, std::vector<std::string> vars, std::size_t i) {
  Poly p(std::move(k), std::move(vars));
  Exponent e(p.arity(), 0);
  e.at(i) = 1;
  p.add_term(e, p.k_.one());
  return p;
}

Poly Poly::monomial(FieldTower k, std::vector<std::string> vars, Exponent e, const FieldElem& c) {
  Poly p(std::move(k), std::move(vars));
  p.add_term(e, c);
  return p;
}

std::optional<std::size_t> Poly::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_sum(terms_.begin()->first) == 0);
}

FieldElem Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? k_.zero() : it->second;
}

FieldElem Poly::constant_term() const { return coeff(Exponent(arity(), 0)); }

const std::pair<const Exponent, FieldElem>& Poly::leading() const {
  if (terms_.empty()) throw FieldError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return exp_sum(terms_.rbegin()->first);
}

int Poly::order() const {
  if (terms_.empty()) throw FieldError("order of the zero polynomial");
  return exp_sum(terms_.begin()->first);
}

int Poly::degree_in(std::size_t i) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int Poly::order_in(std::size_t i) const {
  if (terms_.empty()) throw FieldError("order of the zero polynomial");
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
  return d;
}

void Poly::add_term(const Exponent& e, const FieldElem& c) {
  if (e.size() != vars_.size()) throw FieldError("exponent arity mismatch");
  if (c.is_zero()) return;
  if (c.tower() != k_) throw FieldError("coefficient outside polynomial tower");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::check_same(const Poly& b) const {
  if (k_ != b.k_) throw FieldError("polynomial tower mismatch");
  if (vars_ != b.vars_) throw FieldError("polynomial variable mismatch");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.k_, a.vars_);
  Exponent e(a.arity());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator*(const Poly& a, const FieldElem& c) {
  Poly r(a.k_, a.vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.k_ == b.k_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Poly Poly::pow(std::uint64_t n) const {
  Poly result = constant(k_, vars_, k_.one());
  Poly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::homogeneous_part(int degree) const {
  return select([degree](const Exponent& e) { return exp_sum(e) == degree; });
}

Poly Poly::select(const std::function<bool(const Exponent&)>& keep) const {
  Poly r(k_, vars_);
  for (const auto& [e, c] : terms_)
    if (keep(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Poly Poly::derivative(std::size_t i) const {
  Poly r(k_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    --d[i];
    r.add_term(d, c * k_.from_int(e[i]));
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != arity()) throw FieldError("substitution arity mismatch");
  if (images.empty()) throw FieldError("substitution into a constant ring needs a target");
  const Poly& proto = images.front();
  for (const auto& im : images) proto.check_same(im);
  const FieldTower& tk = proto.field();
  std::vector<std::vector<Poly>> powers(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    powers[i].push_back(constant(tk, proto.vars(), tk.one()));
    const int d = std::max(0, degree_in(i));
    for (int j = 1; j <= d; ++j) powers[i].push_back(powers[i].back() * images[i]);
  }
  Poly r(tk, proto.vars());
  for (const auto& [e, c] : terms_) {
    Poly t = constant(tk, proto.vars(), tk.embed(c));
    for (std::size_t i = 0; i < arity(); ++i)
      if (e[i]) t = t * powers[i][static_cast<std::size_t>(e[i])];
    r += t;
  }
  return r;
}

Poly Poly::substitute_var(std::size_t i, const Poly& value) const {
  check_same(value);
  std::vector<Poly> images;
  for (std::size_t j = 0; j < arity(); ++j)
    images.push_back(j == i ? value : variable(k_, vars_, j));
  return substitute(images);
}

Poly Poly::embed(const FieldTower& ext) const {
  if (ext == k_) return *this;
  Poly r(ext, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, ext.embed(c));
  return r;
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> where(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (involves(i)) throw FieldError("variable " + vars_[i] + " missing from target ring");
      where[i] = vars.size();
    } else {
      where[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  Poly r(k_, vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < arity(); ++i)
      if (where[i] < vars.size()) ne[where[i]] = e[i];
    r.add_term(ne, c);
  }
  return r;
}

Poly Poly::multiply_monomial(const Exponent& m) const {
  Poly r(k_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += m[i];
    r.terms_.emplace(ne, c);
  }
  return r;
}

Poly Poly::divide_monomial(const Exponent& m) const {
  Poly r(k_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) {
      ne[i] -= m[i];
      if (ne[i] < 0) throw FieldError("monomial does not divide " + str());
    }
    r.terms_.emplace(ne, c);
  }
  return r;
}

std::optional<Poly> Poly::divide(const Poly& d) const {
  check_same(d);
  if (d.is_zero()) throw FieldError("polynomial division by zero");
  const auto& [de, dc] = d.leading();
  const FieldElem dinv = dc.inv();
  Poly q(k_, vars_);
  Poly r = *this;
  while (!r.is_zero()) {
    const auto [re, rc] = r.leading();
    Exponent m = re;
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] -= de[i];
      if (m[i] < 0) return std::nullopt;
    }
    const FieldElem f = rc * dinv;
    q.add_term(m, f);
    r -= d.multiply_monomial(m) * f;
  }
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const FieldElem& lc = leading().second;
  if (lc.is_one()) return *this;
  return *this * lc.inv();
}

Poly Poly::inflate(std::uint64_t p) const {
  Poly r(k_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    for (auto& x : ne) x *= static_cast<int>(p);
    r.terms_.emplace(ne, c);
  }
  return r;
}

Poly Poly::deflate(std::uint64_t p) const {
  Poly r(k_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    for (auto& x : ne) {
      if (x % static_cast<int>(p)) throw FieldError("deflate: exponent not divisible");
      x /= static_cast<int>(p);
    }
    r.terms_.emplace(ne, c);
  }
  return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t i) const {
  std::vector<Poly> out(static_cast<std::size_t>(std::max(0, degree_in(i)) + 1), Poly(k_, vars_));
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[i] = 0;
    out[static_cast<std::size_t>(e[i])].add_term(ne, c);
  }
  return out;
}

UPoly Poly::to_upoly(std::size_t i) const {
  std::vector<FieldElem> cs(static_cast<std::size_t>(std::max(0, degree_in(i)) + 1), k_.zero());
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i && e[j]) throw FieldError("to_upoly: polynomial involves " + vars_[j]);
    cs[static_cast<std::size_t>(e[i])] = c;
  }
  return UPoly(k_, std::move(cs));
}

Poly Poly::from_upoly(const UPoly& u, std::vector<std::string> vars, std::size_t i) {
  Poly r(u.field(), std::move(vars));
  Exponent e(r.arity(), 0);
  for (std::size_t d = 0; d < u.coeffs().size(); ++d) {
    e[i] = static_cast<int>(d);
    r.add_term(e, u.coeffs()[d]);
  }
  return r;
}

FieldElem Poly::eval(const std::vector<FieldElem>& point) const {
  if (point.size() != arity()) throw FieldError("evaluation arity mismatch");
  const FieldTower& tk = point.empty() ? k_ : point.front().tower();
  FieldElem acc = tk.zero();
  for (const auto& [e, c] : terms_) {
    FieldElem t = tk.embed(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point[i].pow(static_cast<std::int64_t>(e[i]));
    acc += t;
  }
  return acc;
}

Poly Poly::taylor_shift(const std::vector<FieldElem>& point) const {
  if (point.size() != arity()) throw FieldError("shift arity mismatch");
  if (point.empty()) return *this;
  const FieldTower& tk = point.front().tower();
  if (!tk.contains(k_)) throw FieldError("shift point outside any extension of " + k_.descriptor());
  Poly lifted = embed(tk);
  std::vector<Poly> images;
  bool trivial = true;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (!point[i].is_zero()) trivial = false;
    images.push_back(variable(tk, vars_, i) + constant(tk, vars_, tk.embed(point[i])));
  }
  if (trivial) return lifted;
  return lifted.substitute(images);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.str();
    std::string term;
    if (mono.empty())
      term = needs_parens(cs) ? "(" + cs + ")" : cs;
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd and radical

namespace {

Poly one_like(const Poly& a) { return Poly::constant(a.field(), a.vars(), a.field().one()); }

std::optional<std::size_t> main_variable(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a.involves(i) || b.involves(i)) return i;
  return std::nullopt;
}

Poly content_in(const Poly& a, std::size_t i) {
  Poly g(a.field(), a.vars());
  for (const auto& c : a.coefficients_in(i)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly exact(const Poly& a, const Poly& d) {
  auto q = a.divide(d);
  if (!q) throw FieldError("internal: inexact multivariate division");
  return *q;
}

Poly pseudo_remainder(Poly r, const Poly& b, std::size_t i) {
  const int db = b.degree_in(i);
  const Poly lb = b.coefficients_in(i).back();
  while (!r.is_zero() && r.degree_in(i) >= db) {
    const int dr = r.degree_in(i);
    const Poly lr = r.coefficients_in(i).back();
    Exponent shift(r.arity(), 0);
    shift[i] = dr - db;
    r = r * lb - (b * lr).multiply_monomial(shift);
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto iv = main_variable(a, b);
  if (!iv) return one_like(a);
  const std::size_t i = *iv;
  bool univariate = true;
  for (std::size_t j = i + 1; j < a.arity(); ++j)
    if (a.involves(j) || b.involves(j)) univariate = false;
  if (univariate) return Poly::from_upoly(gcd(a.to_upoly(i), b.to_upoly(i)), a.vars(), i).monic();
  if (!a.involves(i)) return gcd(a, content_in(b, i));
  if (!b.involves(i)) return gcd(content_in(a, i), b);
  const Poly ca = content_in(a, i), cb = content_in(b, i);
  const Poly gc = gcd(ca, cb);
  Poly pa = exact(a, ca), pb = exact(b, cb);
  if (pa.degree_in(i) < pb.degree_in(i)) std::swap(pa, pb);
  while (true) {
    Poly r = pseudo_remainder(pa, pb, i);
    if (r.is_zero()) break;
    if (!r.involves(i)) {
      pb = one_like(a);
      break;
    }
    pa = std::move(pb);
    pb = exact(r, content_in(r, i));
  }
  return (gc * exact(pb, content_in(pb, i))).monic();
}

namespace {

bool univariate_squarefree(const UPoly& g) { return g.degree() <= 0 || gcd(g, g.derivative()).degree() == 0; }

// Plane curves: a squarefree fiber f(a, y) of full y-degree and a squarefree
// y-content rule out every repeated factor without any bivariate gcd.
bool squarefree_by_fiber(const Poly& f) {
  if (f.arity() != 2) return false;
  const std::size_t y = 1;
  if (f.degree_in(y) == 0) return false;
  const std::vector<Poly> coeffs = f.coefficients_in(y);
  UPoly content(f.field());
  for (const auto& c : coeffs) content = gcd(content, c.to_upoly(0));
  if (!univariate_squarefree(content)) return false;
  const UPoly lead = coeffs.back().to_upoly(0);
  for (long a = 0; a < 8; ++a) {
    const FieldElem at = f.field().from_int(a);
    if (f.field().is_finite() && a > 0 && at.is_zero()) break;
    if (lead.eval(at).is_zero()) continue;
    UPoly fiber(f.field());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      fiber = fiber + UPoly::monomial(coeffs[j].to_upoly(0).eval(at), j);
    if (univariate_squarefree(fiber)) return true;
  }
  return false;
}

}  // namespace

Poly radical(const Poly& f) {
  if (f.is_zero()) throw FieldError("radical of the zero polynomial");
  if (f.is_constant()) return one_like(f);
  if (squarefree_by_fiber(f)) return f.monic();
  Poly d(f.field(), f.vars());
  bool all_zero = true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    Poly di = f.derivative(i);
    if (di.is_zero()) continue;
    all_zero = false;
    d = gcd(d, di);
  }
  if (all_zero) {
    const std::uint64_t p = f.field().characteristic();
    Poly h = f.deflate(p);
    Poly root(f.field(), f.vars());
    bool ok = true;
    for (const auto& [e, c] : h.terms()) {
      auto r = pth_root(c);
      if (!r) {
        ok = false;
        break;
      }
      root.add_term(e, *r);
    }
    if (ok) return radical(root);
    return radical(h).inflate(p).monic();
  }
  d = gcd(d, f);
  if (d.is_constant()) return f.monic();
  const Poly part = exact(f, d);
  const Poly rest = radical(d);
  return exact(part * rest, gcd(part, rest)).monic();
}

// ---------------------------------------------------------------------------
// monomial valuations

mpq_class v_J(const Exponent& e, const MonomialValuation& j) {
  mpq_class v = mpq_class(e[j.first]) / j.a1 + mpq_class(e[j.second]) / j.a2;
  v.canonicalize();
  return v;
}

mpq_class v_J(const Poly& g, const MonomialValuation& j) {
  if (g.is_zero()) throw FieldError("v_J of the zero polynomial");
  if (j.a1 <= 0 || j.a2 <= 0) throw FieldError("v_J needs positive exponents");
  std::optional<mpq_class> best;
  for (const auto& [e, c] : g.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && i != j.first && i != j.second)
        throw FieldError("v_J: polynomial involves " + g.vars()[i]);
    mpq_class v = v_J(e, j);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// ---------------------------------------------------------------------------
// local models

std::string Substitution::str(const std::vector<std::string>& vars) const {
  const std::string& y = vars.back();
  switch (kind) {
    case Kind::Shift: {
      std::string mono;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars[i];
        if (v[i] > 1) mono += "^" + std::to_string(v[i]);
      }
      std::string c = eps.str();
      if (needs_parens(c)) c = "(" + c + ")";
      std::string term = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
      return y + " -> " + y + "+" + term;
    }
    case Kind::Swap:
      return y + " <-> " + vars[swap_with];
    case Kind::Scale:
      return "f -> f/" + eps.str();
  }
  return {};
}

LocalModel::LocalModel(Poly poly) : f(std::move(poly)) {
  if (f.arity() < 2) throw FieldError("a local model needs at least one x and y");
  if (f.is_zero()) throw FieldError("a local model needs f != 0");
  if (!f.constant_term().is_zero()) throw FieldError("f must vanish at the origin");
}

Poly LocalModel::replay(const Poly& g) const {
  Poly out = g;
  const std::size_t y = out.arity() - 1;
  for (const auto& s : log) {
    switch (s.kind) {
      case Substitution::Kind::Shift: {
        Poly mono = Poly::monomial(out.field(), out.vars(), s.v, out.field().embed(s.eps));
        out = out.substitute_var(y, Poly::variable(out.field(), out.vars(), y) + mono);
        break;
      }
      case Substitution::Kind::Swap: {
        std::vector<Poly> im;
        for (std::size_t i = 0; i < out.arity(); ++i) {
          std::size_t src = i == y ? s.swap_with : (i == s.swap_with ? y : i);
          im.push_back(Poly::variable(out.field(), out.vars(), src));
        }
        out = out.substitute(im);
        break;
      }
      case Substitution::Kind::Scale:
        out = out * out.field().embed(s.eps).inv();
        break;
    }
  }
  return out;
}

int ord_at_origin(const LocalModel& m) { return m.f.order(); }

Poly initial_form_m(const LocalModel& m) { return m.f.homogeneous_part(m.f.order()); }

LocalModel shift_substitute(const LocalModel& m, const Exponent& v, const FieldElem& eps) {
  if (v.size() != m.e() + 1 || v.back() != 0) throw FieldError("shift exponent must be in x only");
  LocalModel out = m;
  Substitution s;
  s.kind = Substitution::Kind::Shift;
  s.v = v;
  s.eps = eps;
  const std::size_t y = m.y_index();
  Poly mono = Poly::monomial(m.tower(), m.f.vars(), v, eps);
  out.f = m.f.substitute_var(y, Poly::variable(m.tower(), m.f.vars(), y) + mono);
  out.log.push_back(s);
  return out;
}

Poly weighted_substitute(const Poly& g, const std::vector<int>& weights, const std::string& s_name,
                         const std::vector<std::string>& new_names) {
  if (weights.size() != g.arity() || new_names.size() != g.arity())
    throw FieldError("weighted substitution arity mismatch");
  std::vector<std::string> vars{s_name};
  vars.insert(vars.end(), new_names.begin(), new_names.end());
  Poly r(g.field(), vars);
  for (const auto& [e, c] : g.terms()) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (weights[i] < 0) throw FieldError("weights must be nonnegative");
      ne[0] += weights[i] * e[i];
      ne[i + 1] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

}  // namespace wbu
