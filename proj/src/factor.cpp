#include <algorithm>
#include <map>
#include <random>

#include "internal.hpp"
#include "wbu/field.hpp"

namespace wbu {

namespace {

using Factors = std::vector<std::pair<UPoly, int>>;

// ---------------------------------------------------------------------------
// square-free decomposition

UPoly deflate(const UPoly& f, std::uint64_t p) {
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
  return UPoly(f.field(), std::move(out));
}

std::optional<UPoly> coeffwise_pth_root(const UPoly& f) {
  const std::uint64_t p = f.field().characteristic();
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    const FieldElem& c = f.coeffs()[i];
    if (c.is_zero()) {
      out.push_back(c);
      continue;
    }
    auto r = pth_root(c);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return UPoly(f.field(), std::move(out));
}

void squarefree_yun(const UPoly& f, Factors& out) {
  UPoly fd = f.derivative();
  UPoly a0 = gcd(f, fd);
  UPoly b = f.exact_div(a0);
  UPoly c = fd.exact_div(a0);
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b.exact_div(a);
    c = d.exact_div(a);
    d = c - b.derivative();
    ++i;
  }
}

void squarefree_char_p(const UPoly& f, int scale, Factors& out);

// c' = 0: c = H(x^p). Either a p-th power coefficientwise, or H is
// factored and each irreducible h(x^p) is irreducible or a p-th power.
void squarefree_inseparable(const UPoly& c, int scale, Factors& out) {
  if (c.degree() <= 0) return;
  const std::uint64_t p = c.field().characteristic();
  if (auto r = coeffwise_pth_root(c)) {
    squarefree_char_p(r->monic(), scale * static_cast<int>(p), out);
    return;
  }
  for (const auto& [h, m] : univar_factor(deflate(c, p))) {
    UPoly infl = h.inflate(p);
    if (auto r = coeffwise_pth_root(infl))
      out.emplace_back(r->monic(), scale * m * static_cast<int>(p));
    else
      out.emplace_back(infl, scale * m);
  }
}

void squarefree_char_p(const UPoly& f, int scale, Factors& out) {
  if (f.degree() <= 0) return;
  UPoly g = f.derivative();
  if (g.is_zero()) {
    squarefree_inseparable(f, scale, out);
    return;
  }
  UPoly c = gcd(f, g);
  UPoly w = f.exact_div(c);
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = w.exact_div(y);
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    ++i;
    w = y;
    c = c.exact_div(y);
  }
  squarefree_inseparable(c.monic(), scale, out);
}

// ---------------------------------------------------------------------------
// finite fields: Cantor-Zassenhaus

FieldElem random_elem(const FieldTower& k, std::mt19937_64& rng) {
  if (k.kind() == FieldTower::Kind::Prime)
    return k.from_int(static_cast<long>(rng() % k.characteristic()));
  FieldElem acc = k.zero();
  FieldElem th = k.one();
  for (std::size_t i = 0; i < k.step_degree(); ++i) {
    acc += k.embed(random_elem(k.parent(), rng)) * th;
    th *= k.generator();
  }
  return acc;
}

UPoly random_poly(const FieldTower& k, int deg, std::mt19937_64& rng) {
  std::vector<FieldElem> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_elem(k, rng));
  return UPoly(k, std::move(c));
}

std::vector<std::pair<UPoly, int>> distinct_degree(const UPoly& f) {
  const FieldTower& k = f.field();
  const mpz_class q = k.order();
  std::vector<std::pair<UPoly, int>> out;
  UPoly rest = f;
  const UPoly x = UPoly::x(k);
  UPoly h = x % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = h.powmod(q, rest);
    UPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest.exact_div(g);
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

void equal_degree(const UPoly& g, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldTower& k = g.field();
  const mpz_class q = k.order();
  const std::uint64_t p = k.characteristic();
  for (;;) {
    UPoly a = random_poly(k, g.degree(), rng);
    if (a.degree() <= 0) continue;
    UPoly b(k);
    if (p == 2) {
      // trace from GF(q^d) to GF(2)
      const std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
      UPoly term = a % g;
      b = term;
      for (std::size_t i = 1; i < bits * static_cast<std::size_t>(d); ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = a.powmod(e, g) - UPoly::constant(k.one());
    }
    UPoly u = gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(g.exact_div(u), d, rng, out);
      return;
    }
  }
}

std::vector<UPoly> factor_finite(const UPoly& f) {
  std::mt19937_64 rng(0x5eed1234u + static_cast<unsigned>(f.degree()));
  std::vector<UPoly> out;
  for (const auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// rationals: Zassenhaus with Hensel lifting

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zsym(ZPoly a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

UPoly to_gfp(const ZPoly& a, const FieldTower& gp) {
  std::vector<FieldElem> c;
  const unsigned long p = static_cast<unsigned long>(gp.characteristic());
  for (const auto& v : a) c.push_back(gp.from_int(static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), p))));
  return UPoly(gp, std::move(c));
}

ZPoly from_gfp(const UPoly& a) {
  ZPoly r;
  for (const auto& c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c.residue()));
  return r;
}

UPoly to_rational(const ZPoly& a, const FieldTower& qq) {
  std::vector<FieldElem> c;
  for (const auto& v : a) c.push_back(qq.from_rational(mpq_class(v)));
  return UPoly(qq, std::move(c));
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly zprimitive(ZPoly a) {
  mpz_class g = zcontent(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

bool small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Lifts target = G*H (mod p) with G, H monic to the same identity mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& target, const UPoly& g, const UPoly& h,
                                    const mpz_class& p, unsigned k) {
  const FieldTower& gp = g.field();
  auto [one, s, t] = xgcd(g, h);
  if (!one.is_one()) throw FieldError("Hensel lifting: factors not coprime");
  ZPoly G = from_gfp(g), H = from_gfp(h);
  mpz_class pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly e = zsub(target, zmul(G, H));
    for (auto& c : e) {
      if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t()))
        throw FieldError("Hensel lifting: inconsistent step");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    }
    UPoly ep = to_gfp(e, gp);
    auto [quo, sigma] = (ep * s).divmod(h);
    UPoly tau = ep * t + quo * g;
    ZPoly ts = from_gfp(tau), ss = from_gfp(sigma);
    for (auto& c : ts) c *= pj;
    for (auto& c : ss) c *= pj;
    G = zsub(G, zsub(ZPoly{}, ts));
    H = zsub(H, zsub(ZPoly{}, ss));
    pj *= p;
  }
  return {zmod(G, pj), zmod(H, pj)};
}

std::vector<UPoly> factor_rational(const UPoly& f) {
  const FieldTower qq = f.field();
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly F;
  for (const auto& c : f.coeffs()) F.push_back(mpz_class(c.rational() * den));
  F = zprimitive(F);
  const std::size_t n = F.size() - 1;

  std::uint64_t best_p = 0;
  std::vector<UPoly> best;
  int good = 0;
  for (std::uint64_t p = 3; good < 3 && p < 100000; p += 2) {
    if (!small_prime(p)) continue;
    if (mpz_divisible_ui_p(F.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    FieldTower gp = FieldTower::prime_field(p);
    UPoly fp = to_gfp(F, gp);
    if (gcd(fp, fp.derivative()).degree() > 0) continue;
    auto fac = factor_finite(fp.monic());
    if (fac.size() == 1) return {f};
    if (best.empty() || fac.size() < best.size()) {
      best = fac;
      best_p = p;
    }
    ++good;
  }
  if (best.empty()) throw FieldError("no good prime for rational factorization");
  if (best.size() > 20) throw UnsupportedError("too many modular factors for recombination");

  const mpz_class lc = F.back();
  mpz_class maxc = 0;
  for (const auto& c : F) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = mpz_class(abs(lc)) * maxc * mpz_class(n + 2);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  bound *= 2;
  const mpz_class p = static_cast<unsigned long>(best_p);
  unsigned k = 1;
  mpz_class pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly target = F;
  for (auto& c : target) c *= lc_inv;
  target = zmod(target, pk);

  std::vector<ZPoly> lifted;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    UPoly rest = UPoly::constant(best[i].field().one());
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = rest * best[j];
    auto [G, H] = hensel_pair(target, best[i], rest, p, k);
    lifted.push_back(G);
    target = H;
  }
  lifted.push_back(target);

  std::vector<UPoly> out;
  ZPoly rem = F;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size(); ++size) {
    bool again = true;
    while (again && 2 * size <= pool.size()) {
      again = false;
      std::vector<bool> pick(pool.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
      do {
        ZPoly cand{mpz_class(rem.back())};
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (pick[i]) cand = zmod(zmul(cand, pool[i]), pk);
        cand = zprimitive(zsym(cand, pk));
        if (cand.size() < 2) continue;
        UPoly cq = to_rational(cand, qq);
        auto [quo, r] = to_rational(rem, qq).divmod(cq);
        if (!r.is_zero()) continue;
        out.push_back(cq.monic());
        ZPoly qz;
        mpz_class qden = 1;
        for (const auto& c : quo.coeffs())
          mpz_lcm(qden.get_mpz_t(), qden.get_mpz_t(), c.rational().get_den_mpz_t());
        for (const auto& c : quo.coeffs()) qz.push_back(mpz_class(c.rational() * qden));
        rem = zprimitive(qz);
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (!pick[i]) keep.push_back(pool[i]);
        pool = std::move(keep);
        again = true;
        break;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  if (rem.size() >= 2) out.push_back(to_rational(rem, qq).monic());
  return out;
}

// ---------------------------------------------------------------------------
// rational function field K(t): Kronecker substitution t -> X, x -> X^D

std::vector<UPoly> factor_function_field(const UPoly& f) {
  const FieldTower& kt = f.field();
  const FieldTower k = kt.parent();
  UPoly den = UPoly::constant(k.one());
  for (const auto& c : f.coeffs()) {
    const UPoly& d = c.den();
    den = (den * d).exact_div(gcd(den, d));
  }
  std::vector<UPoly> rows;
  for (const auto& c : f.coeffs()) rows.push_back(c.num() * den.exact_div(c.den()));
  UPoly content(k);
  for (const auto& r : rows) content = gcd(content, r);
  int dt = 0;
  for (auto& r : rows) {
    if (!r.is_zero()) r = r.exact_div(content);
    dt = std::max(dt, r.degree());
  }
  const std::size_t width = static_cast<std::size_t>(dt) + 1;
  std::vector<FieldElem> img((rows.size() - 1) * width + width, k.zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].coeffs().size(); ++j) img[i * width + j] = rows[i].coeffs()[j];
  UPoly image(k, std::move(img));

  std::vector<UPoly> pool;
  for (const auto& [g, m] : univar_factor(image))
    for (int i = 0; i < m; ++i) pool.push_back(g);
  if (pool.size() <= 1) return {f};
  if (pool.size() > 18) throw UnsupportedError("too many Kronecker factors for recombination");

  auto decode = [&](const UPoly& u) {
    std::vector<FieldElem> cs;
    const std::size_t xdeg = u.coeffs().size() / width + 1;
    for (std::size_t i = 0; i < xdeg; ++i) {
      std::vector<FieldElem> tc;
      for (std::size_t j = 0; j < width; ++j) tc.push_back(u.coeff(i * width + j));
      cs.push_back(detail::poly_to_elem(kt, UPoly(k, std::move(tc))));
    }
    return UPoly(kt, std::move(cs));
  };

  std::vector<UPoly> out;
  UPoly rem = f;
  for (std::size_t size = 1; 2 * size <= pool.size() && rem.degree() > 1; ++size) {
    bool again = true;
    while (again && 2 * size <= pool.size()) {
      again = false;
      std::vector<bool> pick(pool.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
      do {
        UPoly prod = UPoly::constant(k.one());
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (pick[i]) prod = prod * pool[i];
        UPoly cand = decode(prod);
        if (cand.degree() < 1 || cand.degree() >= rem.degree()) continue;
        cand = cand.monic();
        auto [quo, r] = rem.divmod(cand);
        if (!r.is_zero()) continue;
        out.push_back(cand);
        rem = quo.monic();
        std::vector<UPoly> keep;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (!pick[i]) keep.push_back(pool[i]);
        pool = std::move(keep);
        again = true;
        break;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  if (rem.degree() >= 1) out.push_back(rem);
  return out;
}

// ---------------------------------------------------------------------------
// algebraic steps: Trager's norm method

std::vector<FieldElem> shift_candidates(const FieldTower& k) {
  std::vector<FieldElem> out;
  const std::uint64_t p = k.characteristic();
  if (p == 0) {
    for (long s = 0; s <= 24; ++s) {
      out.push_back(k.from_int(s));
      if (s) out.push_back(k.from_int(-s));
    }
    return out;
  }
  auto t = detail::transcendental_generator(k);
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    FieldElem s = k.zero(), tp = k.one();
    std::uint64_t v = idx;
    if (!t && idx >= p) break;
    while (v) {
      s += k.from_int(static_cast<long>(v % p)) * tp;
      v /= p;
      if (t) tp *= *t;
      else break;
    }
    out.push_back(s);
  }
  return out;
}

std::vector<UPoly> factor_algebraic(const UPoly& f) {
  const FieldTower& l = f.field();
  const FieldTower k = l.parent();
  const FieldElem th = l.generator();
  for (const FieldElem& s0 : shift_candidates(k)) {
    const FieldElem s = l.embed(s0);
    UPoly shifted = f.compose(UPoly::x(l) - UPoly::constant(s * th));
    UPoly nrm = norm_down(shifted);
    UPoly nd = nrm.derivative();
    if (nd.is_zero() || gcd(nrm, nd).degree() > 0) continue;
    std::vector<UPoly> out;
    for (const auto& [g, m] : univar_factor(nrm)) {
      UPoly h = gcd(shifted, g.embed(l));
      if (h.degree() > 0) out.push_back(h.compose(UPoly::x(l) + UPoly::constant(s * th)).monic());
    }
    return out;
  }
  throw UnsupportedError("no separating shift found over " + l.descriptor());
}

std::vector<UPoly> factor_squarefree(const UPoly& f) {
  if (f.degree() <= 1) return {f};
  const FieldTower& k = f.field();
  if (k.characteristic() != 0 && f.derivative().is_zero()) return {f};
  if (k.is_finite()) return factor_finite(f);
  switch (k.kind()) {
    case FieldTower::Kind::Rational:
      return factor_rational(f);
    case FieldTower::Kind::Transcendental:
      return factor_function_field(f);
    case FieldTower::Kind::Algebraic:
      return factor_algebraic(f);
    default:
      break;
  }
  throw UnsupportedError("factorization over " + k.descriptor());
}

}  // namespace

Factors univar_squarefree(const UPoly& g) {
  Factors out;
  if (g.degree() <= 0) return out;
  const UPoly f = g.monic();
  if (f.field().characteristic() == 0)
    squarefree_yun(f, out);
  else
    squarefree_char_p(f, 1, out);
  for (auto& [h, m] : out) h = h.monic();
  return out;
}

Factors univar_factor(const UPoly& g) {
  if (g.is_zero()) throw FieldError("factorization of the zero polynomial");
  std::map<std::string, std::pair<UPoly, int>> merged;
  for (const auto& [piece, m] : univar_squarefree(g))
    for (const auto& q : factor_squarefree(piece)) {
      UPoly mq = q.monic();
      std::string key = std::to_string(mq.degree()) + ":" + mq.str("x");
      auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(key, std::make_pair(mq, m));
      else
        it->second.second += m;
    }
  Factors out;
  for (auto& [key, v] : merged) out.push_back(v);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
  return out;
}

bool is_irreducible(const UPoly& g) {
  if (g.degree() <= 0) return false;
  if (g.degree() == 1) return true;
  auto f = univar_factor(g);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<FieldElem> roots(const UPoly& g) {
  std::vector<FieldElem> out;
  if (g.degree() <= 0) return out;
  for (const auto& [h, m] : univar_factor(g))
    if (h.degree() == 1) out.push_back(-h.coeff(0) / h.coeff(1));
  return out;
}

UPoly det_polymatrix(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw FieldError("determinant of an empty matrix");
  const FieldTower k = m[0][0].field();
  bool negate = false;
  UPoly prev = UPoly::constant(k.one());
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (m[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < n && m[r][c].is_zero()) ++r;
      if (r == n) return UPoly(k);
      std::swap(m[r], m[c]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]).exact_div(prev);
      m[i][c] = UPoly(k);
    }
    prev = m[c][c];
  }
  UPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

UPoly resultant_y(const std::vector<UPoly>& a_in, const std::vector<UPoly>& b_in) {
  auto trimmed = [](std::vector<UPoly> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  };
  const auto a = trimmed(a_in), b = trimmed(b_in);
  if (a.empty() || b.empty()) {
    const FieldTower k = !a_in.empty() ? a_in[0].field() : b_in.at(0).field();
    return UPoly(k);
  }
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  if (da == 0) return a[0].pow(db);
  if (db == 0) return b[0].pow(da);
  const FieldTower k = a[0].field();
  const std::size_t n = da + db;
  std::vector<std::vector<UPoly>> s(n, std::vector<UPoly>(n, UPoly(k)));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j <= da; ++j) s[i][i + j] = a[da - j];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j <= db; ++j) s[db + i][i + j] = b[db - j];
  return det_polymatrix(std::move(s));
}

UPoly norm_down(const UPoly& h) {
  const FieldTower& l = h.field();
  if (l.kind() != FieldTower::Kind::Algebraic) throw FieldError("norm below a non-algebraic level");
  const FieldTower k = l.parent();
  const std::size_t d = l.step_degree();
  std::vector<UPoly> a;
  for (std::size_t i = 0; i <= d; ++i) a.push_back(UPoly::constant(l.minpoly().coeff(i)));
  std::vector<std::vector<FieldElem>> cols(d, std::vector<FieldElem>(h.coeffs().size(), k.zero()));
  for (std::size_t i = 0; i < h.coeffs().size(); ++i)
    for (std::size_t j = 0; j < d; ++j) cols[j][i] = h.coeffs()[i].rep().coeff(j);
  std::vector<UPoly> b;
  for (auto& c : cols) b.emplace_back(k, std::move(c));
  return resultant_y(a, b);
}

}  // namespace wbu
