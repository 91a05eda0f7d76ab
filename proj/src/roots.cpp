#include "internal.hpp"
#include "wbu/field.hpp"

namespace wbu {

namespace {

std::uint64_t require_char_p(const FieldTower& k) {
  const std::uint64_t p = k.characteristic();
  if (p == 0) throw FieldError("p-th root requested in characteristic 0");
  return p;
}

// Coefficients of theta^(p*j) reduced modulo the minimal polynomial.
std::vector<UPoly> frobenius_matrix(const FieldTower& level) {
  const std::uint64_t p = level.characteristic();
  const UPoly& m = level.minpoly();
  const std::size_t d = static_cast<std::size_t>(m.degree());
  const FieldTower k = level.parent();
  std::vector<UPoly> cols;
  UPoly xp = UPoly::monomial(k.one(), p) % m;
  UPoly acc = UPoly::constant(k.one());
  for (std::size_t j = 0; j < d; ++j) {
    cols.push_back(acc);
    acc = (acc * xp) % m;
  }
  return cols;
}

std::optional<UPoly> poly_pth_root(const UPoly& f) {
  const FieldTower& k = f.field();
  const std::uint64_t p = k.characteristic();
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const FieldElem& c = f.coeffs()[i];
    if (c.is_zero()) {
      if (i % p == 0) out.push_back(k.zero());
      continue;
    }
    if (i % p != 0) return std::nullopt;
    auto r = pth_root(c);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return UPoly(k, std::move(out));
}

// Monic n-th root of a monic polynomial, n invertible in the field.
std::optional<UPoly> poly_nth_root(const UPoly& f, std::uint64_t n) {
  const FieldTower& k = f.field();
  if (f.degree() % static_cast<int>(n) != 0) return std::nullopt;
  const std::size_t deg = static_cast<std::size_t>(f.degree()) / n;
  std::vector<FieldElem> u(deg + 1, k.zero());
  u[deg] = k.one();
  const FieldElem n_inv = k.from_int(static_cast<long>(n)).inv();
  const std::size_t top = static_cast<std::size_t>(f.degree());
  for (std::size_t j = 1; j <= deg; ++j) {
    UPoly cur(k, u);
    FieldElem c = cur.pow(n).coeff(top - j);
    u[deg - j] = (f.coeff(top - j) - c) * n_inv;
  }
  UPoly root(k, u);
  if (root.pow(n) != f) return std::nullopt;
  return root;
}

}  // namespace

std::vector<FieldElem> p_basis(const FieldTower& k) {
  const std::uint64_t p = require_char_p(k);
  switch (k.kind()) {
    case FieldTower::Kind::Prime:
      return {k.one()};
    case FieldTower::Kind::Transcendental: {
      std::vector<FieldElem> out;
      auto lower = p_basis(k.parent());
      const FieldElem t = k.generator();
      FieldElem tp = k.one();
      for (std::uint64_t i = 0; i < p; ++i) {
        for (const auto& b : lower) out.push_back(k.embed(b) * tp);
        tp = tp * t;
      }
      return out;
    }
    case FieldTower::Kind::Algebraic: {
      if (!gcd(k.minpoly(), k.minpoly().derivative()).is_one())
        throw UnsupportedError("p-basis through an inseparable step");
      std::vector<FieldElem> out;
      for (const auto& b : p_basis(k.parent())) out.push_back(k.embed(b));
      return out;
    }
    default:
      break;
  }
  throw FieldError("p-basis of a characteristic 0 field");
}

std::vector<FieldElem> frobenius_coords(const FieldElem& a) {
  const FieldTower& k = a.tower();
  const std::uint64_t p = require_char_p(k);
  switch (k.kind()) {
    case FieldTower::Kind::Prime:
      return {a};
    case FieldTower::Kind::Transcendental: {
      const FieldTower lower = k.parent();
      const std::size_t m = p_basis(lower).size();
      const UPoly n = a.num() * a.den().pow(p - 1);
      // coords[i*m + b] collects sum_q c_{pq+i,b} t^q
      std::vector<std::vector<FieldElem>> polys(p * m);
      for (std::size_t e = 0; e < n.coeffs().size(); ++e) {
        const std::size_t i = e % p, q = e / p;
        auto cs = n.coeffs()[e].is_zero()
                      ? std::vector<FieldElem>(m, lower.zero())
                      : frobenius_coords(n.coeffs()[e]);
        for (std::size_t b = 0; b < m; ++b) {
          auto& v = polys[i * m + b];
          if (v.size() <= q) v.resize(q + 1, lower.zero());
          v[q] = cs[b];
        }
      }
      std::vector<FieldElem> out;
      FieldElem den_inv = k.zero();
      {
        FieldElem d = k.zero();
        // build den as an element of k
        FieldElem tpow = k.one();
        for (const auto& c : a.den().coeffs()) {
          d = d + k.embed(c) * tpow;
          tpow = tpow * k.generator();
        }
        den_inv = d.inv();
      }
      for (auto& v : polys) {
        FieldElem acc = k.zero();
        FieldElem tpow = k.one();
        for (const auto& c : v) {
          if (!c.is_zero()) acc = acc + k.embed(c) * tpow;
          tpow = tpow * k.generator();
        }
        out.push_back(acc * den_inv);
      }
      return out;
    }
    case FieldTower::Kind::Algebraic: {
      const FieldTower lower = k.parent();
      if (!gcd(k.minpoly(), k.minpoly().derivative()).is_one())
        throw UnsupportedError("Frobenius coordinates through an inseparable step");
      const std::size_t d = k.step_degree();
      auto cols = frobenius_matrix(k);
      std::vector<std::vector<FieldElem>> rows(d, std::vector<FieldElem>(d, lower.zero()));
      std::vector<FieldElem> rhs(d, lower.zero());
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) rows[i][j] = cols[j].coeff(i);
        rhs[i] = a.rep().coeff(i);
      }
      auto u = detail::solve_linear(lower, rows, rhs, d);
      if (!u) throw FieldError("singular Frobenius matrix on a separable step");
      const std::size_t m = p_basis(lower).size();
      std::vector<FieldElem> out(m, k.zero());
      FieldElem thpow = k.one();
      for (std::size_t j = 0; j < d; ++j) {
        auto cs = (*u)[j].is_zero() ? std::vector<FieldElem>(m, lower.zero())
                                    : frobenius_coords((*u)[j]);
        for (std::size_t b = 0; b < m; ++b) out[b] = out[b] + k.embed(cs[b]) * thpow;
        thpow = thpow * k.generator();
      }
      return out;
    }
    default:
      break;
  }
  throw FieldError("Frobenius coordinates in characteristic 0");
}

std::optional<FieldElem> pth_root(const FieldElem& a) {
  const FieldTower& k = a.tower();
  const std::uint64_t p = require_char_p(k);
  if (a.is_zero()) return a;
  switch (k.kind()) {
    case FieldTower::Kind::Prime:
      return a;
    case FieldTower::Kind::Transcendental: {
      auto n = poly_pth_root(a.num());
      if (!n) return std::nullopt;
      auto d = poly_pth_root(a.den());
      if (!d) return std::nullopt;
      FieldElem num = k.zero(), den = k.zero();
      FieldElem tpow = k.one();
      for (std::size_t i = 0; i < std::max(n->coeffs().size(), d->coeffs().size()); ++i) {
        num = num + k.embed(n->coeff(i)) * tpow;
        den = den + k.embed(d->coeff(i)) * tpow;
        tpow = tpow * k.generator();
      }
      return num / den;
    }
    case FieldTower::Kind::Algebraic: {
      // r = sum w_j theta^j, r^p = sum w_j^p theta^(pj); matching p-basis
      // coordinates of the parent gives a linear system in the w_j.
      const FieldTower lower = k.parent();
      const std::size_t d = k.step_degree();
      auto cols = frobenius_matrix(k);
      const std::size_t m = p_basis(lower).size();
      std::vector<std::vector<FieldElem>> rows;
      std::vector<FieldElem> rhs;
      std::vector<std::vector<std::vector<FieldElem>>> mc(d);  // mc[j][i] -> coords
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
          FieldElem e = cols[j].coeff(i);
          mc[j].push_back(e.is_zero() ? std::vector<FieldElem>(m, lower.zero())
                                      : frobenius_coords(e));
        }
      for (std::size_t i = 0; i < d; ++i) {
        FieldElem ai = a.rep().coeff(i);
        auto ac = ai.is_zero() ? std::vector<FieldElem>(m, lower.zero())
                               : frobenius_coords(ai);
        for (std::size_t b = 0; b < m; ++b) {
          std::vector<FieldElem> row(d, lower.zero());
          for (std::size_t j = 0; j < d; ++j) row[j] = mc[j][i][b];
          rows.push_back(std::move(row));
          rhs.push_back(ac[b]);
        }
      }
      auto w = detail::solve_linear(lower, rows, rhs, d);
      if (!w) return std::nullopt;
      FieldElem r = k.zero();
      FieldElem thpow = k.one();
      for (std::size_t j = 0; j < d; ++j) {
        r = r + k.embed((*w)[j]) * thpow;
        thpow = thpow * k.generator();
      }
      if (r.pow(static_cast<std::int64_t>(p)) != a)
        throw FieldError("internal: p-th root verification failed");
      return r;
    }
    default:
      break;
  }
  throw FieldError("p-th root requested in characteristic 0");
}

std::optional<FieldElem> nth_root(const FieldElem& a, std::uint64_t n) {
  if (n == 0) throw FieldError("0-th root");
  const FieldTower& k = a.tower();
  if (a.is_zero() || n == 1) return a;
  FieldElem cur = a;
  const std::uint64_t p = k.characteristic();
  if (p != 0) {
    while (n % p == 0) {
      auto r = pth_root(cur);
      if (!r) return std::nullopt;
      cur = *r;
      n /= p;
    }
  }
  if (n == 1) return cur;
  switch (k.kind()) {
    case FieldTower::Kind::Rational: {
      const mpq_class& q = cur.rational();
      if (q < 0 && n % 2 == 0) return std::nullopt;
      mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
      if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
      if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
      if (q < 0) rn = -rn;
      return k.from_rational(mpq_class(rn, rd));
    }
    case FieldTower::Kind::Prime: {
      if (p <= 1000000) {
        for (std::uint64_t x = 1; x < p; ++x) {
          FieldElem e = k.from_int(static_cast<long>(x));
          if (e.pow(static_cast<std::int64_t>(n)) == cur) return e;
        }
        return std::nullopt;
      }
      break;
    }
    case FieldTower::Kind::Transcendental: {
      const FieldTower lower = k.parent();
      FieldElem c = cur.num().lc();
      auto cr = nth_root(c, n);
      if (!cr) return std::nullopt;
      auto u = poly_nth_root(cur.num() * c.inv(), n);
      if (!u) return std::nullopt;
      auto v = poly_nth_root(cur.den(), n);
      if (!v) return std::nullopt;
      FieldElem num = k.zero(), den = k.zero(), tpow = k.one();
      for (std::size_t i = 0; i < std::max(u->coeffs().size(), v->coeffs().size()); ++i) {
        num = num + k.embed(u->coeff(i)) * tpow;
        den = den + k.embed(v->coeff(i)) * tpow;
        tpow = tpow * k.generator();
      }
      return k.embed(*cr) * num / den;
    }
    default:
      break;
  }
  UPoly xn = UPoly::monomial(k.one(), n) - UPoly::constant(cur);
  auto rs = roots(xn);
  if (rs.empty()) return std::nullopt;
  return rs.front();
}

}  // namespace wbu
