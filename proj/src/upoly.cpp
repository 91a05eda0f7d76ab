#include "wbu/field.hpp"

namespace wbu {

UPoly::UPoly(FieldTower k) : k_(std::move(k)) {}

UPoly::UPoly(FieldTower k, std::vector<FieldElem> coeffs)
    : k_(std::move(k)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.tower() != k_) throw FieldError("coefficient outside polynomial tower");
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldElem& c) {
  UPoly p(c.tower());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

UPoly UPoly::monomial(const FieldElem& c, std::size_t deg) {
  UPoly p(c.tower());
  if (c.is_zero()) return p;
  p.c_.assign(deg + 1, c.tower().zero());
  p.c_[deg] = c;
  return p;
}

UPoly UPoly::x(const FieldTower& k) { return monomial(k.one(), 1); }

bool UPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

FieldElem UPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : k_.zero();
}

FieldElem UPoly::lc() const {
  if (c_.empty()) return k_.zero();
  return c_.back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  if (a.k_ != b.k_) throw FieldError("polynomial tower mismatch");
  const UPoly& big = a.c_.size() >= b.c_.size() ? a : b;
  const UPoly& small = a.c_.size() >= b.c_.size() ? b : a;
  UPoly r = big;
  for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] = r.c_[i] + small.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.k_ != b.k_) throw FieldError("polynomial tower mismatch");
  UPoly r(a.k_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.k_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const FieldElem& c) {
  if (a.k_ != c.tower()) throw FieldError("polynomial tower mismatch");
  UPoly r(a.k_);
  if (c.is_zero()) return r;
  r.c_.reserve(a.c_.size());
  for (const auto& x : a.c_) r.c_.push_back(x * c);
  r.trim();
  return r;
}

bool operator==(const UPoly& a, const UPoly& b) {
  return a.k_ == b.k_ && a.c_ == b.c_;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw FieldError("polynomial division by zero");
  if (d.k_ != k_) throw FieldError("polynomial tower mismatch");
  UPoly q(k_);
  UPoly r = *this;
  if (r.degree() < d.degree()) return {q, r};
  const FieldElem inv_lc = d.lc().inv();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), k_.zero());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree()) - dd;
    FieldElem f = r.lc() * inv_lc;
    q.c_[shift] = f;
    for (std::size_t i = 0; i <= dd; ++i)
      if (!d.c_[i].is_zero()) r.c_[shift + i] -= f * d.c_[i];
    r.c_.pop_back();  // leading term cancels exactly
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw FieldError("inexact polynomial division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return *this * lc().inv();
}

UPoly UPoly::derivative() const {
  UPoly r(k_);
  if (c_.size() <= 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * k_.from_int(static_cast<long>(i)));
  r.trim();
  return r;
}

UPoly UPoly::pow(std::uint64_t n) const {
  UPoly result = constant(k_.one());
  UPoly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

UPoly UPoly::powmod(const mpz_class& n, const UPoly& mod) const {
  UPoly result = constant(k_.one()) % mod;
  UPoly base = *this % mod;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(n.get_mpz_t(), i)) result = (result * base) % mod;
  }
  return result;
}

FieldElem UPoly::eval(const FieldElem& x) const {
  FieldElem acc = x.tower().zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + x.tower().embed(c_[i]);
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc(inner.field());
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * inner + constant(inner.field().embed(c_[i]));
  return acc;
}

UPoly UPoly::embed(const FieldTower& ext) const {
  if (ext == k_) return *this;
  std::vector<FieldElem> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(ext.embed(c));
  return UPoly(ext, std::move(out));
}

UPoly UPoly::inflate(std::size_t k) const {
  UPoly r(k_);
  if (is_zero()) return r;
  r.c_.assign((c_.size() - 1) * k + 1, k_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

namespace {

bool needs_parens(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '+' || ch == '/' || ch == '*') return true;
    if (ch == '-' && i > 0) return true;
  }
  return false;
}

}  // namespace

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].str();
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
    std::string term;
    if (mono.empty()) {
      term = needs_parens(cs) ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else {
      term = (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b) {
  const FieldTower& k = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(k.one()), s1(k);
  UPoly t0(k), t1 = UPoly::constant(k.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElem c = r0.lc().inv();
  return {r0 * c, s0 * c, t0 * c};
}

}  // namespace wbu
