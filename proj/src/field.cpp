#include "wbu/field.hpp"

#include <sstream>

namespace wbu {

struct TowerLevel {
  FieldTower::Kind kind = FieldTower::Kind::Rational;
  std::uint64_t p = 0;
  std::string name;
  std::shared_ptr<const TowerLevel> parent;
  std::optional<UPoly> minpoly;
  std::size_t alg_degree = 1;
  bool has_trans = false;
  bool separable = true;
  int height = 0;
  std::string descriptor;
};

namespace {

const std::shared_ptr<const TowerLevel>& qq_level() {
  static const std::shared_ptr<const TowerLevel> level = [] {
    auto l = std::make_shared<TowerLevel>();
    l->descriptor = "QQ";
    return l;
  }();
  return level;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw FieldError("division by zero in GF(p)");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same(const FieldElem& a, const FieldElem& b) {
  if (a.tower() != b.tower())
    throw FieldError("tower mismatch: " + a.tower().descriptor() + " vs " +
                     b.tower().descriptor());
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldTower

FieldTower::FieldTower() : level_(qq_level()) {}
FieldTower::FieldTower(std::shared_ptr<const TowerLevel> level)
    : level_(std::move(level)) {}

FieldTower FieldTower::rationals() { return FieldTower(); }

FieldTower FieldTower::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("GF(p) needs a prime, got " + std::to_string(p));
  if (p >= (1ULL << 31)) throw UnsupportedError("prime too large");
  auto l = std::make_shared<TowerLevel>();
  l->kind = Kind::Prime;
  l->p = p;
  l->descriptor = "GF(" + std::to_string(p) + ")";
  return FieldTower(l);
}

FieldTower FieldTower::adjoin_transcendental(const std::string& name) const {
  if (level_->has_trans)
    throw UnsupportedError("at most one transcendental step is supported");
  if (named_generator(name))
    throw FieldError("generator name already used: " + name);
  auto l = std::make_shared<TowerLevel>();
  l->kind = Kind::Transcendental;
  l->p = level_->p;
  l->name = name;
  l->parent = level_;
  l->alg_degree = level_->alg_degree;
  l->has_trans = true;
  l->separable = level_->separable;
  l->height = level_->height + 1;
  l->descriptor = level_->descriptor + "(" + name + ")";
  return FieldTower(l);
}

FieldTower FieldTower::extend_unchecked(const std::string& name,
                                        const UPoly& minpoly) const {
  if (minpoly.field() != *this)
    throw FieldError("minimal polynomial must be over the tower being extended");
  if (minpoly.degree() < 1) throw FieldError("minimal polynomial must be nonconstant");
  if (named_generator(name))
    throw FieldError("generator name already used: " + name);
  std::size_t total = level_->alg_degree * static_cast<std::size_t>(minpoly.degree());
  if (total > kMaxAlgebraicDegree)
    throw UnsupportedError("algebraic degree of tower exceeds " +
                           std::to_string(kMaxAlgebraicDegree));
  auto l = std::make_shared<TowerLevel>();
  l->kind = Kind::Algebraic;
  l->p = level_->p;
  l->name = name;
  l->parent = level_;
  l->minpoly = minpoly.monic();
  l->alg_degree = total;
  l->has_trans = level_->has_trans;
  l->separable = level_->separable &&
                 gcd(*l->minpoly, l->minpoly->derivative()).degree() == 0;
  l->height = level_->height + 1;
  l->descriptor =
      level_->descriptor + "[" + name + "]/(" + l->minpoly->str(name) + ")";
  return FieldTower(l);
}

FieldTower FieldTower::extend(const std::string& name, const UPoly& minpoly) const {
  if (minpoly.field() != *this)
    throw FieldError("minimal polynomial must be over the tower being extended");
  if (minpoly.degree() < 1) throw FieldError("minimal polynomial must be nonconstant");
  UPoly m = minpoly.monic();
  // x^p - c is irreducible exactly when c is not a p-th power.
  std::uint64_t p = characteristic();
  bool binomial = p != 0 && m.degree() == static_cast<int>(p);
  for (int i = 1; binomial && i < m.degree(); ++i)
    if (!m.coeff(static_cast<std::size_t>(i)).is_zero()) binomial = false;
  if (binomial) {
    if (pth_root(-m.coeff(0)))
      throw FieldError("reducible minimal polynomial: " + m.str(name));
  } else if (!is_irreducible(m)) {
    throw FieldError("reducible minimal polynomial: " + m.str(name));
  }
  return extend_unchecked(name, m);
}

FieldTower::Kind FieldTower::kind() const { return level_->kind; }
std::uint64_t FieldTower::characteristic() const { return level_->p; }
bool FieldTower::is_base() const { return !level_->parent; }
FieldTower FieldTower::parent() const {
  if (!level_->parent) throw FieldError("base field has no parent");
  return FieldTower(level_->parent);
}
FieldTower FieldTower::base() const {
  auto l = level_;
  while (l->parent) l = l->parent;
  return FieldTower(l);
}
const std::string& FieldTower::generator_name() const { return level_->name; }
const UPoly& FieldTower::minpoly() const {
  if (!level_->minpoly) throw FieldError("no minimal polynomial at " + level_->descriptor);
  return *level_->minpoly;
}
std::size_t FieldTower::step_degree() const {
  return level_->kind == Kind::Algebraic
             ? static_cast<std::size_t>(level_->minpoly->degree())
             : 0;
}
std::size_t FieldTower::algebraic_degree() const { return level_->alg_degree; }
bool FieldTower::has_transcendental() const { return level_->has_trans; }
bool FieldTower::is_finite() const { return level_->p != 0 && !level_->has_trans; }
bool FieldTower::all_steps_separable() const { return level_->separable; }
int FieldTower::height() const { return level_->height; }

mpz_class FieldTower::order() const {
  if (!is_finite()) throw FieldError("order of an infinite field");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), level_->p, level_->alg_degree);
  return q;
}

std::vector<std::string> FieldTower::generator_names() const {
  std::vector<std::string> out;
  for (auto l = level_; l->parent; l = l->parent) out.insert(out.begin(), l->name);
  return out;
}

std::optional<FieldElem> FieldTower::named_generator(const std::string& name) const {
  for (auto l = level_; l->parent; l = l->parent)
    if (l->name == name) return embed(FieldTower(l).generator());
  return std::nullopt;
}

bool FieldTower::contains(const FieldTower& other) const {
  for (auto l = level_; l; l = l->parent)
    if (l == other.level_ || l->descriptor == other.level_->descriptor) return true;
  return false;
}

std::string FieldTower::descriptor() const { return level_->descriptor; }

bool FieldTower::operator==(const FieldTower& other) const {
  return level_ == other.level_ || level_->descriptor == other.level_->descriptor;
}

FieldElem FieldTower::zero() const {
  FieldElem e;
  e.tower_ = *this;
  switch (kind()) {
    case Kind::Rational:
    case Kind::Prime:
      break;
    case Kind::Transcendental:
      e.a_ = UPoly(parent());
      e.b_ = UPoly::constant(parent().one());
      break;
    case Kind::Algebraic:
      e.a_ = UPoly(parent());
      break;
  }
  return e;
}

FieldElem FieldTower::one() const { return from_int(1); }

FieldElem FieldTower::from_int(long v) const { return from_rational(mpq_class(v)); }

FieldElem FieldTower::from_rational(const mpq_class& v) const {
  if (is_base()) {
    FieldElem e = zero();
    if (kind() == Kind::Rational) {
      e.q_ = v;
      e.q_.canonicalize();
    } else {
      const auto p = level_->p;
      mpz_class n = v.get_num() % p;
      if (n < 0) n += p;
      mpz_class d = v.get_den() % p;
      e.r_ = n.get_ui() * mod_inverse(d.get_ui(), p) % p;
    }
    return e;
  }
  return embed(parent().from_rational(v));
}

FieldElem FieldTower::generator() const {
  if (is_base()) throw FieldError("base field has no generator");
  FieldElem e = zero();
  e.a_ = UPoly::x(parent());
  e.normalize();
  return e;
}

FieldElem FieldTower::embed(const FieldElem& x) const {
  if (x.tower() == *this) return x;
  if (is_base() || !contains(x.tower()))
    throw FieldError("cannot embed " + x.tower().descriptor() + " into " + descriptor());
  FieldElem inner = parent().embed(x);
  FieldElem e = zero();
  e.a_ = UPoly::constant(inner);
  return e;  // already normal: constants reduce to themselves
}

// ---------------------------------------------------------------------------
// FieldElem

void FieldElem::normalize() {
  switch (tower_.kind()) {
    case FieldTower::Kind::Rational:
      q_.canonicalize();
      break;
    case FieldTower::Kind::Prime:
      r_ %= tower_.characteristic();
      break;
    case FieldTower::Kind::Transcendental: {
      if (b_.is_zero()) throw FieldError("division by zero");
      if (a_.is_zero()) {
        b_ = UPoly::constant(tower_.parent().one());
        break;
      }
      if (b_.degree() > 0) {
        UPoly g = gcd(a_, b_);
        if (g.degree() > 0) {
          a_ = a_.exact_div(g);
          b_ = b_.exact_div(g);
        }
      }
      FieldElem c = b_.lc();
      if (!c.is_one()) {
        FieldElem ci = c.inv();
        a_ = a_ * ci;
        b_ = b_ * ci;
      }
      break;
    }
    case FieldTower::Kind::Algebraic:
      if (a_.degree() >= tower_.minpoly().degree()) a_ = a_ % tower_.minpoly();
      break;
  }
}

bool FieldElem::is_zero() const {
  switch (tower_.kind()) {
    case FieldTower::Kind::Rational:
      return q_ == 0;
    case FieldTower::Kind::Prime:
      return r_ == 0;
    default:
      return a_.is_zero();
  }
}

bool FieldElem::is_one() const {
  switch (tower_.kind()) {
    case FieldTower::Kind::Rational:
      return q_ == 1;
    case FieldTower::Kind::Prime:
      return r_ == 1;
    case FieldTower::Kind::Transcendental:
      return a_.is_one() && b_.is_one();
    case FieldTower::Kind::Algebraic:
      return a_.is_one();
  }
  return false;
}

bool FieldElem::is_base_scalar() const {
  if (tower_.is_base()) return true;
  if (tower_.kind() == FieldTower::Kind::Transcendental && b_.degree() > 0) return false;
  return a_.degree() <= 0 && (a_.is_zero() || a_.coeff(0).is_base_scalar());
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  switch (tower_.kind()) {
    case FieldTower::Kind::Rational:
      e.q_ = -q_;
      break;
    case FieldTower::Kind::Prime:
      e.r_ = r_ == 0 ? 0 : tower_.characteristic() - r_;
      break;
    default:
      e.a_ = -a_;
      break;
  }
  return e;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  FieldElem e = a;
  switch (a.tower_.kind()) {
    case FieldTower::Kind::Rational:
      e.q_ = a.q_ + b.q_;
      break;
    case FieldTower::Kind::Prime:
      e.r_ = (a.r_ + b.r_) % a.tower_.characteristic();
      break;
    case FieldTower::Kind::Transcendental:
      if (b.is_zero()) return a;
      if (a.is_zero()) return b;
      if (a.b_ == b.b_) {
        e.a_ = a.a_ + b.a_;
      } else {
        e.a_ = a.a_ * b.b_ + b.a_ * a.b_;
        e.b_ = a.b_ * b.b_;
      }
      e.normalize();
      break;
    case FieldTower::Kind::Algebraic:
      e.a_ = a.a_ + b.a_;
      break;
  }
  return e;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  FieldElem e = a;
  switch (a.tower_.kind()) {
    case FieldTower::Kind::Rational:
      e.q_ = a.q_ * b.q_;
      break;
    case FieldTower::Kind::Prime:
      e.r_ = a.r_ * b.r_ % a.tower_.characteristic();
      break;
    case FieldTower::Kind::Transcendental:
      if (a.is_zero() || b.is_zero()) return a.tower_.zero();
      e.a_ = a.a_ * b.a_;
      e.b_ = a.b_ * b.b_;
      e.normalize();
      break;
    case FieldTower::Kind::Algebraic:
      e.a_ = a.a_ * b.a_;
      e.normalize();
      break;
  }
  return e;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw FieldError("division by zero");
  FieldElem e = *this;
  switch (tower_.kind()) {
    case FieldTower::Kind::Rational:
      e.q_ = 1 / q_;
      break;
    case FieldTower::Kind::Prime:
      e.r_ = mod_inverse(r_, tower_.characteristic());
      break;
    case FieldTower::Kind::Transcendental:
      std::swap(e.a_, e.b_);
      e.normalize();
      break;
    case FieldTower::Kind::Algebraic: {
      auto [g, s, t] = xgcd(a_, tower_.minpoly());
      if (g.degree() != 0) throw FieldError("element not invertible (reducible minimal polynomial)");
      e.a_ = s * g.coeff(0).inv();
      e.normalize();
      break;
    }
  }
  return e;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return a * b.inv();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.tower_ != b.tower_) return false;
  switch (a.tower_.kind()) {
    case FieldTower::Kind::Rational:
      return a.q_ == b.q_;
    case FieldTower::Kind::Prime:
      return a.r_ == b.r_;
    case FieldTower::Kind::Transcendental:
      return a.a_ == b.a_ && a.b_ == b.b_;
    case FieldTower::Kind::Algebraic:
      return a.a_ == b.a_;
  }
  return false;
}

FieldElem FieldElem::pow(const mpz_class& n) const {
  if (n < 0) return inv().pow(mpz_class(-n));
  FieldElem result = tower_.one();
  FieldElem base = *this;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(n.get_mpz_t(), i)) result = result * base;
  }
  return result;
}

FieldElem FieldElem::pow(std::int64_t n) const {
  return pow(mpz_class(static_cast<long>(n)));
}

std::string FieldElem::str() const {
  switch (tower_.kind()) {
    case FieldTower::Kind::Rational:
      return q_.get_str();
    case FieldTower::Kind::Prime:
      return std::to_string(r_);
    case FieldTower::Kind::Transcendental: {
      const std::string& t = tower_.generator_name();
      if (b_.is_one()) return a_.str(t);
      return "(" + a_.str(t) + ")/(" + b_.str(t) + ")";
    }
    case FieldTower::Kind::Algebraic:
      return a_.str(tower_.generator_name());
  }
  return {};
}

}  // namespace wbu
