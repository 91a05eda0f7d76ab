#pragma once

// Exact coefficient fields: QQ, GF(p), one rational function field step and
// simple algebraic extensions, stacked as a tower.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wbu {

/// Arithmetic misuse: division by zero, tower mismatch, bad root request.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tower shape or input size outside what the engine supports.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldElem;
class UPoly;
struct TowerLevel;

/// Maximal product of algebraic step degrees in a tower.
inline constexpr std::size_t kMaxAlgebraicDegree = 32;

/// Immutable handle on the top level of a field tower.
class FieldTower {
 public:
  enum class Kind { Rational, Prime, Transcendental, Algebraic };

  FieldTower();  // QQ

  static FieldTower rationals();
  static FieldTower prime_field(std::uint64_t p);

  FieldTower adjoin_transcendental(const std::string& name) const;
  /// Adjoins a root of `minpoly` (a polynomial over this tower). The
  /// polynomial is made monic and checked for irreducibility.
  FieldTower extend(const std::string& name, const UPoly& minpoly) const;
  /// As `extend` but trusts the caller on irreducibility.
  FieldTower extend_unchecked(const std::string& name,
                              const UPoly& minpoly) const;

  Kind kind() const;
  std::uint64_t characteristic() const;
  bool is_base() const;
  FieldTower parent() const;
  FieldTower base() const;
  const std::string& generator_name() const;
  const UPoly& minpoly() const;
  std::size_t step_degree() const;  // 0 for transcendental and base levels
  std::size_t algebraic_degree() const;
  bool has_transcendental() const;
  /// Finite field: prime base with only algebraic steps.
  bool is_finite() const;
  /// Every algebraic step is separable over the level below.
  bool all_steps_separable() const;
  /// Number of elements of a finite field.
  mpz_class order() const;
  int height() const;

  /// Names of every adjoined generator, bottom-up.
  std::vector<std::string> generator_names() const;
  /// Generator with the given name, embedded in this tower.
  std::optional<FieldElem> named_generator(const std::string& name) const;
  /// True if `other` is this tower or one of its sub-towers.
  bool contains(const FieldTower& other) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long v) const;
  FieldElem from_rational(const mpq_class& v) const;
  FieldElem generator() const;
  /// Embeds an element of a sub-tower verbatim.
  FieldElem embed(const FieldElem& e) const;

  /// Canonical text form, e.g. `GF(2)(t)[θ]/(θ^2+t)`.
  std::string descriptor() const;

  bool operator==(const FieldTower& other) const;
  bool operator!=(const FieldTower& other) const { return !(*this == other); }

 private:
  explicit FieldTower(std::shared_ptr<const TowerLevel> level);
  std::shared_ptr<const TowerLevel> level_;
  friend class FieldElem;
};

/// Dense univariate polynomial over a tower, lowest degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldTower k);
  UPoly(FieldTower k, std::vector<FieldElem> coeffs);

  static UPoly constant(const FieldElem& c);
  static UPoly monomial(const FieldElem& c, std::size_t deg);
  static UPoly x(const FieldTower& k);

  const FieldTower& field() const { return k_; }
  int degree() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const;
  FieldElem coeff(std::size_t i) const;
  FieldElem lc() const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const FieldElem& c);
  friend bool operator==(const UPoly& a, const UPoly& b);
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  /// Exact quotient, throws if the remainder is nonzero.
  UPoly exact_div(const UPoly& d) const;

  UPoly monic() const;
  UPoly derivative() const;
  UPoly pow(std::uint64_t n) const;
  UPoly powmod(const mpz_class& n, const UPoly& mod) const;
  FieldElem eval(const FieldElem& x) const;
  UPoly compose(const UPoly& inner) const;
  /// Same coefficients viewed in an extension tower.
  UPoly embed(const FieldTower& ext) const;
  /// Substitutes x -> x^k.
  UPoly inflate(std::size_t k) const;

  std::string str(const std::string& var) const;

 private:
  void trim();
  FieldTower k_;
  std::vector<FieldElem> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);
/// Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b);

/// An element of a FieldTower in canonical normal form: transcendental
/// levels hold reduced fractions with monic denominator, algebraic levels
/// hold remainders modulo the minimal polynomial.
class FieldElem {
 public:
  FieldElem() = default;

  const FieldTower& tower() const { return tower_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) {
    return !(a == b);
  }

  FieldElem inv() const;
  FieldElem pow(std::int64_t n) const;
  FieldElem pow(const mpz_class& n) const;

  /// Lies in the base field (no generator involved).
  bool is_base_scalar() const;
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }
  /// Transcendental level: numerator / denominator over the parent.
  const UPoly& num() const { return a_; }
  const UPoly& den() const { return b_; }
  /// Algebraic level: representative polynomial in the generator.
  const UPoly& rep() const { return a_; }

  std::string str() const;

 private:
  friend class FieldTower;
  friend class UPoly;
  void normalize();

  FieldTower tower_;
  mpq_class q_;
  std::uint64_t r_ = 0;
  UPoly a_, b_;
};

inline int UPoly::degree() const { return static_cast<int>(c_.size()) - 1; }
inline bool UPoly::is_zero() const { return c_.empty(); }
inline bool UPoly::is_constant() const { return c_.size() <= 1; }

/// r with r^p = a when a is a p-th power in its tower.
std::optional<FieldElem> pth_root(const FieldElem& a);
/// r with r^n = a when such an r exists in the tower.
std::optional<FieldElem> nth_root(const FieldElem& a, std::uint64_t n);
/// Coordinates (c_b) with a = sum c_b^p * basis_b over a fixed p-basis.
std::vector<FieldElem> frobenius_coords(const FieldElem& a);
/// The fixed p-basis used by frobenius_coords.
std::vector<FieldElem> p_basis(const FieldTower& k);

/// Square-free decomposition: factors paired with multiplicity.
std::vector<std::pair<UPoly, int>> univar_squarefree(const UPoly& g);
/// Irreducible factorization into monic factors with multiplicity.
std::vector<std::pair<UPoly, int>> univar_factor(const UPoly& g);
bool is_irreducible(const UPoly& g);
/// Roots in the coefficient tower (one per distinct linear factor).
std::vector<FieldElem> roots(const UPoly& g);
/// Determinant of a square matrix over k[x], fraction-free.
UPoly det_polymatrix(std::vector<std::vector<UPoly>> m);
/// Res_y(a, b) for a, b in k[x][y] given as coefficient lists in y.
UPoly resultant_y(const std::vector<UPoly>& a, const std::vector<UPoly>& b);
/// Norm of h in L[x] down to K[x], L = K[theta]/(minpoly).
UPoly norm_down(const UPoly& h);

}  // namespace wbu
