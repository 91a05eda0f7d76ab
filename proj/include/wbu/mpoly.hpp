#pragma once

// Sparse multivariate polynomials, monomial valuations and local models.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wbu/field.hpp"

namespace wbu {

using Exponent = std::vector<int>;

/// Total degree first, then lexicographic in variable order.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Poly {
 public:
  using Terms = std::map<Exponent, FieldElem, GradedLex>;

  Poly() = default;
  Poly(FieldTower k, std::vector<std::string> vars);

  static Poly constant(FieldTower k, std::vector<std::string> vars, const FieldElem& c);
  static Poly variable(FieldTower k, std::vector<std::string> vars, std::size_t i);
  static Poly monomial(FieldTower k, std::vector<std::string> vars, Exponent e,
                       const FieldElem& c);

  const FieldTower& field() const { return k_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  std::optional<std::size_t> var_index(const std::string& name) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }
  FieldElem coeff(const Exponent& e) const;
  FieldElem constant_term() const;
  /// Leading term in graded-lex order.
  const std::pair<const Exponent, FieldElem>& leading() const;

  int total_degree() const;
  /// Minimal total degree of a term; throws on zero.
  int order() const;
  int degree_in(std::size_t i) const;
  int order_in(std::size_t i) const;
  bool involves(std::size_t i) const { return degree_in(i) > 0; }

  /// Builder: adds c * x^e in place.
  void add_term(const Exponent& e, const FieldElem& c);

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const FieldElem& c);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly pow(std::uint64_t n) const;

  Poly homogeneous_part(int degree) const;
  Poly select(const std::function<bool(const Exponent&)>& keep) const;
  Poly derivative(std::size_t i) const;
  /// Simultaneous substitution x_i -> images[i]; result lives in the images' ring.
  Poly substitute(const std::vector<Poly>& images) const;
  Poly substitute_var(std::size_t i, const Poly& value) const;
  Poly embed(const FieldTower& ext) const;
  /// Same polynomial over another variable list (matched by name).
  Poly with_vars(const std::vector<std::string>& vars) const;
  Poly multiply_monomial(const Exponent& e) const;
  /// Exact division by x^e; throws if some term is not divisible.
  Poly divide_monomial(const Exponent& e) const;
  /// Exact quotient if d divides this polynomial.
  std::optional<Poly> divide(const Poly& d) const;
  /// Divides by the leading coefficient.
  Poly monic() const;
  /// x_i -> x_i^p in every variable, and back.
  Poly inflate(std::uint64_t p) const;
  Poly deflate(std::uint64_t p) const;

  /// Coefficients in x_i, index = power, each free of x_i.
  std::vector<Poly> coefficients_in(std::size_t i) const;
  UPoly to_upoly(std::size_t i) const;
  static Poly from_upoly(const UPoly& u, std::vector<std::string> vars, std::size_t i);

  FieldElem eval(const std::vector<FieldElem>& point) const;
  /// g(x + point), coefficients moved to the point's tower.
  Poly taylor_shift(const std::vector<FieldElem>& point) const;

  /// Canonical print, graded-lex descending.
  std::string str() const;

 private:
  void check_same(const Poly& b) const;
  FieldTower k_;
  std::vector<std::string> vars_;
  Terms terms_;
};

Poly gcd(const Poly& a, const Poly& b);
/// Square-free part. Through imperfect steps the reduction of a
/// polynomial in x^p with non-p-th-power coefficients is approximate.
Poly radical(const Poly& f);

/// v(x_i1) = 1/a1, v(x_i2) = 1/a2.
struct MonomialValuation {
  std::size_t first = 0;
  std::size_t second = 1;
  mpq_class a1 = 1;
  mpq_class a2 = 1;
};

/// min over the support of i1/a1 + i2/a2; g may not involve other variables.
mpq_class v_J(const Poly& g, const MonomialValuation& j);
mpq_class v_J(const Exponent& e, const MonomialValuation& j);

/// One coordinate change y -> y + eps*x^v, a swap of y with x_i, or a
/// rescale of f by a unit.
struct Substitution {
  enum class Kind { Shift, Swap, Scale };
  Kind kind = Kind::Shift;
  Exponent v;
  FieldElem eps;
  std::size_t swap_with = 0;
  std::string str(const std::vector<std::string>& vars) const;
};

/// f in L[x_1..x_e, y] at the origin; y is the last variable.
struct LocalModel {
  Poly f;
  std::vector<Substitution> log;

  LocalModel() = default;
  explicit LocalModel(Poly poly);
  const FieldTower& tower() const { return f.field(); }
  std::size_t e() const { return f.arity() - 1; }
  std::size_t y_index() const { return f.arity() - 1; }
  /// Replays the recorded coordinate changes on another polynomial.
  Poly replay(const Poly& g) const;
};

int ord_at_origin(const LocalModel& m);
Poly initial_form_m(const LocalModel& m);
/// Rewrites f in y' with y = y' + eps*x^v.
LocalModel shift_substitute(const LocalModel& m, const Exponent& v, const FieldElem& eps);
/// Substitutes x_i -> s^{w_i} x_i'; result variables are (s, new names...).
Poly weighted_substitute(const Poly& g, const std::vector<int>& weights, const std::string& s_name,
                         const std::vector<std::string>& new_names);

}  // namespace wbu
