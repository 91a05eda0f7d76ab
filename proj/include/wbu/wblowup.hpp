#pragma once

// Weighted blow-up of a plane local model along J = (x1^a1, x2^a2):
// reduced centers, the Rees chart B+, proper transforms, stabilizers and
// orders on the exceptional divisor.

#include "wbu/charpoly.hpp"

namespace wbu {

/// J = (x1^a1, x2^a2); indices refer to the variables of the local model.
struct Center {
  std::size_t first = 1;   // x1, the maximal-contact parameter
  std::size_t second = 0;  // x2
  mpq_class a1 = 1;
  mpq_class a2 = 1;

  MonomialValuation valuation() const { return {first, second, a1, a2}; }
  std::string str(const std::vector<std::string>& vars) const;
};

struct ReducedCenter {
  int w1 = 1;
  int w2 = 1;
  int ell = 1;
};

/// Rees chart with variables (s, x1', x2') and torus weights (-1, w1, w2).
struct BPlusChart {
  std::vector<std::string> vars;  // s first, then the source order, primed
  std::size_t s = 0;
  std::size_t x1 = 0;
  std::size_t x2 = 0;
  std::vector<int> weights;  // one entry per variable
  ReducedCenter rc;
};

struct ProperTransform {
  Poly f_prime;  // in the chart variables
  int ell = 0;
  Poly leading;  // f_{J,1}(x'), free of s
  Poly rest;     // h', with f' = leading + s*rest
};

/// Center of the computed invariant in the final (dissolved) coordinates.
Center center_from_invariant(const CharPolyResult& r);
bool admissible(const Center& j, const Poly& f);
ReducedCenter reduce_center(const mpq_class& a1, const mpq_class& a2);
inline ReducedCenter reduce_center(const Center& j) { return reduce_center(j.a1, j.a2); }
/// f = f_{J,1} + h with v_J(f_{J,1}) = 1 termwise and v_J(h) > 1.
std::pair<Poly, Poly> split_leading(const Poly& f, const Center& j);

/// Chart variable names default to the source names with a prime appended.
BPlusChart rees_chart(const std::vector<std::string>& source_vars, const Center& j,
                      const ReducedCenter& rc, const std::string& s_name = "s",
                      std::vector<std::string> new_names = {});
ProperTransform proper_transform(const Poly& f, const Center& j, const BPlusChart& chart);

struct StabilizerReport {
  int first_axis = 1;   // order of the stabilizer at s = x1' = 0, i.e. w2
  int second_axis = 1;  // at s = x2' = 0, i.e. w1
  int generic = 1;      // gcd(w1, w2) elsewhere on the exceptional divisor
};
StabilizerReport stabilizers(const BPlusChart& chart);

/// Order of f' at a point (s, x1', x2') given in chart order; on {s = 0}
/// this is the order of f_{J,1}. Points on x1' = x2' = 0 are excluded.
int log_order(const ProperTransform& t, const BPlusChart& chart, const std::vector<FieldElem>& point);

/// A torus orbit on the exceptional divisor where f_{J,1} vanishes.
struct ExceptionalOrbit {
  enum class Kind { FirstAxis, SecondAxis, Generic };
  Kind kind = Kind::Generic;
  UPoly g;                            // generic orbits: factor of the dehomogenized slice
  int multiplicity = 1;
  FieldTower residue;                 // tower holding the representative point
  std::vector<FieldElem> point;       // representative in chart order, s = 0
  int order = 0;                      // log order at the representative
  std::string str(const BPlusChart& chart) const;
};

/// Dehomogenization of the quasi-homogeneous leading form in
/// u = x1'^w2 / x2'^w1, with the monomial factor exponents stripped.
struct Dehomogenized {
  UPoly g;
  int first_exp = 0;   // power of x1' dividing f_{J,1}
  int second_exp = 0;  // power of x2' dividing f_{J,1}
};
Dehomogenized dehomogenize(const Poly& leading, const BPlusChart& chart);

/// All orbits of the vanishing locus of f_{J,1} on the exceptional divisor,
/// with representative points and their log orders.
std::vector<ExceptionalOrbit> exceptional_orbits(const ProperTransform& t, const BPlusChart& chart);

/// The three slice identities of a blow-up.
struct IdentityReport {
  bool rees = false;      // s^ell f' = f(s^w1 x1', s^w2 x2')
  bool s_one = false;     // f'(1, x) = f(x)
  bool s_zero = false;    // f'|_{s=0} = f_{J,1}
  bool all() const { return rees && s_one && s_zero; }
};
IdentityReport check_identities(const Poly& f, const Center& j, const BPlusChart& chart,
                                const ProperTransform& t);

}  // namespace wbu
