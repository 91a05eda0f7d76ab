#pragma once

// Projected and characteristic polyhedra, vertex solvability, dissolution,
// delta and the invariant (nu, delta*nu).

#include <optional>
#include <stdexcept>
#include <vector>

#include "wbu/mpoly.hpp"

namespace wbu {

/// The dissolution loop ran past its step budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs a singular (non quasi-regular) input got one.
class QuasiRegularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Point = std::vector<mpq_class>;

std::string point_str(const Point& p);

/// conv(generators + positive orthant) in Q^e.
struct ProjPolyhedron {
  std::size_t dim = 1;
  std::vector<Point> generators;
  std::vector<Point> vertices;  // lexicographically sorted

  bool empty() const { return generators.empty(); }
  /// Minimal coordinate sum; throws when empty.
  mpq_class delta() const;
  bool contains(const Point& p) const;
  /// Every vertex of `other` lies in this polyhedron.
  bool contains(const ProjPolyhedron& other) const;
};

ProjPolyhedron polyhedron_from_generators(std::size_t dim, std::vector<Point> generators);

struct VertexData {
  Point vertex;
  Poly initial_form;
  std::optional<FieldElem> lambda;
};

/// Either the model rewritten so that in_m(f) = y^nu, or the marker that
/// in_m(f) is no power of a linear form.
struct ContactResult {
  bool directrix_zero = false;
  LocalModel model;
};

ContactResult maximal_contact_prep(const LocalModel& m);
/// Requires a prepared model (in_m(f) = y^nu).
ProjPolyhedron build_polyhedron(const LocalModel& m);
VertexData initial_at_vertex(const LocalModel& m, const Point& v);
std::optional<FieldElem> vertex_solvable(const VertexData& vd, int nu);
bool quasiregular_check(const LocalModel& m);

struct CharPolyResult {
  LocalModel model;  // final coordinates with the full substitution log
  int nu = 0;
  ProjPolyhedron polyhedron;
  std::optional<mpq_class> delta;  // empty means infinity
  Poly f_delta;
  bool directrix_zero = false;
  bool quasiregular = false;
  std::vector<ProjPolyhedron> history;  // polyhedron before each dissolution
  std::vector<Point> solved;            // vertex solved at each step
};

struct DissolveOptions {
  std::optional<std::size_t> budget;  // default 4 * deg_x(f) * nu
  bool guard = true;                  // run quasiregular_check first
};

/// Solves solvable vertices of a prepared model until none remain.
CharPolyResult dissolve(const LocalModel& prepared, const DissolveOptions& opts = {});
/// Guard, preparation and dissolution in one pass.
CharPolyResult characterize(const LocalModel& m, const DissolveOptions& opts = {});
Poly delta_initial_lift(const LocalModel& m, const CharPolyResult& result);

struct Invariant {
  int a1 = 0;
  mpq_class a2 = 0;
  std::string str() const;
};
bool operator==(const Invariant& a, const Invariant& b);
bool operator<(const Invariant& a, const Invariant& b);

Invariant invariant(const LocalModel& m);
Invariant invariant_of(const CharPolyResult& r);

}  // namespace wbu
