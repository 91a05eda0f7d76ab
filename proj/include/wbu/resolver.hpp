#pragma once

// Iterated weighted blow-ups of a plane curve: singular points and orbits,
// localization to local models, equivariant centers, the resolution tree and
// its order-drop certificates.

#include <json.hpp>

#include "wbu/wblowup.hpp"

namespace wbu {

/// One factor of the acting torus: a 𝔾m (order 0) or a finite μ_n.
struct TorusFactor {
  int order = 0;
  std::vector<int> weights;  // one per chart variable
};

struct AmbientChart {
  FieldTower tower;
  std::vector<std::string> vars;
  std::vector<bool> invertible;
  std::vector<TorusFactor> torus;
  std::vector<std::size_t> exceptional;
  Poly transform;

  /// Character of a monomial under factor i (reduced mod the order for μ_n).
  int character(std::size_t factor, const Exponent& e) const;
  /// Every term of the transform has the same character under every factor.
  bool semi_invariant() const;
};

/// Where a local model sits: the input origin, a singular point of a global
/// curve, or a torus orbit on the exceptional divisor of the parent chart.
struct OrbitPoint {
  enum class Locus { Origin, Point, FirstAxis, SecondAxis, Generic };
  Locus locus = Locus::Origin;
  std::string description;
  std::optional<UPoly> residue_minpoly;
  int stabilizer = 1;  // order of μ_n at the orbit
  int log_order = 0;   // order of the restricted slice at a representative
  std::string str() const;
};

/// A closed point of the plane where the representative has been moved to the
/// origin: `model` lives over the residue field of the point.
struct LocalizedPoint {
  OrbitPoint orbit;
  LocalModel model;
  std::vector<int> residual_weights;  // μ_n weights of the model variables
};

/// Turns an invertible variable into a transcendental field generator.
Poly absorb_variable(const Poly& f, const std::string& name);

/// Local model at the closed point {g(x_var) = 0, other variables 0}. For a
/// separable g this is a shift over K[θ]/(g); for an inseparable g whose
/// numerator is linear in the transcendental t the coefficient field is
/// rechosen so that t = t + u/A(θ) with u the new parameter.
LocalModel localize_point(const Poly& f, std::size_t var, const UPoly& g, const std::string& theta);

/// Closed points of a plane curve where the reduced curve is singular.
std::vector<LocalizedPoint> singular_points(const Poly& f);

/// Orbits of the exceptional divisor where the transform is singular, each
/// localized to a plane local model.
std::vector<LocalizedPoint> singular_orbits(const ProperTransform& t, const BPlusChart& chart,
                                            const std::string& sigma_name, const std::string& u_name);

/// Local model of the transform at one exceptional orbit.
LocalizedPoint localize_orbit(const ProperTransform& t, const BPlusChart& chart, const ExceptionalOrbit& o,
                              const std::string& sigma_name, const std::string& u_name);

/// Characters of the center parameters under a residual μ_n action on the
/// local model, tracked through the recorded coordinate changes.
struct EquivariantCenter {
  Center center;
  bool semi_invariant = true;
  std::string offending;          // the first change that breaks the character
  int first_character = 0;        // of x1 (maximal contact)
  int second_character = 0;       // of x2
};
EquivariantCenter equivariant_center(const CharPolyResult& r, const Center& j, int order,
                                     const std::vector<int>& residual_weights);

/// New chart after blowing up a local model along an equivariant center.
struct BlowupStep {
  BPlusChart chart;
  ProperTransform transform;
  AmbientChart ambient;
  IdentityReport identities;
};
BlowupStep blowup_step(const CharPolyResult& r, const EquivariantCenter& ec, int residual_order,
                       const std::string& s_name);

struct CertifiedPoint {
  std::string orbit;
  std::string residue_field;
  std::vector<std::string> coordinates;
  int order = 0;
};

struct OrderCertificate {
  int bound = 0;  // the parent a1
  std::vector<CertifiedPoint> points;
  bool degree_accounting = false;  // factor degrees add up to the slice degree
  bool holds = false;
};

struct ResolutionNode {
  enum class Verdict { Regular, QuasiRegular, BlownUp };
  int id = 0;
  int parent = -1;
  int depth = 0;
  OrbitPoint orbit;
  LocalModel model;
  std::vector<int> residual_weights;
  Verdict verdict = Verdict::Regular;
  std::optional<Invariant> invariant;
  std::vector<std::string> coordinate_changes;
  std::string center;
  ReducedCenter rc;
  EquivariantCenter equivariance;
  BPlusChart chart;
  ProperTransform transform;
  AmbientChart ambient;
  IdentityReport identities;
  OrderCertificate certificate;
  std::vector<OrbitPoint> regular_orbits;
  std::vector<int> children;
};

struct ResolutionTree {
  std::vector<ResolutionNode> nodes;
  std::vector<int> roots;
  int max_depth = 0;  // number of blow-ups on the longest path

  bool quasiregular_input() const;
  /// Every path strictly descends, every certificate holds, every leaf is regular.
  bool certified() const;
  nlohmann::json to_json() const;
  std::string to_dot() const;
};

struct ResolveOptions {
  int max_depth = 32;
  DissolveOptions dissolve;
};

ResolutionTree resolve(const LocalModel& m, const ResolveOptions& opts = {});
/// Resolves every singular point of a plane curve.
ResolutionTree resolve_curve(const Poly& f, const ResolveOptions& opts = {});

/// Recomputes the order-drop certificate of a blown-up node.
OrderCertificate verify_order_drop(const ResolutionNode& node);

}  // namespace wbu
