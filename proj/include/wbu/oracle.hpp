#pragma once

// Brute-force cross-checks: maximal admissible center by exhaustive
// coordinate search, orders by direct Taylor expansion, and base change.

#include <random>

#include <json.hpp>

#include "wbu/wblowup.hpp"

namespace wbu {

struct SearchBudget {
  int max_vertex = 3;              // y -> y + sum_{v <= max_vertex} c_v x^v
  std::vector<FieldElem> probes;   // coefficient candidates c_v
};

/// Default probe set for a tower: all of GF(p) for p <= 5, small rationals,
/// and a few low-degree elements of function fields and extensions.
std::vector<FieldElem> default_probes(const FieldTower& k);
SearchBudget default_budget(const FieldTower& k, int max_vertex = 3);

struct MaxCenter {
  int b1 = 0;
  mpq_class b2 = 0;
  bool swapped = false;
  std::vector<FieldElem> shift;  // c_1..c_V of the winning change
  std::string witness;           // printable coordinate change
  bool certified = false;        // the winner has no solvable vertex left
  std::string note;
  std::size_t candidates = 0;
};

/// Lexicographically largest (b1, b2) with (y~^b1, x~^b2) admissible over the
/// searched coordinate changes.
MaxCenter bruteforce_max_center(const LocalModel& m, const SearchBudget& budget);

/// Order of g at a point by binomial expansion of every term.
int independent_order(const Poly& g, const std::vector<FieldElem>& point);

struct BaseChangeReport {
  enum class Verdict { Stable, ExpectedChange, Violation };
  bool separable = true;
  std::string extension;
  std::string before;  // invariant or "quasi-regular"
  std::string after;
  bool invariant_equal = false;
  bool center_equal = false;
  Verdict verdict = Verdict::Violation;
  std::string verdict_str() const;
};

/// Recomputes invariant and center over K[θ]/(ext); an inseparable ext is
/// allowed and a change there is reported as expected.
BaseChangeReport basechange_report(const LocalModel& m, const UPoly& ext, const std::string& name);
/// Same, but rejects inseparable extensions.
BaseChangeReport separable_basechange_check(const LocalModel& m, const UPoly& ext, const std::string& name);

struct InstanceOptions {
  int max_degree = 8;
  int max_nu = 3;
  int max_shift_degree = 2;
  int extra_terms = 3;
};

/// f = g(x, y + s(x)) with g = y^nu + random terms and s drawn from the
/// probe set, so that dissolution is exercised; never quasi-regular.
LocalModel random_instance(const FieldTower& k, std::mt19937_64& rng, const InstanceOptions& opts = {});

/// Engine invariant against the brute-force search, one record per instance.
nlohmann::json agreement_record(const LocalModel& m, const SearchBudget& budget);

}  // namespace wbu
