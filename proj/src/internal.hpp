#pragma once

#include <optional>
#include <vector>

#include "wbu/field.hpp"

namespace wbu::detail {

/// One solution of rows * x = rhs over a field, free variables set to zero.
inline std::optional<std::vector<FieldElem>> solve_linear(
    const FieldTower& k, std::vector<std::vector<FieldElem>> rows,
    std::vector<FieldElem> rhs, std::size_t nvars) {
  const std::size_t neq = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < neq; ++c) {
    std::size_t piv = r;
    while (piv < neq && rows[piv][c].is_zero()) ++piv;
    if (piv == neq) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    const FieldElem inv = rows[r][c].inv();
    for (std::size_t j = c; j < nvars; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < neq; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElem f = rows[i][c];
      for (std::size_t j = c; j < nvars; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < neq; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<FieldElem> x(nvars, k.zero());
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

/// Element of a transcendental level k from a polynomial over its parent.
inline FieldElem poly_to_elem(const FieldTower& k, const UPoly& poly) {
  const FieldElem t = k.generator();
  FieldElem acc = k.zero();
  for (std::size_t i = poly.coeffs().size(); i-- > 0;)
    acc = acc * t + k.embed(poly.coeffs()[i]);
  return acc;
}

/// Transcendental generator of a tower, embedded at the top.
inline std::optional<FieldElem> transcendental_generator(const FieldTower& k) {
  for (FieldTower lv = k; !lv.is_base(); lv = lv.parent())
    if (lv.kind() == FieldTower::Kind::Transcendental) return k.embed(lv.generator());
  return std::nullopt;
}

}  // namespace wbu::detail
