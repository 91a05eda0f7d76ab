#pragma once

// Pictures and dumps of projected polyhedra in dimension 1 and 2.

#include <optional>
#include <string>

#include <json.hpp>

#include "wbu/charpoly.hpp"

namespace wbu {

/// SVG of the polyhedron with its vertices and the line of minimal
/// coordinate sum; `before` is outlined when given. Throws for e >= 3.
std::string polyhedron_svg(const ProjPolyhedron& p, const std::optional<ProjPolyhedron>& before = std::nullopt);

/// Character plot of the same picture, followed by the vertex list.
std::string polyhedron_ascii(const ProjPolyhedron& p);

/// Vertices, delta and the dissolution log of a characterization.
nlohmann::json polyhedron_json(const CharPolyResult& r);
nlohmann::json polyhedron_json(const ProjPolyhedron& p);

}  // namespace wbu
