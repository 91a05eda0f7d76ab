#include "wbu/render.hpp"

#include <algorithm>
#include <sstream>

namespace wbu {

namespace {

constexpr double kSize = 420;
constexpr double kMargin = 40;

double to_d(const mpq_class& q) { return q.get_d(); }

void require_planar(const ProjPolyhedron& p) {
  if (p.dim > 2) throw UnsupportedError("polyhedron pictures are drawn for e <= 2 only");
  if (p.empty()) throw FieldError("empty polyhedron (delta is infinite)");
}

// Upper end of both axes.
double extent(const ProjPolyhedron& p, const std::optional<ProjPolyhedron>& before) {
  double m = to_d(p.delta());
  auto grow = [&](const ProjPolyhedron& q) {
    for (const auto& v : q.vertices)
      for (const auto& c : v) m = std::max(m, to_d(c));
  };
  grow(p);
  if (before && !before->empty()) grow(*before);
  return m * 1.25 + 1;
}

// Boundary of vertices + orthant clipped to [0, top]^2, counterclockwise.
std::vector<std::pair<double, double>> outline(const ProjPolyhedron& p, double top) {
  std::vector<std::pair<double, double>> pts;
  const auto& vs = p.vertices;
  pts.emplace_back(to_d(vs.front()[0]), top);
  for (const auto& v : vs) pts.emplace_back(to_d(v[0]), to_d(v[1]));
  pts.emplace_back(top, to_d(vs.back()[1]));
  pts.emplace_back(top, top);
  return pts;
}

}  // namespace

std::string polyhedron_svg(const ProjPolyhedron& p, const std::optional<ProjPolyhedron>& before) {
  require_planar(p);
  const double top = extent(p, before);
  const double unit = (kSize - 2 * kMargin) / top;
  auto sx = [&](double x) { return kMargin + x * unit; };
  auto sy = [&](double y) { return kSize - kMargin - y * unit; };
  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(top) << "\" y2=\"" << sy(0)
     << "\" stroke=\"black\"/>\n";
  const mpq_class delta = p.delta();
  if (p.dim == 1) {
    const double d = to_d(delta);
    os << "<line x1=\"" << sx(d) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(top) << "\" y2=\"" << sy(0)
       << "\" stroke=\"steelblue\" stroke-width=\"6\"/>\n";
    os << "<circle cx=\"" << sx(d) << "\" cy=\"" << sy(0) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << sx(d) << "\" y=\"" << sy(0) - 10 << "\" font-size=\"12\">(" << delta.get_str()
       << ")</text>\n";
    os << "</svg>\n";
    return os.str();
  }
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(top)
     << "\" stroke=\"black\"/>\n";
  auto polygon = [&](const ProjPolyhedron& q, const char* style) {
    os << "<polygon points=\"";
    bool first = true;
    for (const auto& [x, y] : outline(q, top)) {
      os << (first ? "" : " ") << sx(x) << "," << sy(y);
      first = false;
    }
    os << "\" " << style << "/>\n";
  };
  polygon(p, "fill=\"lightsteelblue\" stroke=\"steelblue\"");
  if (before && !before->empty()) polygon(*before, "fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"");
  const double d = to_d(delta);
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(d) << "\" x2=\"" << sx(d) << "\" y2=\"" << sy(0)
     << "\" stroke=\"firebrick\" stroke-dasharray=\"6 3\"/>\n";
  os << "<text x=\"" << sx(d / 2) + 6 << "\" y=\"" << sy(d / 2) + 14 << "\" font-size=\"12\" fill=\"firebrick\">"
     << "delta=" << delta.get_str() << "</text>\n";
  for (const auto& v : p.vertices) {
    os << "<circle cx=\"" << sx(to_d(v[0])) << "\" cy=\"" << sy(to_d(v[1])) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << sx(to_d(v[0])) + 6 << "\" y=\"" << sy(to_d(v[1])) - 6 << "\" font-size=\"12\">"
       << point_str(v) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string polyhedron_ascii(const ProjPolyhedron& p) {
  require_planar(p);
  const double top = extent(p, std::nullopt);
  std::ostringstream os;
  const mpq_class delta = p.delta();
  if (p.dim == 1) {
    constexpr int width = 60;
    std::string line(width, '-');
    const int at = static_cast<int>(to_d(delta) / top * (width - 1));
    for (int i = at; i < width; ++i) line[static_cast<std::size_t>(i)] = '#';
    line[static_cast<std::size_t>(at)] = '*';
    os << line << "\n0" << std::string(static_cast<std::size_t>(std::max(at - 1, 0)), ' ') << "^ " << delta.get_str()
       << "\n";
  } else {
    constexpr int cols = 48, rows = 24;
    const double dx = top / cols, dy = top / rows;
    std::vector<std::string> grid(rows, std::string(cols, ' '));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        Point cell{mpq_class((c + 0.5) * dx), mpq_class((rows - r - 0.5) * dy)};
        if (p.contains(cell)) grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = '#';
      }
    for (const auto& v : p.vertices) {
      const int c = std::min(cols - 1, static_cast<int>(to_d(v[0]) / dx));
      const int r = std::clamp(rows - 1 - static_cast<int>(to_d(v[1]) / dy), 0, rows - 1);
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = '*';
    }
    for (const auto& row : grid) os << '|' << row << '\n';
    os << '+' << std::string(cols, '-') << '\n';
  }
  os << "vertices:";
  for (const auto& v : p.vertices) os << ' ' << point_str(v);
  os << "\ndelta: " << delta.get_str() << '\n';
  return os.str();
}

nlohmann::json polyhedron_json(const ProjPolyhedron& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : p.vertices) j["vertices"].push_back(point_str(v));
  j["delta"] = p.empty() ? "infinity" : p.delta().get_str();
  return j;
}

nlohmann::json polyhedron_json(const CharPolyResult& r) {
  nlohmann::json j;
  j["nu"] = r.nu;
  j["directrix_zero"] = r.directrix_zero;
  j["quasiregular"] = r.quasiregular;
  j["polyhedron"] = polyhedron_json(r.polyhedron);
  j["delta"] = r.delta ? r.delta->get_str() : "infinity";
  j["history"] = nlohmann::json::array();
  for (const auto& h : r.history) j["history"].push_back(polyhedron_json(h));
  j["solved"] = nlohmann::json::array();
  for (const auto& s : r.solved) j["solved"].push_back(point_str(s));
  j["log"] = nlohmann::json::array();
  for (const auto& s : r.model.log) j["log"].push_back(s.str(r.model.f.vars()));
  j["final"] = r.model.f.str();
  return j;
}

}  // namespace wbu
