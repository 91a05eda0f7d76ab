#include "wbu/job.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wbu/oracle.hpp"
#include "wbu/render.hpp"

namespace wbu {

namespace {

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"invariant", Command::Invariant}, {"polyhedron", Command::Polyhedron}, {"center", Command::Center},
      {"blowup", Command::Blowup},       {"resolve", Command::Resolve},       {"verify", Command::Verify},
      {"render", Command::Render}};
  return table;
}

const std::set<std::string> kFormats{"svg", "ascii", "json"};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

class JobLexer {
 public:
  explicit JobLexer(const std::string& s) : s_(s) {}

  void skip() {
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
      if (i_ < s_.size() && s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
        continue;
      }
      return;
    }
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  SourcePos pos() {
    skip();
    return {line_, col_};
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) fail("expected " + what);
  }
  std::string identifier() {
    skip();
    if (i_ >= s_.size() || !ident_start(static_cast<unsigned char>(s_[i_]))) fail("expected an identifier");
    std::string out;
    while (i_ < s_.size() && ident_char(static_cast<unsigned char>(s_[i_]))) {
      out += s_[i_];
      advance();
    }
    return out;
  }
  std::string quoted() {
    expect('"', "a quoted string");
    std::string out;
    while (i_ < s_.size() && s_[i_] != '"' && s_[i_] != '\n') {
      out += s_[i_];
      advance();
    }
    if (i_ >= s_.size() || s_[i_] != '"') fail("unterminated string");
    advance();
    return out;
  }
  /// Raw text up to the next ';' outside brackets; the ';' is consumed.
  std::pair<std::string, SourcePos> until_semicolon(const std::string& what) {
    const SourcePos start = pos();
    std::string out;
    int depth = 0;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == ';' && depth == 0) break;
      if (c == '#') break;
      if (c == '(' || c == '[') ++depth;
      if ((c == ')' || c == ']') && depth > 0) --depth;
      out += c;
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) throw ParseError("expected " + what, start.line, start.column);
    expect(';', "';'");
    return {out, start};
  }
  [[noreturn]] void fail(const std::string& msg) {
    const SourcePos p = pos();
    throw ParseError(msg, p.line, p.column);
  }

 private:
  void advance() {
    const auto c = static_cast<unsigned char>(s_[i_]);
    ++i_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++col_;
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Moves an error inside a fragment to the position of the whole job.
ParseError relocate(const ParseError& e, SourcePos start) {
  std::string msg = e.what();
  if (const auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
  if (e.line() == 1) return ParseError(msg, start.line, start.column + e.column() - 1);
  return ParseError(msg, start.line + e.line() - 1, e.column());
}

std::vector<std::string> identifier_list(JobLexer& lx) {
  std::vector<std::string> out{lx.identifier()};
  while (lx.accept(',')) out.push_back(lx.identifier());
  lx.expect(';', "';'");
  return out;
}

// Names usable without a vars statement: x, y and x followed by digits.
bool implicit_variable(const std::string& v) {
  if (v == "x" || v == "y") return true;
  return v.size() > 1 && v[0] == 'x' &&
         std::all_of(v.begin() + 1, v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_table())
    if (cmd == c) return name;
  return {};
}

bool operator==(const JobSpec& a, const JobSpec& b) {
  return a.field == b.field && a.invert == b.invert && a.variables == b.variables &&
         a.polynomial == b.polynomial && a.command == b.command && a.all_points == b.all_points &&
         a.formats == b.formats && a.output == b.output;
}

std::string JobSpec::print() const {
  std::ostringstream os;
  os << "field " << field << ";\n";
  if (!invert.empty()) os << "invert " << join(invert, ", ") << ";\n";
  if (!variables.empty()) os << "vars " << join(variables, ", ") << ";\n";
  os << "f = " << polynomial << ";\n";
  if (!output.empty()) os << "output \"" << output << "\";\n";
  os << command_name(command);
  if (all_points) os << " all";
  if (!formats.empty()) os << ' ' << join(formats, ", ");
  os << ";\n";
  return os.str();
}

JobSpec parse_job(const std::string& text) {
  JobSpec job;
  JobLexer lx(text);
  std::set<std::string> seen;
  while (!lx.done()) {
    const SourcePos at = lx.pos();
    const std::string word = lx.identifier();
    if (command_table().count(word)) {
      if (seen.count("command")) throw ParseError("more than one command", at.line, at.column);
      seen.insert("command");
      job.command = command_table().at(word);
      job.pos.command = at;
      if (job.command == Command::Resolve && lx.peek() != ';') {
        const SourcePos ap = lx.pos();
        if (lx.identifier() != "all") throw ParseError("expected 'all' or ';'", ap.line, ap.column);
        job.all_points = true;
      } else if (job.command == Command::Render && lx.peek() != ';') {
        for (;;) {
          const SourcePos fp = lx.pos();
          std::string fmt = lx.identifier();
          if (!kFormats.count(fmt)) throw ParseError("unknown format '" + fmt + "'", fp.line, fp.column);
          job.formats.push_back(fmt);
          if (!lx.accept(',')) break;
        }
      }
      lx.expect(';', "';'");
      continue;
    }
    if (word != "field" && word != "invert" && word != "vars" && word != "f" && word != "output")
      throw ParseError("unknown statement '" + word + "'", at.line, at.column);
    if (!seen.insert(word).second) throw ParseError("duplicate '" + word + "' statement", at.line, at.column);
    if (word == "field") {
      auto [desc, p] = lx.until_semicolon("a field descriptor");
      job.field = desc;
      job.pos.field = p;
    } else if (word == "invert") {
      job.pos.invert = lx.pos();
      job.invert = identifier_list(lx);
    } else if (word == "vars") {
      job.pos.variables = lx.pos();
      job.variables = identifier_list(lx);
    } else if (word == "f") {
      lx.expect('=', "'='");
      auto [expr, p] = lx.until_semicolon("a polynomial");
      job.polynomial = expr;
      job.pos.polynomial = p;
    } else {
      job.output = lx.quoted();
      lx.expect(';', "';'");
    }
  }
  const SourcePos end = lx.pos();
  if (!seen.count("f")) throw ParseError("missing 'f = ...;' statement", end.line, end.column);
  if (!seen.count("command")) throw ParseError("missing command", end.line, end.column);
  job_polynomial(job);  // validates field, identifiers and variable use
  return job;
}

Poly job_polynomial(const JobSpec& job) {
  FieldTower k;
  try {
    k = parse_field(job.field);
  } catch (const ParseError& e) {
    throw relocate(e, job.pos.field);
  }
  auto fail = [](const std::string& msg, SourcePos p) { throw ParseError(msg, p.line, p.column); };
  const std::vector<std::string> used = free_identifiers(job.polynomial, k);
  auto uses = [&](const std::string& v) { return std::find(used.begin(), used.end(), v) != used.end(); };
  std::set<std::string> distinct;
  for (const auto& v : job.invert) {
    if (k.named_generator(v)) fail("'" + v + "' is already a field generator", job.pos.invert);
    if (!uses(v)) fail("inverted variable '" + v + "' does not occur in f", job.pos.invert);
    if (!distinct.insert(v).second) fail("'" + v + "' listed twice", job.pos.invert);
  }
  std::vector<std::string> vars;
  if (!job.variables.empty()) {
    for (const auto& v : job.variables) {
      if (k.named_generator(v)) fail("'" + v + "' is already a field generator", job.pos.variables);
      if (!distinct.insert(v).second) fail("'" + v + "' listed twice", job.pos.variables);
    }
    vars = job.variables;
  } else {
    for (const auto& v : used) {
      if (std::find(job.invert.begin(), job.invert.end(), v) != job.invert.end()) continue;
      if (!implicit_variable(v))
        fail("unknown identifier '" + v + "' (declare it with vars or invert)", job.pos.polynomial);
      vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end(), [](const std::string& a, const std::string& b) {
      if ((a == "y") != (b == "y")) return b == "y";
      return a < b;
    });
  }
  if (job.variables.empty() && vars.size() < 2 && (vars.empty() || vars.back() == "y"))
    vars.insert(vars.begin(), "x");  // a curve in y alone still lives in the plane
  if (vars.size() < 2) fail("a plane model needs at least two variables", job.pos.polynomial);
  std::vector<std::string> all = vars;
  all.insert(all.end(), job.invert.begin(), job.invert.end());
  Poly f;
  try {
    f = parse_poly(job.polynomial, k, all);
  } catch (const ParseError& e) {
    throw relocate(e, job.pos.polynomial);
  }
  if (f.is_zero()) fail("f is zero", job.pos.polynomial);
  for (const auto& v : job.invert) {
    try {
      f = absorb_variable(f, v);
    } catch (const std::exception& e) {
      fail(e.what(), job.pos.invert);
    }
  }
  return f;
}

namespace {

struct Runner {
  const JobSpec& job;
  const RunOptions& opts;
  RunResult out;
  std::ostringstream log;

  std::string stem() const { return job.output.empty() ? "wbu" : job.output; }

  void write(const std::string& suffix, const std::string& content) {
    if (!opts.write_files) return;
    const std::filesystem::path p = opts.out_dir / (stem() + suffix);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    os << content;
    out.files.push_back(p);
  }

  void header(const Poly& f) {
    log << "field: " << f.field().descriptor() << "\n";
    log << "variables: " << join(f.vars(), ", ") << "\n";
    log << "f: " << f.str() << "\n";
  }

  // Returns false and reports when the model is quasi-regular.
  bool singular(const LocalModel& m) {
    if (quasiregular_check(m)) {
      log << "verdict: quasi-regular\n";
      return false;
    }
    return true;
  }

  void invariant_cmd(const LocalModel& m) {
    if (!singular(m)) return;
    const CharPolyResult r = characterize(m);
    log << "order: " << r.nu << "\n";
    log << "delta: " << (r.delta ? r.delta->get_str() : "infinity") << "\n";
    log << "invariant: " << invariant_of(r).str() << "\n";
    if (r.directrix_zero) log << "directrix: zero\n";
  }

  void polyhedron_cmd(const LocalModel& m) {
    if (!singular(m)) return;
    const CharPolyResult r = characterize(m);
    if (r.directrix_zero) {
      log << "directrix: zero; the initial form is no power of a linear form\n";
    } else {
      const ProjPolyhedron& first = r.history.empty() ? r.polyhedron : r.history.front();
      log << "initial vertices:";
      for (const auto& v : first.vertices) log << ' ' << point_str(v);
      log << "\n";
      for (std::size_t i = 0; i < r.solved.size(); ++i) log << "solved vertex: " << point_str(r.solved[i]) << "\n";
      for (const auto& s : r.model.log) log << "change: " << s.str(r.model.f.vars()) << "\n";
      log << "final vertices:";
      for (const auto& v : r.polyhedron.vertices) log << ' ' << point_str(v);
      log << "\n";
    }
    log << "delta: " << (r.delta ? r.delta->get_str() : "infinity") << "\n";
    write(".polyhedron.json", polyhedron_json(r).dump(2) + "\n");
  }

  std::optional<std::pair<CharPolyResult, Center>> center_of(const LocalModel& m) {
    if (!singular(m)) return std::nullopt;
    CharPolyResult r = characterize(m);
    Center j = center_from_invariant(r);
    return std::make_pair(std::move(r), j);
  }

  void center_cmd(const LocalModel& m) {
    auto c = center_of(m);
    if (!c) return;
    const auto& [r, j] = *c;
    const ReducedCenter rc = reduce_center(j);
    for (const auto& s : r.model.log) log << "change: " << s.str(r.model.f.vars()) << "\n";
    log << "center: " << j.str(r.model.f.vars()) << "\n";
    log << "weights: (" << rc.w1 << "," << rc.w2 << ")\n";
    log << "ell: " << rc.ell << "\n";
  }

  void blowup_cmd(const LocalModel& m) {
    auto c = center_of(m);
    if (!c) return;
    const auto& [r, j] = *c;
    const ReducedCenter rc = reduce_center(j);
    const BPlusChart chart = rees_chart(r.model.f.vars(), j, rc);
    const ProperTransform t = proper_transform(r.model.f, j, chart);
    const IdentityReport id = check_identities(r.model.f, j, chart, t);
    const StabilizerReport st = stabilizers(chart);
    log << "center: " << j.str(r.model.f.vars()) << "\n";
    log << "chart: " << join(chart.vars, ", ") << " with weights (";
    for (std::size_t i = 0; i < chart.weights.size(); ++i) log << (i ? "," : "") << chart.weights[i];
    log << ")\n";
    log << "transform: " << t.f_prime.str() << "\n";
    log << "leading: " << t.leading.str() << "\n";
    log << "rest: " << t.rest.str() << "\n";
    log << "stabilizers: mu_" << st.first_axis << " at " << chart.vars[chart.x1] << "=0, mu_" << st.second_axis
        << " at " << chart.vars[chart.x2] << "=0\n";
    for (const auto& o : exceptional_orbits(t, chart)) log << "orbit: " << o.str(chart) << "\n";
    log << "identities: " << (id.all() ? "hold" : "FAIL") << "\n";
    if (!id.all()) out.exit_code = 2;
  }

  ResolutionTree tree_of(const Poly& f) {
    return job.all_points ? resolve_curve(f) : resolve(LocalModel(f));
  }

  void tree_summary(const ResolutionTree& t) {
    log << "roots: " << t.roots.size() << "\n";
    log << "nodes: " << t.nodes.size() << "\n";
    log << "max depth: " << t.max_depth << "\n";
    for (const auto& n : t.nodes) {
      log << "node " << n.id << " depth " << n.depth << " at " << n.orbit.str() << ": ";
      switch (n.verdict) {
        case ResolutionNode::Verdict::Regular:
          log << "regular";
          break;
        case ResolutionNode::Verdict::QuasiRegular:
          log << "quasi-regular";
          break;
        case ResolutionNode::Verdict::BlownUp:
          log << "invariant " << n.invariant->str() << ", center " << n.center << ", weights (" << n.rc.w1 << ","
              << n.rc.w2 << ")";
          break;
      }
      log << "\n";
    }
  }

  nlohmann::json certificates(const ResolutionTree& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& n : t.nodes) {
      if (n.verdict != ResolutionNode::Verdict::BlownUp) continue;
      nlohmann::json e;
      e["node"] = n.id;
      e["children"] = n.children;
      e["bound"] = n.certificate.bound;
      e["degree_accounting"] = n.certificate.degree_accounting;
      e["holds"] = n.certificate.holds;
      e["points"] = nlohmann::json::array();
      for (const auto& p : n.certificate.points)
        e["points"].push_back({{"orbit", p.orbit},
                               {"residue_field", p.residue_field},
                               {"coordinates", p.coordinates},
                               {"order", p.order}});
      arr.push_back(e);
    }
    return {{"schema", "wbu.certificates/1"}, {"edges", arr}};
  }

  void resolve_cmd(const Poly& f) {
    const ResolutionTree t = tree_of(f);
    tree_summary(t);
    const bool ok = t.certified();
    log << "certified: " << (ok ? "yes" : "no") << "\n";
    write(".tree.json", t.to_json().dump(2) + "\n");
    write(".tree.dot", t.to_dot());
    write(".certificates.json", certificates(t).dump(2) + "\n");
    if (!ok) out.exit_code = 2;
  }

  void verify_cmd(const Poly& f) {
    const ResolutionTree t = tree_of(f);
    int failures = 0;
    for (const auto& n : t.nodes) {
      if (n.verdict != ResolutionNode::Verdict::BlownUp) continue;
      const OrderCertificate c = verify_order_drop(n);
      const bool ident = n.identities.all();
      bool descent = true;
      for (int ch : n.children) {
        const auto& child = t.nodes[static_cast<std::size_t>(ch)];
        if (child.invariant && !(*child.invariant < *n.invariant)) descent = false;
      }
      std::string oracle = "skipped";
      if (n.model.f.arity() == 2) {
        const auto rec = agreement_record(n.model, default_budget(n.model.tower()));
        oracle = rec["agree"].get<bool>() ? "agrees" : "DISAGREES " + rec["bruteforce"].get<std::string>();
        if (!rec["agree"].get<bool>()) ++failures;
      }
      log << "node " << n.id << ": order drop " << (c.holds ? "ok" : "FAIL") << ", identities "
          << (ident ? "ok" : "FAIL") << ", descent " << (descent ? "ok" : "FAIL") << ", oracle " << oracle << "\n";
      failures += !c.holds + !ident + !descent;
    }
    const bool ok = failures == 0 && t.certified();
    log << "verified: " << (ok ? "yes" : "no") << "\n";
    if (!ok) out.exit_code = 2;
  }

  void render_cmd(const LocalModel& m) {
    if (!singular(m)) return;
    const CharPolyResult r = characterize(m);
    std::vector<std::string> formats = job.formats;
    if (formats.empty()) formats = {"svg", "ascii"};
    if (r.polyhedron.dim > 2 || r.directrix_zero) {
      log << "notice: no picture for this polyhedron; writing JSON\n";
      write(".polyhedron.json", polyhedron_json(r).dump(2) + "\n");
      return;
    }
    std::optional<ProjPolyhedron> before;
    if (!r.history.empty()) before = r.history.front();
    for (const auto& fmt : formats) {
      if (fmt == "svg") write(".polyhedron.svg", polyhedron_svg(r.polyhedron, before));
      if (fmt == "ascii") {
        const std::string art = polyhedron_ascii(r.polyhedron);
        log << art;
        write(".polyhedron.txt", art);
      }
      if (fmt == "json") write(".polyhedron.json", polyhedron_json(r).dump(2) + "\n");
    }
  }

  void run() {
    const Poly f = job_polynomial(job);
    header(f);
    log << "command: " << command_name(job.command) << "\n";
    const LocalModel m(f);
    switch (job.command) {
      case Command::Invariant:
        invariant_cmd(m);
        break;
      case Command::Polyhedron:
        polyhedron_cmd(m);
        break;
      case Command::Center:
        center_cmd(m);
        break;
      case Command::Blowup:
        blowup_cmd(m);
        break;
      case Command::Resolve:
        resolve_cmd(f);
        break;
      case Command::Verify:
        verify_cmd(f);
        break;
      case Command::Render:
        render_cmd(m);
        break;
    }
  }
};

}  // namespace

RunResult run_job(const JobSpec& job, const RunOptions& opts) {
  Runner r{job, opts, {}, {}};
  try {
    r.run();
  } catch (const ParseError& e) {
    r.log << "error: " << e.what() << "\n";
    r.out.exit_code = 1;
  } catch (const std::exception& e) {
    r.log << "failure: " << e.what() << "\n";
    r.out.exit_code = 2;
  }
  r.out.summary = r.log.str();
  return r.out;
}

}  // namespace wbu
