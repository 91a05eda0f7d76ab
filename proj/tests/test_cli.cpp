#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "wbu/job.hpp"

using namespace wbu;

namespace {

SourcePos error_at(const std::string& text) {
  try {
    parse_job(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no error for: " << text);
  return {};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("job grammar") {
  JobSpec a = parse_job("field GF(2); invert z; f = y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y; resolve;");
  CHECK(a.command == Command::Resolve);
  CHECK(a.invert == std::vector<std::string>{"z"});
  Poly fa = job_polynomial(a);
  CHECK(fa.field().descriptor() == "GF(2)(z)");
  CHECK(fa.vars() == std::vector<std::string>{"x", "y"});

  JobSpec cusp = parse_job("field QQ;\nf = y^2 - x^3;\nresolve;\n");
  CHECK(job_polynomial(cusp).str() == "-x^3+y^2");

  JobSpec r = parse_job("# comment\nf = y^2 + t*x^6; field GF(2)(t); render svg, json; output \"out/a\";");
  CHECK(r.formats == std::vector<std::string>{"svg", "json"});
  CHECK(r.output == "out/a");
  CHECK(parse_job("f = x1*x2 + y^2; resolve all;").all_points);

  JobSpec v = parse_job("field GF(3); vars u, w; f = w^2 - u^3; center;");
  CHECK(job_polynomial(v).vars() == std::vector<std::string>{"u", "w"});
  CHECK(job_polynomial(parse_job("f = y^2; invariant;")).vars() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("positioned errors") {
  auto at = [](const std::string& t, int line, int col) {
    const SourcePos p = error_at(t);
    INFO(t);
    CHECK(p.line == line);
    CHECK(p.column == col);
  };
  at("", 1, 1);
  at("   \n  # nothing\n", 3, 1);
  at("f = y^2 - x^3;", 1, 15);                      // missing command
  at("field QQ; f = y^2 - q*x^3; resolve;", 1, 15);  // unknown identifier
  at("field QQ;\nf = y^2 -\n  x^3 +; resolve;", 3, 8);
  at("field GF(4); f = y^2; resolve;", 1, 10);
  at("field QQ; f = y^2; frobnicate;", 1, 20);
  at("field QQ; f = y^2; resolve; center;", 1, 29);
  at("f = y^2; f = x; resolve;", 1, 10);
  at("invert z; f = y^2 - x^3; resolve;", 1, 8);     // z does not occur
  at("field GF(2)(t); invert z; f = z*y^2 - x^3; resolve;", 1, 24);  // second transcendental
  at("vars x, y; f = y^2 - x^3*w; resolve;", 1, 26);
  at("vars x, x; f = y^2; resolve;", 1, 6);
  at("f = y^2; render png;", 1, 17);
  at("f = y^2 / x; resolve;", 1, 9);
}

TEST_CASE("canonical job text round-trips") {
  for (const char* t : {"field GF(2); invert z; f = y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y; resolve;",
                        "f = y^2 - x^3; resolve all;",
                        "field GF(2)(t)[θ]/(θ^2+t); vars x1, x2, y; f = y^2 + θ^3*x1^7 + x1*x2^6; render ascii, svg;",
                        "field QQ; f = y^2 - x^3; output \"dir/stem\"; verify;"}) {
    const JobSpec j = parse_job(t);
    CHECK(parse_job(j.print()) == j);
    CHECK(parse_job(j.print()).print() == j.print());
  }
}

TEST_CASE("running jobs") {
  RunOptions quiet;
  quiet.write_files = false;

  RunResult cusp = run_job(parse_job("field QQ; f = y^2 - x^3; resolve;"), quiet);
  CHECK(cusp.exit_code == 0);
  CHECK(contains(cusp.summary, "max depth: 1"));
  CHECK(contains(cusp.summary, "certified: yes"));

  RunResult line = run_job(parse_job("f = y^2; resolve;"), quiet);
  CHECK(line.exit_code == 0);
  CHECK(contains(line.summary, "quasi-regular"));
  CHECK(contains(line.summary, "max depth: 0"));

  RunResult a = run_job(parse_job("field GF(2); invert z; f = y^4 + x^3*y^2*z^5 + x^6*z^3 + x^5*y; blowup;"), quiet);
  CHECK(a.exit_code == 0);
  CHECK(contains(a.summary, "center: (y^4, x^6)"));
  CHECK(contains(a.summary, "transform: s*x'^5*y'+z^3*x'^6+z^5*x'^3*y'^2+y'^4"));
  CHECK(contains(a.summary, "identities: hold"));

  RunResult hidden = run_job(parse_job("field GF(2); f = y^2 + x^4 + x^5; invariant;"), quiet);
  CHECK(contains(hidden.summary, "invariant: (2,5)"));

  RunResult v = run_job(parse_job("f = (y^2 - x^3)^2 - x^7; verify;"), quiet);
  CHECK(v.exit_code == 0);
  CHECK(contains(v.summary, "verified: yes"));

  // Unsupported inputs are failures of the engine, not of the job.
  RunResult u = run_job(parse_job("field GF(2)(t); f = y^2 + (x^2 + t)^3; resolve all;"), quiet);
  CHECK(u.exit_code == 2);
}

TEST_CASE("artifacts on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "wbu_cli_test";
  std::filesystem::remove_all(dir);
  RunOptions opts;
  opts.out_dir = dir;

  RunResult r = run_job(parse_job("field QQ; f = y^2 - x^3; output \"cusp\"; resolve;"), opts);
  REQUIRE(r.exit_code == 0);
  CHECK(r.files.size() == 3);
  for (const char* ext : {".tree.json", ".tree.dot", ".certificates.json"})
    CHECK(std::filesystem::exists(dir / (std::string("cusp") + ext)));

  RunResult b = run_job(
      parse_job("field GF(2)(t); vars x1, x2, y; f = y^2 - x1^3*(x1^2 + t)^7 - t*x2^6; render svg;"), opts);
  REQUIRE(b.exit_code == 0);
  std::ifstream in(dir / "wbu.polyhedron.svg");
  const std::string svg((std::istreambuf_iterator<char>(in)), {});
  CHECK(contains(svg, "<svg"));
  CHECK(contains(svg, "(3/2,0)"));
  CHECK(contains(svg, "(0,3)"));
  std::filesystem::remove_all(dir);
}
