#pragma once

// Plain-text job files: `field GF(2); invert z; f = ...; resolve;`.

#include <filesystem>
#include <string>
#include <vector>

#include "wbu/parse.hpp"
#include "wbu/resolver.hpp"

namespace wbu {

enum class Command { Invariant, Polyhedron, Center, Blowup, Resolve, Verify, Render };

std::string command_name(Command c);

struct SourcePos {
  int line = 1;
  int column = 1;
};

struct JobSpec {
  std::string field = "QQ";
  std::vector<std::string> invert;     // variables absorbed into the field
  std::vector<std::string> variables;  // explicit order; y-variable last
  std::string polynomial;
  Command command = Command::Invariant;
  bool all_points = false;             // `resolve all;`: every singular point
  std::vector<std::string> formats;    // `render svg, ascii;`
  std::string output;                  // artifact stem, may include a directory

  struct Positions {
    SourcePos field, invert, variables, polynomial, command;
  } pos;  // not part of equality

  /// Canonical job text; parse_job(print()) == *this.
  std::string print() const;
};

bool operator==(const JobSpec& a, const JobSpec& b);

/// Parses a job; every error is a ParseError with a 1-based line and column.
JobSpec parse_job(const std::string& text);

/// The job's polynomial over its field, inverted variables absorbed and the
/// variables ordered (explicit order, else sorted with `y` last).
Poly job_polynomial(const JobSpec& job);

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 usage error, 2 certified failure
  std::string summary;
  std::vector<std::filesystem::path> files;
};

struct RunOptions {
  std::filesystem::path out_dir = ".";
  bool write_files = true;
};

/// Dispatches the command; never throws for engine failures.
RunResult run_job(const JobSpec& job, const RunOptions& opts = {});

}  // namespace wbu
