#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wbu/job.hpp"

namespace {

int usage_error(const std::string& where, const wbu::ParseError& e) {
  std::string msg = e.what();
  if (const auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
  std::cerr << where << ":" << e.line() << ":" << e.column() << ": error: " << msg << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolution of plane curve singularities by weighted blow-ups"};
  std::string job_file;
  std::string inline_job;
  std::string out_dir = ".";
  bool dry = false;
  bool print_job = false;
  app.add_option("job", job_file, "Job file ('-' reads standard input)");
  auto* eval = app.add_option("-e,--eval", inline_job, "Job text given inline");
  app.add_option("-o,--out-dir", out_dir, "Directory for written artifacts");
  app.add_flag("-n,--no-files", dry, "Print the summary only");
  app.add_flag("--print", print_job, "Print the canonical job and exit");
  app.footer("Exit status: 0 success, 1 usage error, 2 certified failure.");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (job_file.empty() == (eval->count() == 0)) {
    std::cerr << "error: give exactly one of a job file or --eval\n";
    return 1;
  }

  std::string text = inline_job;
  std::string where = "<eval>";
  if (!job_file.empty()) {
    where = job_file;
    if (job_file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(job_file, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read " << job_file << "\n";
        return 1;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
  }

  wbu::JobSpec job;
  try {
    job = wbu::parse_job(text);
  } catch (const wbu::ParseError& e) {
    return usage_error(where, e);
  }
  if (print_job) {
    std::cout << job.print();
    return 0;
  }
  wbu::RunOptions opts;
  opts.out_dir = out_dir;
  opts.write_files = !dry;
  const wbu::RunResult r = wbu::run_job(job, opts);
  std::cout << r.summary;
  for (const auto& f : r.files) std::cout << "wrote: " << f.string() << "\n";
  return r.exit_code;
}
