#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qhopf/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hopf actions on quantum algebras: verification, classification and invariants"};
  std::string command, job_file;
  bool as_json = false;
  qhopf::JobOptions opt;
  app.add_option("command", command, "verify | search | compat | max-rank | invariants | qdet | suite (else the job's \"command\")")
      ->check(CLI::IsMember({"verify", "search", "compat", "max-rank", "invariants", "qdet", "suite"}));
  app.add_option("--job", job_file, "job file (JSON); '-' reads stdin");
  app.add_flag("--json", as_json, "print the JSON report instead of markdown");
  app.add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 64));
  app.add_option("--degree-bound", opt.degree_bound, "cap on series degrees")->check(CLI::Range(0, 1000));
  app.add_option("--level", opt.level, "ambient cyclotomic level for parsed scalars")->check(CLI::Range(0, 100000));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string text;
  if (job_file.empty()) {
    if (command.empty()) {
      std::cerr << "error: give a command or --job FILE\n";
      return 2;
    }
    text = "{}";
  } else if (job_file == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    text = s.str();
  } else {
    std::ifstream f(job_file);
    if (!f) {
      std::cerr << "error: cannot read " << job_file << "\n";
      return 2;
    }
    std::ostringstream s;
    s << f.rdbuf();
    text = s.str();
  }

  auto out = qhopf::run_job_text(text, opt, command);
  if (out.exit_code == 2 && out.report.contains("error"))
    std::cerr << "input error: " << out.report["error"].get<std::string>() << "\n";
  if (as_json)
    std::cout << out.report.dump(2) << "\n";
  else
    std::cout << qhopf::render_markdown(out.report);
  return out.exit_code;
}
