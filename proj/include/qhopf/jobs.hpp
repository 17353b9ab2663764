#pragma once

#include <string>

#include "qhopf/serialize.hpp"

namespace qhopf {

struct JobOptions {
  int workers = 1;
  int degree_bound = 0;  // 0: per-command default
  int level = 0;         // ambient level override; 0: lcm of the inputs
};

/// Exit codes: 0 pass, 1 axiom violation (or failed check), 2 input error.
struct JobOutcome {
  int exit_code = 0;
  json report;
};

/// `command` overrides the job's "command" field when nonempty.
JobOutcome run_job(const json& job, const JobOptions& opt, const std::string& command = "");
/// Parses `text` first; a JSON syntax error is an input error.
JobOutcome run_job_text(const std::string& text, const JobOptions& opt, const std::string& command = "");

/// Markdown view of a report; the suite summary gets its table layout.
std::string render_markdown(const json& report);

}  // namespace qhopf
