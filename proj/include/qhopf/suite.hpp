#pragma once

#include <string>
#include <vector>

#include "qhopf/serialize.hpp"

namespace qhopf {

enum class CriterionStatus { Pass, Fail, Skip };
std::string criterion_status_name(CriterionStatus s);

struct CriterionResult {
  int id = 0;
  std::string title;
  CriterionStatus status = CriterionStatus::Pass;
  std::string reason;  // skip reason or first failure
  double seconds = 0;
  std::vector<std::string> failures;
  json detail = json::object();
};

struct SuiteOptions {
  int order = 5;         // ord(q) for the matrix criteria; below 5 they are skipped
  int workers = 1;
  int degree_bound = 0;  // caps the series degrees when positive
  std::vector<int> only;  // empty: all criteria
};

constexpr int kCriterionCount = 13;
std::string criterion_title(int id);

CriterionResult run_criterion(int id, const SuiteOptions& opt);
std::vector<CriterionResult> run_suite(const SuiteOptions& opt);
bool suite_passed(const std::vector<CriterionResult>& r);  // no failures; skips allowed

json suite_to_json(const std::vector<CriterionResult>& r);
/// Rendered from the JSON summary only.
std::string suite_markdown(const json& summary);

}  // namespace qhopf
