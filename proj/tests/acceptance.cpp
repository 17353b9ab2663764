// Runs every acceptance criterion and prints one line per criterion.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qhopf/suite.hpp"

int main(int argc, char** argv) {
  qhopf::SuiteOptions opt;
  for (int i = 1; i < argc; ++i) opt.only.push_back(std::atoi(argv[i]));
  bool ok = true;
  for (int id = 1; id <= qhopf::kCriterionCount; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    auto r = qhopf::run_criterion(id, opt);
    std::string status = r.status == qhopf::CriterionStatus::Pass ? "PASS" : r.status == qhopf::CriterionStatus::Fail ? "FAIL" : "SKIP";
    std::printf("criterion %2d: %s  %s (%.1f s)%s%s\n", id, status.c_str(), r.title.c_str(), r.seconds,
                r.reason.empty() ? "" : " - ", r.reason.c_str());
    for (size_t k = 1; k < r.failures.size() && k < 10; ++k) std::printf("    %s\n", r.failures[k].c_str());
    std::fflush(stdout);
    ok = ok && r.status != qhopf::CriterionStatus::Fail;
  }
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
