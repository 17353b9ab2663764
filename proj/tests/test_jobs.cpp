#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qhopf/jobs.hpp"
#include "qhopf/suite.hpp"

using namespace qhopf;

namespace {

json load(const std::string& name) {
  std::ifstream f(std::string(QHOPF_SOURCE_DIR) + "/jobs/" + name);
  REQUIRE(f.good());
  return json::parse(f);
}

JobOutcome run(const json& j) { return run_job(j, JobOptions{}); }

std::string error_of(const JobOutcome& o) { return o.report.value("error", std::string()); }

}  // namespace

TEST_CASE("verify exit codes") {
  auto good = run(load("verify_plane_a.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.report["inner_faithfulness"]["verdict"] == "inner_faithful");

  auto bad = run(load("verify_plane_a_perturbed.json"));
  CHECK(bad.exit_code == 1);
  bool relation_listed = false;
  for (const auto& v : bad.report["report"]["violations"])
    if (v["axiom"] == "b" && v["witness"].get<std::string>().find("u1 u2") != std::string::npos) relation_listed = true;
  CHECK(relation_listed);

  auto inval = run(load("verify_bad_p.json"));
  CHECK(inval.exit_code == 2);
  CHECK(error_of(inval).rfind("/instance/presentation:", 0) == 0);
}

TEST_CASE("input errors carry a pointer") {
  CHECK(run_job_text("{\"command\": ", JobOptions{}).exit_code == 2);
  CHECK(error_of(run_job_text("[1,", JobOptions{})).rfind("malformed JSON", 0) == 0);
  CHECK(error_of(run(json{{"command", "launch"}})).rfind("/command:", 0) == 0);
  CHECK(error_of(run(json{{"command", "search"}, {"family", "matrix"}})) == "/lambda: missing field");
  CHECK(error_of(run(json{{"command", "compat"}, {"rows", {1, 9}}})).rfind("/rows/1:", 0) == 0);
  CHECK(error_of(run(json{{"command", "verify"}, {"example", "nope"}})).rfind("/example:", 0) == 0);
  CHECK(run_job(json{{"command", "qdet"}}, JobOptions{}, "suite").exit_code == 2);
  CHECK(run_job(json::object(), JobOptions{}, "qdet").exit_code == 0);
}

TEST_CASE("search, compat and max-rank jobs") {
  auto s = run(load("search_m2_q2.json"));
  CHECK(s.exit_code == 0);
  std::vector<std::string> tags;
  for (const auto& f : s.report["result"]["families"]) tags.push_back(f["tag"]);
  std::sort(tags.begin(), tags.end());
  CHECK(tags == std::vector<std::string>{"m2.row1", "m2.row2", "m2.row3"});

  auto c = run(load("compat_1_8.json"));
  CHECK(c.exit_code == 0);
  CHECK(c.report["zeta_q_exponent"] == 3);  // q^-2 at ord(q) = 5

  auto m = run(json{{"command", "max-rank"}, {"target", "M2"}, {"ord_q", 5}});
  CHECK(m.exit_code == 0);
  CHECK(m.report["result"]["theta"] == 3);
  CHECK(m.report["result"]["witness_verify"]["pass"] == true);
  // the witness is itself a valid verify job
  auto w = run_job(m.report["result"]["witness"], JobOptions{}, "verify");
  CHECK(w.exit_code == 0);
}

TEST_CASE("qdet and invariants jobs") {
  auto q = run(json{{"command", "qdet"}, {"N", 2}});
  CHECK(q.exit_code == 0);
  CHECK(q.report["display"] == "Y11 Y22 + (zeta10^7)*Y12 Y21");
  auto i = run(load("invariants_6_4.json"));
  CHECK(i.exit_code == 0);
  CHECK(i.report["fixed_ring_cases"][0]["case"] == "hypersurface");
  JobOptions capped;
  capped.degree_bound = 12;
  CHECK(run_job(load("invariants_6_4.json"), capped).report["fixed_dims"].size() == 13);
}

TEST_CASE("suite gating and summary") {
  auto r = run(load("suite_ord4.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.report["skipped"] == 2);
  CHECK(r.report["criteria"][0]["status"] == "skip");
  CHECK(r.report["criteria"][0]["reason"].get<std::string>().find(">= 5") != std::string::npos);
  auto md = render_markdown(r.report);
  CHECK(md.find("| 2 | ") != std::string::npos);
  CHECK(md.find("2 passed, 0 failed, 2 skipped") != std::string::npos);
  CHECK_THROWS_AS(criterion_title(14), InputError);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  JobOptions three;
  three.workers = 3;
  auto job = load("search_m2_q2.json");
  auto a = run(job).report.dump(), b = run(job).report.dump(), c = run_job(job, three).report.dump();
  CHECK(a == b);
  CHECK(a == c);
  CHECK(render_markdown(run(job).report) == render_markdown(json::parse(a)));
}
