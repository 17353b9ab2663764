#include "qhopf/jobs.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "qhopf/invariants.hpp"
#include "qhopf/qdet.hpp"
#include "qhopf/suite.hpp"

namespace qhopf {

namespace {

int opt_int(const json& j, const std::string& key, int def, long lo, long hi) {
  if (!j.contains(key)) return def;
  return json_int(j[key], "/" + key, lo, hi);
}

bool opt_bool(const json& j, const std::string& key, bool def) {
  if (!j.contains(key)) return def;
  if (!j[key].is_boolean()) fail_at("/" + key, "expected a boolean");
  return j[key].get<bool>();
}

// "q", "q^k", "-q^k" relative to q = zeta_{ord_q}; anything else is a plain scalar
CycScalar job_scalar(const json& j, const std::string& path, int ord_q) {
  if (j.is_string()) {
    static const std::regex re(R"(^([+-]?)q(?:\^([+-]?\d{1,9}))?$)");
    std::smatch m;
    auto s = j.get<std::string>();
    if (std::regex_match(s, m, re)) {
      CycScalar z = zeta(ord_q, m[2].matched ? std::stol(m[2].str()) : 1);
      return m[1].str() == "-" ? -z : z;
    }
  }
  return scalar_from_json(j, path);
}

int ord_q_of(const json& j) { return opt_int(j, "ord_q", 5, 3, 1000); }

SearchGrid grid_of(const json& j, const JobOptions& opt) {
  SearchGrid g;
  g.workers = opt.workers;
  g.level = opt.level;
  g.oracle = opt_bool(j, "oracle", false);
  g.cap = opt_int(j, "cap", 2, 1, 8);
  return g;
}

std::vector<std::vector<CycScalar>> p_of(const json& j) {
  if (!j.contains("p")) {
    int t = opt_int(j, "t", 3, 3, 8);
    return affine_default_p(t);
  }
  const auto& pj = j["p"];
  if (!pj.is_array()) fail_at("/p", "expected a square array");
  int t = static_cast<int>(pj.size());
  Matrix m = matrix_from_json(pj, t, t, "/p");
  std::vector<std::vector<CycScalar>> p(t, std::vector<CycScalar>(t));
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) p[a][b] = m.at(a, b);
  return p;
}

std::vector<ClassifiedAction> families_of(const json& j, const JobOptions& opt, const std::string& key) {
  std::string fam = json_field(j, "", key).is_string() ? j[key].get<std::string>() : "";
  if (fam == "matrix" || fam == "M2" || fam == "MN") {
    int N = fam == "M2" ? 2 : opt_int(j, "N", 2, 2, 5);
    CycScalar q = zeta(ord_q_of(j));
    return N == 2 ? m2_catalog(q, ord_q_of(j) == 3) : mn_catalog(N, q);
  }
  if (fam == "affine") return enumerate_taft_affine(p_of(j), opt_int(j, "m", 5, 3, 24), grid_of(j, opt)).families;
  if (fam == "plane" || fam == "weyl")
    return enumerate_taft_qplane(json_int(json_field(j, "", "k"), "/k", 2, 24), json_int(json_field(j, "", "m"), "/m", 3, 24),
                                 fam == "weyl", grid_of(j, opt))
        .families;
  fail_at("/" + key, "expected \"M2\", \"MN\", \"affine\", \"plane\" or \"weyl\"");
}

ActionInstance instance_of(const json& j, const JobOptions& opt) {
  if (j.contains("instance")) return instance_from_json(j["instance"], "/instance", opt.level);
  if (j.contains("presentation")) return instance_from_json(j, "", opt.level);  // a bare instance file
  if (j.contains("example")) {
    ExampleParams ep;
    ep.q = zeta(ord_q_of(j));
    std::string id = j["example"].is_string() ? j["example"].get<std::string>() : "";
    try {
      return build_example(id, ep);
    } catch (const InputError& e) {
      fail_at("/example", e.what());
    }
  }
  fail_at("/instance", "missing field (or give \"example\")");
}

JobOutcome cmd_verify(const json& j, const JobOptions& opt) {
  auto inst = instance_of(j, opt);
  auto rep = verify_module_algebra(inst);
  json out{{"command", "verify"}, {"pass", rep.pass}, {"report", report_to_json(rep)}};
  if (std::holds_alternative<BosonizationSpec>(inst.hopf)) out["qls"] = report_to_json(validate_qls(qls_view(inst.hopf)));
  if (opt_bool(j, "inner", false)) out["inner_faithfulness"] = inner_to_json(inner_faithfulness(inst));
  return {rep.pass ? 0 : 1, out};
}

JobOutcome cmd_search(const json& j, const JobOptions& opt) {
  std::string fam = json_field(j, "", "family").is_string() ? j["family"].get<std::string>() : "";
  SearchGrid g = grid_of(j, opt);
  SearchResult r;
  json params;
  if (fam == "matrix") {
    int N = opt_int(j, "N", 2, 2, 5), o = ord_q_of(j);
    CycScalar lam = job_scalar(json_field(j, "", "lambda"), "/lambda", o);
    r = enumerate_taft_matrix(N, zeta(o), lam, g);
    params = json{{"N", N}, {"ord_q", o}, {"lambda", scalar_to_json(lam)}};
  } else if (fam == "plane" || fam == "weyl") {
    int k = json_int(json_field(j, "", "k"), "/k", 2, 24), m = json_int(json_field(j, "", "m"), "/m", 3, 24);
    r = enumerate_taft_qplane(k, m, fam == "weyl", g);
    params = json{{"k", k}, {"m", m}};
  } else if (fam == "affine") {
    int m = opt_int(j, "m", 5, 3, 24);
    r = enumerate_taft_affine(p_of(j), m, g);
    params = json{{"m", m}};
  } else {
    fail_at("/family", "expected \"matrix\", \"plane\", \"weyl\" or \"affine\"");
  }
  json out{{"command", "search"}, {"family", fam}, {"params", params}, {"result", search_to_json(r)}};
  return {r.cross.pass ? 0 : 1, out};
}

ClassifiedAction compat_member(const json& e, const std::string& path, int N, const CycScalar& q) {
  if (N == 2) return m2_row(json_int(e, path, 1, 8), q);
  if (e.is_number_integer()) return mn_row(N, json_int(e, path, 1, 8), 0, q);
  if (!e.is_array() || e.size() != 2) fail_at(path, "expected a row number or [row, index]");
  return mn_row(N, json_int(e[0], path + "/0", 1, 8), json_int(e[1], path + "/1", 0, N), q);
}

JobOutcome cmd_compat(const json& j, const JobOptions&) {
  int N = opt_int(j, "N", 2, 2, 6), o = ord_q_of(j);
  CycScalar q = zeta(o);
  const auto& rows = json_field(j, "", "rows");
  if (!rows.is_array() || rows.size() != 2) fail_at("/rows", "expected two rows");
  auto a = compat_member(rows[0], "/rows/0", N, q), b = compat_member(rows[1], "/rows/1", N, q);
  json out{{"command", "compat"}, {"ord_q", o}, {"pair", {a.tag, b.tag}}, {"result", compat_to_json(compatibility(a, b))}};
  if (auto z = compatibility(a, b).zeta)
    if (auto k = log_base(*z, q)) out["zeta_q_exponent"] = *k;
  return {0, out};
}

JobOutcome cmd_max_rank(const json& j, const JobOptions& opt) {
  auto fams = families_of(j, opt, "target");
  auto mr = max_rank(fams, opt.workers);
  json out{{"command", "max-rank"}, {"result", max_rank_to_json(mr, fams)}};
  if (j.contains("witness_out") && mr.theta > 0) {
    if (!j["witness_out"].is_string()) fail_at("/witness_out", "expected a file name");
    std::ofstream f(j["witness_out"].get<std::string>());
    if (!f) fail_at("/witness_out", "cannot write file");
    f << instance_to_json(mr.witness).dump(2) << "\n";
    out["witness_file"] = j["witness_out"];
  }
  bool ok = mr.theta == 0 || (mr.witness_verify.pass && mr.witness_qls.pass);
  return {ok ? 0 : 1, out};
}

JobOutcome cmd_invariants(const json& j, const JobOptions& opt) {
  int D = opt_int(j, "degree", 20, 0, 400);
  if (opt.degree_bound > 0) D = std::min(D, opt.degree_bound);
  json out{{"command", "invariants"}, {"degree", D}};
  bool ok = true;
  if (j.contains("instance") || j.contains("example") || j.contains("presentation")) {
    auto inst = instance_of(j, opt);
    out["fixed_dims"] = fixed_dims(inst, D);
    auto mo = molien_check(inst.grouplikes, *inst.pres, D);
    out["molien"] = json{{"pass", mo.pass}, {"group_order", mo.group_order}, {"group_fixed_dims", mo.fixed}};
    ok = mo.pass;
    return {ok ? 0 : 1, out};
  }
  int k = json_int(json_field(j, "", "k"), "/k", 2, 24), m = json_int(json_field(j, "", "m"), "/m", 2, 24);
  auto inst = plane_taft_instance(k, m, opt_int(j, "lambda_exp", 1, -1000, 1000));
  out["k"] = k;
  out["m"] = m;
  out["fixed_dims"] = fixed_dims(inst, D);
  json cases = json::array();
  for (const auto& c : applicable_fixed_ring_cases(k, m)) {
    auto pm = presentation_match(inst, c, D);
    cases.push_back(json{{"case", fixed_ring_tag_name(c.tag)}, {"match", pm.match}, {"expected", pm.expected}});
    ok = ok && pm.match;
  }
  out["fixed_ring_cases"] = cases;
  auto cr = commutativity_check(inst, D);
  out["commutative"] = json{{"pass", cr.commutative}, {"pairs", cr.pairs}, {"failure", cr.failure}};
  ok = ok && cr.commutative;
  auto rf = is_reflection(x_fixed_generator_eigenvalues(inst));
  bool crit = rf.reflection == zeta(k).pow(m).is_one();
  out["reflection"] = json{{"reflection", rf.reflection}, {"xi", rf.xi ? scalar_to_json(*rf.xi) : json(nullptr)},
                           {"criterion_holds", crit}};
  ok = ok && crit;
  auto mo = molien_check(inst.grouplikes, *inst.pres, D);
  out["molien"] = json{{"pass", mo.pass}, {"group_order", mo.group_order}};
  ok = ok && mo.pass;
  return {ok ? 0 : 1, out};
}

JobOutcome cmd_qdet(const json& j, const JobOptions&) {
  int N = opt_int(j, "N", 2, 1, 4), o = ord_q_of(j);
  CycScalar q = zeta(o);
  auto P = quantum_matrix(N, q);
  auto det = quantum_determinant(*P);
  auto cr = commutes_with_generators(*P, det);
  json lap = json::array();
  bool ok = cr.central;
  for (int c = 1; c <= N; ++c) {
    bool l = laplace_check(N, q, c);
    lap.push_back(json{{"column", c}, {"pass", l}});
    ok = ok && l;
  }
  json out{{"command", "qdet"}, {"N", N}, {"ord_q", o}, {"det_q", poly_to_json(*P, det)},
           {"display", to_string(*P, det.terms)}, {"central", json{{"pass", cr.central}, {"failures", cr.failures}}},
           {"laplace", lap}};
  if (opt_bool(j, "catalog", false) && N >= 2) {
    json rows = json::array();
    for (const auto& f : N == 2 ? m2_catalog(q) : mn_catalog(N, q)) {
      auto s = ideal_stability(f.inst);
      rows.push_back(json{{"tag", f.tag}, {"g_fixes_det", s.g_fixes_det}, {"x_kills_det", s.x_kills_det}});
    }
    out["ideal_stability"] = rows;
  }
  return {ok ? 0 : 1, out};
}

JobOutcome cmd_suite(const json& j, const JobOptions& opt) {
  SuiteOptions so;
  so.order = opt_int(j, "ord_q", 5, 2, 64);
  so.workers = opt.workers;
  so.degree_bound = opt.degree_bound;
  if (j.contains("criteria")) {
    const auto& c = j["criteria"];
    if (!c.is_array()) fail_at("/criteria", "expected an array of criterion numbers");
    for (size_t i = 0; i < c.size(); ++i) so.only.push_back(json_int(c[i], "/criteria/" + std::to_string(i), 1, kCriterionCount));
  }
  auto r = run_suite(so);
  json out = suite_to_json(r);
  out["command"] = "suite";
  return {suite_passed(r) ? 0 : 1, out};
}

}  // namespace

JobOutcome run_job(const json& job, const JobOptions& opt, const std::string& command) {
  try {
    if (!job.is_object()) fail_at("", "job must be a JSON object");
    std::string cmd = command;
    if (job.contains("command")) {
      if (!job["command"].is_string()) fail_at("/command", "expected a string");
      std::string jc = job["command"].get<std::string>();
      if (!cmd.empty() && jc != cmd) fail_at("/command", "job says \"" + jc + "\" but \"" + cmd + "\" was requested");
      cmd = jc;
    }
    if (cmd.empty()) fail_at("/command", "missing field");
    if (cmd == "verify") return cmd_verify(job, opt);
    if (cmd == "search") return cmd_search(job, opt);
    if (cmd == "compat") return cmd_compat(job, opt);
    if (cmd == "max-rank") return cmd_max_rank(job, opt);
    if (cmd == "invariants") return cmd_invariants(job, opt);
    if (cmd == "qdet") return cmd_qdet(job, opt);
    if (cmd == "suite") return cmd_suite(job, opt);
    fail_at("/command", "unknown command \"" + cmd + "\"");
  } catch (const InputError& e) {
    return {2, json{{"error", e.what()}}};
  } catch (const ArithmeticError& e) {
    return {2, json{{"error", std::string("arithmetic: ") + e.what()}}};
  }
}

JobOutcome run_job_text(const std::string& text, const JobOptions& opt, const std::string& command) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    return {2, json{{"error", std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what()}}};
  }
  return run_job(j, opt, command);
}

namespace {

bool is_scalar_obj(const json& j) { return j.is_object() && j.contains("level") && j.contains("coeffs"); }

std::string inline_value(const json& j) {
  if (is_scalar_obj(j) && j.contains("display")) return j["display"].get<std::string>();
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool cell(const json& v) {
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
  return v.is_primitive() || is_scalar_obj(v);
}

bool flat(const json& j) {
  if (j.is_object()) return std::all_of(j.begin(), j.end(), cell);
  return j.is_primitive() || is_scalar_obj(j);
}

void render(std::ostringstream& o, const std::string& key, const json& j, int depth) {
  std::string h(std::min(depth, 5) + 1, '#');
  if ((flat(j) && !j.is_object()) || is_scalar_obj(j)) {
    o << "- **" << key << "**: " << inline_value(j) << "\n";
    return;
  }
  if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_object() && flat(v); })) {
    o << "\n" << h << " " << key << "\n\n|";
    for (auto it = j[0].begin(); it != j[0].end(); ++it) o << " " << it.key() << " |";
    o << "\n|";
    for (size_t i = 0; i < j[0].size(); ++i) o << "---|";
    o << "\n";
    for (const auto& row : j) {
      o << "|";
      for (auto it = j[0].begin(); it != j[0].end(); ++it) o << " " << (row.contains(it.key()) ? inline_value(row[it.key()]) : "") << " |";
      o << "\n";
    }
    o << "\n";
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& v) { return flat(v) && !v.is_object(); })) {
    std::string s;
    for (const auto& v : j) s += (s.empty() ? "" : ", ") + inline_value(v);
    o << "- **" << key << "**: [" << s << "]\n";
    return;
  }
  o << "\n" << h << " " << key << "\n\n";
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render(o, it.key(), it.value(), depth + 1);
  } else {
    for (size_t i = 0; i < j.size(); ++i) render(o, key + "[" + std::to_string(i) + "]", j[i], depth + 1);
  }
}

}  // namespace

std::string render_markdown(const json& report) {
  if (report.contains("criteria") && report.value("command", "") == "suite") return suite_markdown(report);
  std::ostringstream o;
  o << "# " << report.value("command", std::string("report")) << "\n\n";
  for (auto it = report.begin(); it != report.end(); ++it)
    if (it.key() != "command") render(o, it.key(), it.value(), 1);
  return o.str();
}

}  // namespace qhopf
