#include "qhopf/serialize.hpp"

#include <algorithm>
#include <cctype>

namespace qhopf {

void fail_at(const std::string& path, const std::string& msg) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + msg);
}

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail_at(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail_at(at(path, key), "missing field");
  return *it;
}

long get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail_at(path, "expected an integer");
  return j.get<long>();
}

int get_small(const json& j, const std::string& path, long lo, long hi) {
  long v = get_int(j, path);
  if (v < lo || v > hi) fail_at(path, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail_at(path, "expected an array");
  return j;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail_at(path, "expected a string");
  return j.get<std::string>();
}

Rational parse_rational(const std::string& s, const std::string& path) {
  auto ok = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/';
  });
  if (!ok) fail_at(path, "malformed rational '" + s + "'");
  std::string t = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(t, 10) != 0) fail_at(path, "malformed rational '" + s + "'");
  if (r.get_den() == 0) fail_at(path, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

constexpr int kMaxLevel = 100000;

// "zetaL", "zetaL^k", with an optional leading sign
std::optional<CycScalar> parse_root(std::string s, const std::string& path) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.rfind("zeta", 0) != 0) return std::nullopt;
  s = s.substr(4);
  auto caret = s.find('^');
  std::string ls = s.substr(0, caret), ks = caret == std::string::npos ? "1" : s.substr(caret + 1);
  auto digits = [](const std::string& x, bool sign) {
    if (x.empty()) return false;
    size_t i = sign && (x[0] == '-' || x[0] == '+') ? 1 : 0;
    return i < x.size() && std::all_of(x.begin() + i, x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!digits(ls, false) || !digits(ks, true) || ls.size() > 6 || ks.size() > 12)
    fail_at(path, "malformed root of unity 'zeta" + s + "'");
  int L = std::stoi(ls);
  if (L < 1 || L > kMaxLevel) fail_at(path, "root-of-unity level out of range");
  CycScalar z = zeta(L, std::stol(ks));
  return neg ? -z : z;
}

}  // namespace

const json& json_field(const json& j, const std::string& path, const std::string& key) { return field(j, path, key); }
int json_int(const json& j, const std::string& path, long lo, long hi) { return get_small(j, path, lo, hi); }

json scalar_to_json(const CycScalar& s) {
  json c = json::array();
  for (const auto& r : s.coeffs()) c.push_back(r.get_str());
  return json{{"level", s.level()}, {"coeffs", c}, {"display", describe(s)}};
}

CycScalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return CycScalar(j.get<long>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (auto r = parse_root(s, path)) return *r;
    return CycScalar(parse_rational(s, path));
  }
  if (j.is_object() && j.contains("root")) {
    const auto& r = get_array(j["root"], at(path, "root"));
    if (r.size() != 2) fail_at(at(path, "root"), "expected [L, k]");
    int L = get_small(r[0], at(at(path, "root"), 0), 1, kMaxLevel);
    return zeta(L, get_int(r[1], at(at(path, "root"), 1)));
  }
  if (j.is_object()) {
    int L = get_small(field(j, path, "level"), at(path, "level"), 1, kMaxLevel);
    const auto& cs = get_array(field(j, path, "coeffs"), at(path, "coeffs"));
    std::vector<Rational> c;
    for (size_t i = 0; i < cs.size(); ++i) {
      std::string p = at(at(path, "coeffs"), i);
      if (cs[i].is_number_integer())
        c.emplace_back(cs[i].get<long>());
      else
        c.push_back(parse_rational(get_string(cs[i], p), p));
    }
    return CycScalar::from_coeffs(L, std::move(c));
  }
  fail_at(path, "expected a scalar (integer, \"p/q\", \"zetaL^k\" or {level, coeffs})");
}

json word_to_json(const Presentation& pres, const Word& w) {
  json a = json::array();
  for (Gen g : w) a.push_back(pres.gen_names()[g]);
  return a;
}

json poly_to_json(const Presentation& pres, const NCPoly& p) {
  json a = json::array();
  for (const auto& [w, c] : p.terms) a.push_back(json{{"word", word_to_json(pres, w)}, {"coeff", scalar_to_json(c)}});
  return a;
}

NCPoly poly_from_json(const Presentation& pres, const json& j, const std::string& path) {
  get_array(j, path);
  Terms t;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = at(path, i);
    const auto& wj = get_array(field(j[i], p, "word"), at(p, "word"));
    Word w;
    for (size_t k = 0; k < wj.size(); ++k) {
      std::string name = get_string(wj[k], at(at(p, "word"), k));
      int g = pres.gen_index(name);
      if (g < 0) fail_at(at(at(p, "word"), k), "unknown generator '" + name + "'");
      w.push_back(static_cast<Gen>(g));
    }
    add_term(t, w, scalar_from_json(field(j[i], p, "coeff"), at(p, "coeff")));
  }
  return normalize(pres, t);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int k = 0; k < m.cols(); ++k) r.push_back(scalar_to_json(m.at(i, k)));
    rows.push_back(r);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& path) {
  get_array(j, path);
  if (static_cast<int>(j.size()) != rows) fail_at(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::string p = at(path, i);
    get_array(j[i], p);
    if (static_cast<int>(j[i].size()) != cols) fail_at(p, "expected " + std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(j[i][k], at(p, k));
  }
  return m;
}

json presentation_to_json(const Presentation& pres) {
  const auto& s = pres.spec();
  json j{{"family", family_name(s.family)}};
  if (s.family == Family::QuantumMatrix) {
    j["N"] = s.N;
    j["q"] = scalar_to_json(s.q);
    return j;
  }
  j["t"] = s.t;
  json p = json::array();
  for (const auto& row : s.p) {
    json r = json::array();
    for (const auto& c : row) r.push_back(scalar_to_json(c));
    p.push_back(r);
  }
  j["p"] = p;
  if (s.family == Family::QuantizedWeyl) {
    json g = json::array();
    for (const auto& c : s.gamma) g.push_back(scalar_to_json(c));
    j["gamma"] = g;
  }
  return j;
}

PresentationSpec presentation_spec_from_json(const json& j, const std::string& path) {
  PresentationSpec s;
  try {
    s.family = family_from_name(get_string(field(j, path, "family"), at(path, "family")));
  } catch (const InputError& e) {
    fail_at(at(path, "family"), e.what());
  }
  if (s.family == Family::QuantumMatrix) {
    s.N = get_small(field(j, path, "N"), at(path, "N"), 1, 6);
    s.q = scalar_from_json(field(j, path, "q"), at(path, "q"));
    return s;
  }
  s.t = get_small(field(j, path, "t"), at(path, "t"), 1, 12);
  auto pm = matrix_from_json(field(j, path, "p"), s.t, s.t, at(path, "p"));
  s.p.assign(s.t, std::vector<CycScalar>(s.t));
  for (int i = 0; i < s.t; ++i)
    for (int k = 0; k < s.t; ++k) s.p[i][k] = pm.at(i, k);
  if (s.family == Family::QuantizedWeyl) {
    const auto& g = get_array(field(j, path, "gamma"), at(path, "gamma"));
    if (static_cast<int>(g.size()) != s.t) fail_at(at(path, "gamma"), "expected " + std::to_string(s.t) + " entries");
    for (size_t i = 0; i < g.size(); ++i) s.gamma.push_back(scalar_from_json(g[i], at(at(path, "gamma"), i)));
  }
  return s;
}

namespace {

PresentationPtr build_at(const PresentationSpec& s, const std::string& path) {
  try {
    return build_presentation(s);
  } catch (const InputError& e) {
    fail_at(path, e.what());
  }
}

json ints(const std::vector<int>& v) { return json(v); }

std::vector<int> ints_from(const json& j, const std::string& path, size_t len, long lo, long hi) {
  get_array(j, path);
  if (len != SIZE_MAX && j.size() != len) fail_at(path, "expected " + std::to_string(len) + " entries");
  std::vector<int> v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(get_small(j[i], at(path, i), lo, hi));
  return v;
}

}  // namespace

PresentationPtr presentation_from_json(const json& j, const std::string& path) {
  return build_at(presentation_spec_from_json(j, path), path);
}

json hopf_to_json(const HopfSpec& h) {
  if (const auto* t = std::get_if<TaftSpec>(&h))
    return json{{"type", "taft"}, {"n", t->n}, {"m", t->m}, {"lambda", scalar_to_json(t->lambda)},
                {"gamma", scalar_to_json(t->gamma)}};
  const auto& b = std::get<BosonizationSpec>(h);
  json g = json::array(), chi = json::array();
  for (const auto& e : b.qls.g) g.push_back(ints(e));
  for (const auto& e : b.qls.chi) chi.push_back(ints(e));
  return json{{"type", "bosonization"}, {"group", ints(b.qls.G.orders)}, {"g", g}, {"chi", chi},
              {"gamma", scalar_to_json(b.gamma)}};
}

HopfSpec hopf_from_json(const json& j, const std::string& path) {
  std::string type = get_string(field(j, path, "type"), at(path, "type"));
  if (type == "taft") {
    TaftSpec t;
    t.n = get_small(field(j, path, "n"), at(path, "n"), 1, 100000);
    t.m = get_small(field(j, path, "m"), at(path, "m"), 1, 100000);
    t.lambda = scalar_from_json(field(j, path, "lambda"), at(path, "lambda"));
    if (j.contains("gamma")) t.gamma = scalar_from_json(j["gamma"], at(path, "gamma"));
    return t;
  }
  if (type != "bosonization") fail_at(at(path, "type"), "expected \"taft\" or \"bosonization\"");
  BosonizationSpec b;
  b.qls.G.orders = ints_from(field(j, path, "group"), at(path, "group"), SIZE_MAX, 1, 100000);
  if (b.qls.G.orders.empty()) fail_at(at(path, "group"), "need at least one cyclic factor");
  size_t r = b.qls.G.orders.size();
  const auto& g = get_array(field(j, path, "g"), at(path, "g"));
  const auto& chi = get_array(field(j, path, "chi"), at(path, "chi"));
  if (g.size() != chi.size()) fail_at(at(path, "chi"), "g and chi differ in length");
  for (size_t i = 0; i < g.size(); ++i) {
    b.qls.g.push_back(ints_from(g[i], at(at(path, "g"), i), r, -1000000, 1000000));
    b.qls.chi.push_back(ints_from(chi[i], at(at(path, "chi"), i), r, -1000000, 1000000));
  }
  for (auto& e : b.qls.g) e = b.qls.G.reduce(e);
  for (auto& e : b.qls.chi) e = b.qls.G.reduce(e);
  if (j.contains("gamma")) b.gamma = scalar_from_json(j["gamma"], at(path, "gamma"));
  return b;
}

json grouplike_to_json(const GrouplikeAction& g) {
  json a = json::array();
  for (const auto& c : g.alpha) a.push_back(scalar_to_json(c));
  return json{{"perm", ints(g.perm)}, {"alpha", a}};
}

GrouplikeAction grouplike_from_json(const json& j, int t, const std::string& path) {
  GrouplikeAction g;
  g.perm = ints_from(field(j, path, "perm"), at(path, "perm"), t, 0, t - 1);
  std::vector<int> seen(t, 0);
  for (int k : g.perm)
    if (seen[k]++) fail_at(at(path, "perm"), "not a permutation");
  const auto& a = get_array(field(j, path, "alpha"), at(path, "alpha"));
  if (static_cast<int>(a.size()) != t) fail_at(at(path, "alpha"), "expected " + std::to_string(t) + " entries");
  for (size_t k = 0; k < a.size(); ++k) {
    g.alpha.push_back(scalar_from_json(a[k], at(at(path, "alpha"), k)));
    if (g.alpha.back().is_zero()) fail_at(at(at(path, "alpha"), k), "grouplike scalars must be nonzero");
  }
  return g;
}

namespace {

// index of the group generator equal to g_i, or -1
int generator_index(const QLSData& q, int i) {
  const auto& e = q.g.at(i);
  for (int h = 0; h < q.G.rank(); ++h) {
    GroupElem u(q.G.rank(), 0);
    u[h] = 1;
    if (q.G.reduce(u) == e) return h;
  }
  return -1;
}

template <class F>
void for_each_scalar(ActionInstance& inst, PresentationSpec& spec, F f) {
  for (auto& row : spec.p)
    for (auto& c : row) f(c);
  f(spec.q);
  for (auto& c : spec.gamma) f(c);
  if (auto* t = std::get_if<TaftSpec>(&inst.hopf)) {
    f(t->lambda);
    f(t->gamma);
  } else {
    f(std::get<BosonizationSpec>(inst.hopf).gamma);
  }
  for (auto& g : inst.grouplikes)
    for (auto& c : g.alpha) f(c);
  for (auto& X : inst.skews)
    for (int i = 0; i < X.rows(); ++i)
      for (int k = 0; k < X.cols(); ++k) f(X.at(i, k));
}

}  // namespace

int instance_level(const ActionInstance& inst) {
  ActionInstance copy = inst;
  PresentationSpec spec = inst.pres->spec();
  long L = 1;
  for_each_scalar(copy, spec, [&](CycScalar& c) { L = lcm_int(L, c.level()); });
  return static_cast<int>(L);
}

json instance_to_json(const ActionInstance& inst) {
  json gl = json::array(), sk = json::array();
  for (const auto& g : inst.grouplikes) gl.push_back(grouplike_to_json(g));
  QLSData q = qls_view(inst.hopf);
  for (size_t i = 0; i < inst.skews.size(); ++i) {
    json s{{"eta", matrix_to_json(inst.skews[i])}};
    int h = generator_index(q, static_cast<int>(i));
    if (h >= 0) s["grouplike"] = h;
    sk.push_back(s);
  }
  return json{{"presentation", presentation_to_json(*inst.pres)}, {"hopf", hopf_to_json(inst.hopf)}, {"grouplikes", gl},
              {"skews", sk}};
}

ActionInstance instance_from_json(const json& j, const std::string& path, int level) {
  ActionInstance inst;
  PresentationSpec spec = presentation_spec_from_json(field(j, path, "presentation"), at(path, "presentation"));
  inst.hopf = hopf_from_json(field(j, path, "hopf"), at(path, "hopf"));
  int t = spec.family == Family::QuantumMatrix ? spec.N * spec.N
          : spec.family == Family::QuantizedWeyl ? 2 * spec.t
                                                  : spec.t;
  const auto& gl = get_array(field(j, path, "grouplikes"), at(path, "grouplikes"));
  for (size_t h = 0; h < gl.size(); ++h) inst.grouplikes.push_back(grouplike_from_json(gl[h], t, at(at(path, "grouplikes"), h)));
  if (static_cast<int>(gl.size()) != group_generator_count(inst.hopf))
    fail_at(at(path, "grouplikes"), "expected " + std::to_string(group_generator_count(inst.hopf)) + " grouplike actions");
  const auto& sk = get_array(field(j, path, "skews"), at(path, "skews"));
  QLSData q;
  try {
    q = qls_view(inst.hopf);
  } catch (const InputError& e) {
    fail_at(at(path, "hopf"), e.what());
  }
  if (static_cast<int>(sk.size()) != q.rank()) fail_at(at(path, "skews"), "expected " + std::to_string(q.rank()) + " skews");
  for (size_t i = 0; i < sk.size(); ++i) {
    std::string p = at(at(path, "skews"), i);
    inst.skews.push_back(matrix_from_json(field(sk[i], p, "eta"), t, t, at(p, "eta")));
    if (sk[i].contains("grouplike")) {
      int h = get_small(sk[i]["grouplike"], at(p, "grouplike"), 0, static_cast<long>(gl.size()) - 1);
      if (generator_index(q, static_cast<int>(i)) != h)
        fail_at(at(p, "grouplike"), "does not match the group element attached to this skew");
    }
  }
  long L = 1;
  for_each_scalar(inst, spec, [&](CycScalar& c) { L = lcm_int(L, c.level()); });
  if (level > 0) {
    if (level % L) fail_at(path, "ambient level " + std::to_string(level) + " is not a multiple of input level " + std::to_string(L));
    L = level;
  }
  if (L > kMaxLevel) fail_at(path, "ambient level too large");
  for_each_scalar(inst, spec, [&](CycScalar& c) { c = c.lift(static_cast<int>(L)); });
  inst.pres = build_at(spec, at(path, "presentation"));
  try {
    validate_instance(inst);
  } catch (const InputError& e) {
    fail_at(path, e.what());
  }
  return inst;
}

json report_to_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(json{{"axiom", x.axiom}, {"witness", x.witness}, {"residue", x.residue}});
  return json{{"pass", r.pass}, {"violations", v}};
}

json inner_to_json(const InnerFaithfulness& f) {
  return json{{"verdict", inner_verdict_name(f.verdict)}, {"reason", f.reason}};
}

json family_to_json(const ClassifiedAction& a) {
  json params = json::array();
  for (size_t i = 0; i < a.params.size(); ++i)
    params.push_back(json{{"name", i < a.param_names.size() ? a.param_names[i] : ""}, {"eta", matrix_to_json(a.params[i])}});
  return json{{"tag", a.tag}, {"lambda", scalar_to_json(a.lambda())}, {"m", a.m()}, {"g", grouplike_to_json(a.g())},
              {"params", params}, {"contains", a.contains}, {"instance", instance_to_json(a.inst)}};
}

json compat_to_json(const CompatResult& r) {
  json opts = json::array();
  for (const auto& o : r.options)
    opts.push_back(json{{"zeta", scalar_to_json(o.zeta)}, {"a_params", ints(o.a_params)}, {"b_params", ints(o.b_params)},
                        {"constraints", o.constraints}});
  return json{{"compatible", r.compatible}, {"zeta", r.zeta ? scalar_to_json(*r.zeta) : json(nullptr)},
              {"constraints", r.constraints}, {"options", opts}};
}

json search_to_json(const SearchResult& r) {
  json fams = json::array();
  for (const auto& f : r.families) fams.push_back(family_to_json(f));
  return json{{"candidates", r.candidates},
              {"automorphisms", r.automorphisms},
              {"families", fams},
              {"oracle_hits", static_cast<long>(r.oracle_hits.size())},
              {"cross_check", json{{"run", r.cross.run}, {"pass", r.cross.pass}, {"failures", r.cross.failures}}}};
}

json max_rank_to_json(const MaxRankResult& r, const std::vector<ClassifiedAction>& actions) {
  auto tags = [&](const std::vector<int>& idx) {
    json a = json::array();
    for (int i : idx) a.push_back(actions.at(i).tag);
    return a;
  };
  json kept = json::array(), rej = json::array(), chars = json::array();
  for (size_t k = 0; k < r.kept.size(); ++k) {
    json names = json::array();
    const auto& A = actions.at(r.members.at(k));
    for (int p : r.kept[k]) names.push_back(p < static_cast<int>(A.param_names.size()) ? A.param_names[p] : std::to_string(p));
    kept.push_back(names);
  }
  for (const auto& c : r.rejected) rej.push_back(tags(c));
  for (const auto& row : r.characters) {
    json a = json::array();
    for (const auto& c : row) a.push_back(scalar_to_json(c));
    chars.push_back(a);
  }
  json j{{"theta", r.theta}, {"members", tags(r.members)}, {"kept", kept}, {"raw_clique_number", r.raw_clique_number},
         {"rejected", rej}, {"characters", chars}};
  if (r.theta > 0) {
    j["witness"] = instance_to_json(r.witness);
    j["witness_reduced"] = r.witness_reduced;
    j["witness_verify"] = report_to_json(r.witness_verify);
    j["witness_qls"] = report_to_json(r.witness_qls);
    j["witness_inner"] = inner_to_json(r.witness_inner);
  }
  return j;
}

}  // namespace qhopf
