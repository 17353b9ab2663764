#include "qhopf/suite.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qhopf/invariants.hpp"
#include "qhopf/qdet.hpp"
#include "qhopf/reference.hpp"

namespace qhopf {

std::string criterion_status_name(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass: return "pass";
    case CriterionStatus::Fail: return "fail";
    case CriterionStatus::Skip: return "skip";
  }
  return "?";
}

std::string criterion_title(int id) {
  static const char* titles[kCriterionCount] = {
      "quantum plane and first Weyl algebra census",
      "O_q(M_2) Taft actions: catalog and exhaustive search",
      "O_q(M_2) pairwise compatibility",
      "O_q(M_2) maximum rank and witness",
      "O_q(M_N) catalog, compatibility and maximum rank",
      "quantum affine 3-space: trivial extensions, chains, nonzero gamma",
      "quantum affine 3-space: sharpness of the rank bound",
      "fixed-ring Hilbert series of plane actions",
      "fixed rings: commutativity, reflections, Molien",
      "dual actions on quantum exterior algebras",
      "quantized Weyl algebra action",
      "quantum determinant: centrality, Laplace, ideal stability",
      "rewriting engine soundness",
  };
  if (id < 1 || id > kCriterionCount) throw InputError("criteria are numbered 1.." + std::to_string(kCriterionCount));
  return titles[id - 1];
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Ctx {
  const SuiteOptions& opt;
  CriterionResult& res;

  void expect(bool ok, const std::string& what) {
    if (!ok) res.failures.push_back(what);
  }
  void skip(const std::string& why) {
    res.status = CriterionStatus::Skip;
    res.reason = why;
  }
  int degree(int d) const { return opt.degree_bound > 0 ? std::min(d, opt.degree_bound) : d; }
  SearchGrid grid(bool oracle = false) const {
    SearchGrid g;
    g.oracle = oracle;
    g.workers = opt.workers;
    return g;
  }
  void time_limit(Clock::time_point t0, double limit, const std::string& what) {
    double s = since(t0);
    expect(s < limit, what + " took " + std::to_string(s) + " s (limit " + std::to_string(limit) + " s)");
  }
};

std::set<std::string> tag_set(const SearchResult& r) {
  std::set<std::string> s;
  for (const auto& f : r.families) s.insert(f.tag);
  return s;
}

json tag_json(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
  return "{" + out + "}";
}

int q_exp(const CycScalar& z, const CycScalar& q) {
  auto k = log_base(z, q);
  return k ? *k : -1;
}

bool needs_order5(Ctx& c) {
  if (c.opt.order < 5) {
    c.skip("needs ord(q) >= 5, got " + std::to_string(c.opt.order));
    return false;
  }
  return true;
}

void all_verify(Ctx& c, const std::vector<ClassifiedAction>& fams, const std::string& where) {
  for (const auto& f : fams) c.expect(verify_module_algebra(f.inst).pass, where + ": " + f.tag + " fails verification");
}

// ---------------------------------------------------------------------------

void c1(Ctx& c) {
  json runs = json::array();
  for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {5, 5}}) {
    auto t0 = Clock::now();
    std::string at = "(k,m)=(" + std::to_string(k) + "," + std::to_string(m) + ")";
    CycScalar mu = zeta(k);

    auto plane = enumerate_taft_qplane(k, m, false, c.grid(true));
    c.expect(plane.cross.run && plane.cross.pass, at + " plane: oracle cross-check failed");
    c.expect(tag_set(plane) == std::set<std::string>{"plane-a", "plane-b"}, at + " plane families " + join(tag_set(plane)));
    all_verify(c, plane.families, at);
    for (const auto& f : plane.families) {
      const auto& a = f.g().alpha;
      if (f.tag == "plane-a") c.expect(a[0] == mu && a[1] == f.lambda().inv() * mu, at + " plane-a grouplike");
      if (f.tag == "plane-b")
        c.expect(a[0] == (f.lambda() * mu).inv() && a[1] == mu.inv(), at + " plane-b grouplike");
    }

    auto weyl = enumerate_taft_qplane(k, m, true, c.grid(true));
    c.expect(weyl.cross.run && weyl.cross.pass, at + " Weyl: oracle cross-check failed");
    all_verify(c, weyl.families, at);
    std::set<std::string> want;
    auto m2 = (mu * mu).mult_order(), mm2 = (mu * mu).inv().mult_order();
    if (m2 && *m2 == m) want.insert("weyl-a");
    if (mm2 && *mm2 == m) want.insert("weyl-b");
    c.expect(tag_set(weyl) == want, at + " Weyl families " + join(tag_set(weyl)) + ", expected " + join(want));
    for (const auto& f : weyl.families) {
      if (f.tag == "weyl-a") c.expect(f.lambda() == mu * mu, at + " weyl-a needs lambda = mu^2");
      if (f.tag == "weyl-b") c.expect(f.lambda() == (mu * mu).inv(), at + " weyl-b needs lambda = mu^-2");
    }
    double s = since(t0);
    c.time_limit(t0, 60, at);
    runs.push_back(json{{"k", k}, {"m", m}, {"plane", tag_json(tag_set(plane))}, {"weyl", tag_json(tag_set(weyl))},
                        {"oracle_hits", plane.oracle_hits.size() + weyl.oracle_hits.size()}, {"seconds", s}});
  }
  c.res.detail["runs"] = runs;
}

void c2(Ctx& c) {
  if (!needs_order5(c)) return;
  auto t0 = Clock::now();
  int o = c.opt.order;
  for (int oo : {o, 7}) {
    auto cat = m2_catalog(zeta(oo));
    c.expect(cat.size() == 8, "catalog size");
    all_verify(c, cat, "ord(q)=" + std::to_string(oo));
  }
  CycScalar q = zeta(o);
  auto s2 = tag_set(enumerate_taft_matrix(2, q, q * q, c.grid()));
  auto s4 = tag_set(enumerate_taft_matrix(2, q, q.pow(4), c.grid()));
  c.expect(s2 == std::set<std::string>{"m2.row1", "m2.row2", "m2.row3"}, "lambda=q^2 found " + join(s2));
  c.expect(s4 == std::set<std::string>{"m2.row7"}, "lambda=q^4 found " + join(s4));

  CycScalar q3 = zeta(3);
  std::set<std::string> s3;
  for (const auto& lam : {q3, q3 * q3}) {
    auto r = enumerate_taft_matrix(2, q3, lam, c.grid());
    all_verify(c, r.families, "ord(q)=3");
    for (const auto& t : tag_set(r)) s3.insert(t);
  }
  c.expect(s3.count("m2.ord3.1") && s3.count("m2.ord3.2"), "ord(q)=3 search found " + join(s3));
  c.time_limit(t0, 300, "criterion");
  c.res.detail = json{{"lambda_q2", tag_json(s2)}, {"lambda_q4", tag_json(s4)}, {"ord3", tag_json(s3)}};
}

void c3(Ctx& c) {
  if (!needs_order5(c)) return;
  json runs = json::array();
  for (int o : {c.opt.order, 6}) {
    CycScalar q = zeta(o);
    auto cat = m2_catalog(q);
    int cells = 0, compatible = 0, constrained = 0;
    for (int j = 1; j <= 8; ++j)
      for (int i = 1; i <= 8; ++i) {
        auto want = m2_compat_reference(j, i);
        bool expect = want.compatible && (!want.needs_q6 || q.pow(6).is_one());
        auto got = compatibility(cat[j - 1], cat[i - 1]);
        std::string at = "ord(q)=" + std::to_string(o) + " cell (" + std::to_string(j) + "," + std::to_string(i) + ")";
        ++cells;
        if (got.compatible != expect) {
          c.expect(false, at + (expect ? ": expected compatible" : ": expected ---"));
          continue;
        }
        if (!expect) continue;
        ++compatible;
        if (!want.constraints.empty()) ++constrained;
        c.expect(mod_floor(q_exp(*got.zeta, q) - want.zeta_exp, o) == 0, at + ": zeta = " + describe(*got.zeta));
        c.expect(got.constraints == want.constraints, at + ": constraint mismatch");
      }
    runs.push_back(json{{"order", o}, {"cells", cells}, {"compatible", compatible}, {"constrained", constrained}});
  }
  c.res.detail["runs"] = runs;
}

void c4(Ctx& c) {
  if (!needs_order5(c)) return;
  CycScalar q = zeta(c.opt.order);
  auto cat = m2_catalog(q);
  auto mr = max_rank(cat, c.opt.workers);
  c.expect(mr.theta == 3, "max rank " + std::to_string(mr.theta));
  ExampleParams ep;
  ep.q = q;
  auto ex = build_example("m2-rank3", ep);
  auto v = verify_module_algebra(ex);
  auto ql = validate_qls(qls_view(ex.hopf));
  auto in = inner_faithfulness(ex);
  c.expect(v.pass, "witness fails verification");
  c.expect(ql.pass, "witness QLS data invalid");
  c.expect(in.verdict == InnerVerdict::InnerFaithful, "witness inner faithfulness: " + inner_verdict_name(in.verdict));
  c.res.detail = json{{"max_rank", max_rank_to_json(mr, cat)}, {"example_group", qls_view(ex.hopf).G.orders},
                      {"example_verify", report_to_json(v)}, {"example_inner", inner_to_json(in)}};
}

void c5(Ctx& c) {
  if (!needs_order5(c)) return;
  auto t0 = Clock::now();
  CycScalar q = zeta(c.opt.order);
  auto cat = mn_catalog(3, q);
  all_verify(c, cat, "N=3");
  auto labels = mn_catalog_labels(3);
  c.expect(labels.size() == cat.size(), "catalog labels");
  std::set<int> rows;
  for (const auto& l : labels) rows.insert(l.row);
  c.expect(rows.size() == 8, "catalog rows");
  int cells = 0, dashes = 0, block1 = 0, block2 = 0;
  for (size_t j = 0; j < cat.size() && j < labels.size(); ++j)
    for (size_t i = 0; i < cat.size() && i < labels.size(); ++i) {
      auto want = mn_compat_reference(labels[j], labels[i], 3);
      auto got = compatibility(cat[j], cat[i]);
      ++cells;
      std::string at = cat[j].tag + " x " + cat[i].tag;
      if (got.compatible != want.has_value()) {
        c.expect(false, at + ": compatibility differs");
        continue;
      }
      if (!want) {
        ++dashes;
        int rj = labels[j].row, ri = labels[i].row;
        if ((rj == 3 || rj == 4) && (ri == 3 || ri == 4)) ++block1;
        if ((rj == 7 || rj == 8) && (ri == 7 || ri == 8)) ++block2;
        continue;
      }
      c.expect(mod_floor(q_exp(*got.zeta, q) - *want, c.opt.order) == 0, at + ": zeta = " + describe(*got.zeta));
    }
  c.expect(cells >= 16 && block1 > 0 && block2 > 0, "sampled cells do not cover both --- blocks");

  auto mr3 = max_rank(cat, c.opt.workers);
  c.expect(mr3.theta == 4, "N=3 max rank " + std::to_string(mr3.theta));
  c.expect(mr3.witness_verify.pass, "N=3 max-rank witness fails verification");
  ExampleParams ep;
  ep.q = q;
  auto ex = build_example("mn-patch", ep);
  c.expect(hopf_rank(ex.hopf) == 4, "patched example rank");
  c.expect(verify_module_algebra(ex).pass, "patched example fails verification");
  c.expect(validate_qls(qls_view(ex.hopf)).pass, "patched example QLS data invalid");
  auto cat4 = mn_catalog(4, q);
  auto mr4 = max_rank(cat4, c.opt.workers);
  c.expect(mr4.theta == 6, "N=4 max rank " + std::to_string(mr4.theta));
  c.time_limit(t0, 900, "criterion");
  c.res.detail = json{{"cells", cells},       {"dash_cells", dashes},     {"theta_N3", mr3.theta},
                      {"theta_N4", mr4.theta}, {"witness_N3_reduced", mr3.witness_reduced}};
}

SearchResult affine_m5(Ctx& c) { return enumerate_taft_affine(affine_default_p(3), 5, c.grid(true)); }

SearchResult affine_chain_search(Ctx& c) {
  auto ex = build_example("affine-chain");
  return enumerate_taft_affine(ex.pres->spec().p, 3, c.grid(true));
}

void c6(Ctx& c) {
  auto r5 = affine_m5(c);
  c.expect(r5.cross.run && r5.cross.pass, "m=5: oracle cross-check failed");
  c.expect(!r5.families.empty(), "m=5: no actions found");
  all_verify(c, r5.families, "m=5");
  for (const auto& f : r5.families)
    c.expect(f.tag.rfind("ext-A", 0) == 0 && f.tag.size() == 7, "m=5: " + f.tag + " is not a trivial extension of A_ij");

  auto r3 = affine_chain_search(c);
  c.expect(r3.cross.run && r3.cross.pass, "m=3: oracle cross-check failed");
  all_verify(c, r3.families, "m=3");
  int chains = 0;
  for (const auto& f : r3.families) {
    c.expect(f.tag.rfind("ext-A", 0) == 0, "m=3: unexpected family " + f.tag);
    if (f.tag.size() == 8) ++chains;
  }
  c.expect(chains > 0, "m=3: no A_ijk chain found");

  auto ex = build_example("affine-cycle-gamma");
  c.expect(verify_module_algebra(ex).pass, "gamma example fails verification");
  const auto& T = std::get<TaftSpec>(ex.hopf);
  Matrix G = ex.grouplikes[0].matrix();
  const Matrix& X = ex.skews[0];
  c.expect(!T.gamma.is_zero(), "gamma example has gamma = 0");
  c.expect(X.pow(T.m) == T.gamma * (G.pow(T.m) - Matrix::identity(G.rows())), "X^m != gamma (G^m - I)");
  c.res.detail = json{{"m5", tag_json(tag_set(r5))}, {"m3", tag_json(tag_set(r3))}, {"chains", chains}};
}

void c7(Ctx& c) {
  auto ex = build_example("affine-sharp");
  c.expect(hopf_rank(ex.hopf) == 4, "construction rank " + std::to_string(hopf_rank(ex.hopf)));
  c.expect(verify_module_algebra(ex).pass, "construction fails verification");
  c.expect(validate_qls(qls_view(ex.hopf)).pass, "construction QLS data invalid");
  auto r = enumerate_taft_affine(affine_default_p(3), 5, c.grid());
  auto mr = max_rank(r.families, c.opt.workers);
  c.expect(mr.theta == 4, "max rank " + std::to_string(mr.theta));
  c.expect(mr.witness_verify.pass, "max-rank witness fails verification");
  c.res.detail = json{{"max_rank", max_rank_to_json(mr, r.families)}};
}

CountSeries mul_trunc(const CountSeries& a, const CountSeries& b, int D) {
  CountSeries r(D + 1, 0);
  for (int i = 0; i <= D && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= D && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  return r;
}

CountSeries one_minus(int e, int D) {
  CountSeries r(D + 1, 0);
  r[0] = 1;
  if (e <= D) r[e] = -1;
  return r;
}

void c8(Ctx& c) {
  struct Run {
    FixedRingTag tag;
    int k, m, D;
  };
  json runs = json::array();
  for (const auto& r : {Run{FixedRingTag::DividesKM, 3, 6, 36}, Run{FixedRingTag::Veronese, 6, 3, 36},
                        Run{FixedRingTag::Hypersurface, 6, 4, 72}}) {
    int D = c.degree(r.D);
    auto fc = make_fixed_ring_case(r.tag, r.k, r.m);
    auto pm = presentation_match(plane_taft_instance(r.k, r.m), fc, D);
    std::string at = fixed_ring_tag_name(r.tag) + " (" + std::to_string(r.k) + "," + std::to_string(r.m) + ")";
    c.expect(pm.match, at + ": fixed-ring series differs from the candidate");
    if (r.tag == FixedRingTag::Hypersurface) {
      // clearing the denominator must leave 1 + t^k + ... + t^{sk}
      auto num = mul_trunc(mul_trunc(pm.fixed, one_minus(r.k, D), D), one_minus(fc.s * r.k, D), D);
      CountSeries want(D + 1, 0);
      for (int j = 0; j <= fc.s && j * r.k <= D; ++j) want[j * r.k] = 1;
      c.expect(num == want, at + ": numerator is not 1 + t^k + ... + t^{sk}");
    }
    runs.push_back(json{{"case", fixed_ring_tag_name(r.tag)}, {"k", r.k}, {"m", r.m}, {"degree", D}, {"match", pm.match}});
    if (D < r.D) c.res.detail["degree_bound_applied"] = c.opt.degree_bound;
  }
  c.res.detail["runs"] = runs;
}

void c9(Ctx& c) {
  int D20 = c.degree(20), D30 = c.degree(30);
  int grid = 0, reflections = 0;
  for (int k = 3; k <= 6; ++k)
    for (int m = 3; m <= 6; ++m) {
      std::string at = "(k,m)=(" + std::to_string(k) + "," + std::to_string(m) + ")";
      auto inst = plane_taft_instance(k, m);
      c.expect(verify_module_algebra(inst).pass, at + ": instance fails verification");
      auto cr = commutativity_check(inst, D20);
      c.expect(cr.commutative, at + ": fixed ring not commutative: " + cr.failure);
      bool refl = is_reflection(x_fixed_generator_eigenvalues(inst)).reflection;
      c.expect(refl == zeta(k).pow(m).is_one(), at + ": reflection criterion");
      reflections += refl;
      ++grid;
    }
  auto plane = quantum_plane(zeta(5));
  int groups = 0;
  for (int n = 1; n <= 12; ++n)
    for (int a = 0; a < n; ++a) {
      std::string at = "cyclic order " + std::to_string(n) + ", exponent " + std::to_string(a);
      auto g = GrouplikeAction::diagonal({zeta(n), zeta(n, a)});
      auto mo = molien_check({g}, *plane, D30);
      c.expect(mo.pass, at + ": Molien identity fails");
      c.expect(mo.group_order == n, at + ": group order");
      c.expect(trace_series_direct(g, *plane, D30) == trace_series_product(g.alpha, {1, 1}, D30),
               at + ": trace series differ");
      ++groups;
    }
  c.res.detail = json{{"grid", grid}, {"reflections", reflections}, {"cyclic_groups", groups}, {"degree", D30}};
}

void c10(Ctx& c) {
  int checked = 0;
  for (auto r : {affine_m5(c), affine_chain_search(c)})
    for (const auto& f : r.families) {
      auto d = dual_action(f.inst);
      c.expect(d.pres->family() == Family::QuantumExterior, f.tag + ": dual is not on the exterior algebra");
      c.expect(verify_module_algebra(d).pass, f.tag + ": dual action fails verification");
      ++checked;
    }
  c.expect(checked > 0, "no affine actions");
  c.res.detail["dual_actions"] = checked;
}

void c11(Ctx& c) {
  auto ex = build_example("weyl-a2");
  c.expect(ex.pres->family() == Family::QuantizedWeyl && ex.pres->spec().t == 2, "example is not on A_2");
  c.expect(verify_module_algebra(ex).pass, "example fails verification");
  CycScalar mu = zeta(3);
  auto r = enumerate_taft_qplane(3, 3, true, c.grid(true));
  int a = 0;
  for (const auto& f : r.families)
    if (f.tag == "weyl-a") {
      ++a;
      c.expect(f.lambda() == mu * mu, "weyl-a with lambda != mu^2");
    }
  c.expect(a == 1, "weyl-a families at (3,3): " + std::to_string(a));
  c.res.detail = json{{"weyl_families", tag_json(tag_set(r))}};
}

void c12(Ctx& c) {
  for (int o : {3, 5, 7})
    for (int N : {2, 3}) {
      std::string at = "N=" + std::to_string(N) + " ord(q)=" + std::to_string(o);
      auto cr = centrality_check(N, zeta(o));
      c.expect(cr.central, at + ": det_q not central");
      for (int col = 1; col <= N; ++col)
        c.expect(laplace_check(N, zeta(o), col), at + ": Laplace expansion fails on column " + std::to_string(col));
    }
  CycScalar q = zeta(c.opt.order < 5 ? 5 : c.opt.order);
  auto stable = [](const ActionInstance& inst) {
    auto s = ideal_stability(inst);
    return s.g_fixes_det && s.x_kills_det;
  };
  std::set<int> m2, mn;
  for (int row = 1; row <= 8; ++row)
    if (stable(m2_row(row, q).inst)) m2.insert(row);
  auto cat = mn_catalog(3, q);
  auto labels = mn_catalog_labels(3);
  std::set<int> mn_unstable;
  for (size_t i = 0; i < cat.size(); ++i) (stable(cat[i].inst) ? mn : mn_unstable).insert(labels[i].row);
  auto l2 = m2_det_stable_rows(), l3 = mn_det_stable_rows();
  c.expect(m2 == std::set<int>(l2.begin(), l2.end()), "M_2 stable rows differ from the listed rows");
  c.expect(mn == std::set<int>(l3.begin(), l3.end()), "M_3 stable rows differ from the listed rows");
  for (int r : mn_unstable) c.expect(!mn.count(r), "M_3 row " + std::to_string(r) + " is stable for some index only");
  c.res.detail = json{{"m2_stable_rows", std::vector<int>(m2.begin(), m2.end())},
                      {"m3_stable_rows", std::vector<int>(mn.begin(), mn.end())}};
}

std::vector<std::vector<CycScalar>> pattern_p(int t, int o) {
  auto p = unit_p(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      p[i][j] = zeta(o, 1 + i + j);
      p[j][i] = p[i][j].inv();
    }
  return p;
}

void c13(Ctx& c) {
  std::vector<PresentationPtr> pres;
  int overlaps = 0;
  for (int o = 3; o <= 8; ++o) {
    PresentationSpec ext;
    ext.family = Family::QuantumExterior;
    ext.t = 3;
    ext.p = pattern_p(3, o);
    std::vector<PresentationPtr> fam = {quantum_affine(pattern_p(3, o)), build_presentation(ext), quantum_matrix(2, zeta(o)),
                                        quantum_matrix(3, zeta(o)), quantized_weyl(pattern_p(2, o), {zeta(o), zeta(o, 2)})};
    for (const auto& P : fam) {
      auto rep = confluence_check(*P);
      c.expect(rep.pass, family_name(P->family()) + " ord " + std::to_string(o) + ": not confluent");
      overlaps += rep.overlaps_checked;
      pres.push_back(P);
    }
  }
  std::mt19937_64 rng(0x5eed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_poly = [&](const Presentation& P) {
    Terms t;
    int terms = uni(1, 3);
    for (int i = 0; i < terms; ++i) {
      Word w;
      int len = uni(0, 3);
      for (int j = 0; j < len; ++j) w.push_back(static_cast<Gen>(uni(0, P.num_gens() - 1)));
      Rational r(uni(-4, 4), uni(1, 3));
      r.canonicalize();
      add_term(t, w, CycScalar(r) * zeta(6, uni(0, 5)));
    }
    return t;
  };
  const int samples = 10000;
  int idem_fail = 0, assoc_fail = 0;
  for (int s = 0; s < samples; ++s) {
    const Presentation& P = *pres[s % pres.size()];
    NCPoly a = normalize(P, random_poly(P));
    if (normalize(P, a.terms) != a) ++idem_fail;
    NCPoly x = normalize(P, random_poly(P)), y = normalize(P, random_poly(P));
    if (multiply(P, multiply(P, a, x), y) != multiply(P, a, multiply(P, x, y))) ++assoc_fail;
  }
  c.expect(idem_fail == 0, std::to_string(idem_fail) + " normalize idempotence failures");
  c.expect(assoc_fail == 0, std::to_string(assoc_fail) + " associativity failures");
  c.res.detail = json{{"presentations", pres.size()}, {"overlaps", overlaps}, {"samples", samples}};
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  static const std::function<void(Ctx&)> fns[kCriterionCount] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};
  CriterionResult res;
  res.id = id;
  res.title = criterion_title(id);
  Ctx c{opt, res};
  auto t0 = Clock::now();
  try {
    fns[id - 1](c);
  } catch (const std::exception& e) {
    res.failures.push_back(std::string("exception: ") + e.what());
  }
  res.seconds = since(t0);
  if (!res.failures.empty()) {
    res.status = CriterionStatus::Fail;
    res.reason = res.failures.front();
  }
  return res;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), id) != opt.only.end())
      out.push_back(run_criterion(id, opt));
  return out;
}

bool suite_passed(const std::vector<CriterionResult>& r) {
  return std::none_of(r.begin(), r.end(), [](const CriterionResult& x) { return x.status == CriterionStatus::Fail; });
}

json suite_to_json(const std::vector<CriterionResult>& r) {
  json rows = json::array();
  int pass = 0, fail = 0, skip = 0;
  for (const auto& x : r) {
    (x.status == CriterionStatus::Pass ? pass : x.status == CriterionStatus::Fail ? fail : skip)++;
    rows.push_back(json{{"id", x.id},
                        {"title", x.title},
                        {"status", criterion_status_name(x.status)},
                        {"reason", x.reason},
                        {"seconds", std::round(x.seconds * 1000) / 1000},
                        {"failures", x.failures},
                        {"detail", x.detail}});
  }
  return json{{"pass", fail == 0}, {"passed", pass}, {"failed", fail}, {"skipped", skip}, {"criteria", rows}};
}

std::string suite_markdown(const json& s) {
  std::ostringstream o;
  o << "| # | criterion | status | seconds | note |\n|---|---|---|---|---|\n";
  for (const auto& row : s.at("criteria")) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", row.at("seconds").get<double>());
    o << "| " << row.at("id").get<int>() << " | " << row.at("title").get<std::string>() << " | "
      << row.at("status").get<std::string>() << " | " << secs << " | " << row.at("reason").get<std::string>() << " |\n";
  }
  o << "\n" << s.at("passed").get<int>() << " passed, " << s.at("failed").get<int>() << " failed, "
    << s.at("skipped").get<int>() << " skipped\n";
  return o.str();
}

}  // namespace qhopf
