#include <array>
#include <set>
#include <tuple>

#include "doctest.h"
#include "gen.hpp"
#include "qhopf/classify.hpp"
#include "qhopf/reference.hpp"

using namespace qhopf;

namespace {

using Pos = std::pair<int, int>;

std::set<Pos> as_set(const std::vector<Pos>& v) { return {v.begin(), v.end()}; }

int qexp(const CycScalar& z, const CycScalar& q) {
  auto k = log_base(z, q);
  REQUIRE(k.has_value());
  return *k;
}

// Degree-two normal coordinates in the quantum plane (uu, uv, vv), vu = mu^-1 uv.
struct Deg2 {
  CycScalar uu, uv, vv;
  bool operator==(const Deg2& o) const { return uu == o.uu && uv == o.uv && vv == o.vv; }
};

Deg2 plane_mul(const std::array<CycScalar, 2>& a, const std::array<CycScalar, 2>& b, const CycScalar& mu) {
  return {a[0] * b[0], a[0] * b[1] + mu.inv() * a[1] * b[0], a[1] * b[1]};
}

Deg2 plane_add(const Deg2& a, const Deg2& b) { return {a.uu + b.uu, a.uv + b.uv, a.vv + b.vv}; }

// (lambda exponent, g entries as exponents, anti-diagonal?, x position)
using PlaneHit = std::tuple<int, int, int, bool, int, int>;

// Brute force over diagonal / anti-diagonal g in mu_L and single-entry x with eta = 1,
// checking that uv = mu vu is respected by g and by x (twisted Leibniz) and g x = lambda x g.
std::set<PlaneHit> plane_oracle(int k, int m) {
  int L = static_cast<int>(lcm_int(k, m));
  CycScalar mu = zeta(k);
  std::set<PlaneHit> hits;
  for (int le = 1; le < m; ++le) {
    if (gcd_int(le, m) != 1) continue;
    CycScalar lam = zeta(m, le);
    for (int a = 0; a < L; ++a)
      for (int b = 0; b < L; ++b)
        for (bool anti : {false, true}) {
          // g(u), g(v) as coordinates in (u, v)
          std::array<CycScalar, 2> gu{CycScalar(0), CycScalar(0)}, gv = gu;
          if (anti) {
            gu[1] = zeta(L, a);
            gv[0] = zeta(L, b);
          } else {
            gu[0] = zeta(L, a);
            gv[1] = zeta(L, b);
          }
          Deg2 guv = plane_mul(gu, gv, mu), gvu = plane_mul(gv, gu, mu);
          if (!(guv == Deg2{mu * gvu.uu, mu * gvu.uv, mu * gvu.vv})) continue;
          for (int i = 0; i < 2; ++i)
            for (int c = 0; c < 2; ++c) {
              // x . u_c = u_i, other generator to 0
              std::array<CycScalar, 2> xu{CycScalar(0), CycScalar(0)}, xv = xu;
              (c == 0 ? xu : xv)[i] = CycScalar(1);
              std::array<CycScalar, 2> u{CycScalar(1), CycScalar(0)}, v{CycScalar(0), CycScalar(1)};
              Deg2 xuv = plane_add(plane_mul(gu, xv, mu), plane_mul(xu, v, mu));
              Deg2 xvu = plane_add(plane_mul(gv, xu, mu), plane_mul(xv, u, mu));
              if (!(xuv == Deg2{mu * xvu.uu, mu * xvu.uv, mu * xvu.vv})) continue;
              // g x = lambda x g on both generators
              bool ok = true;
              for (int s = 0; s < 2; ++s) {
                const auto& gs = s == 0 ? gu : gv;
                std::array<CycScalar, 2> lhs{CycScalar(0), CycScalar(0)}, rhs = lhs;
                const auto& xs = s == 0 ? xu : xv;
                // g(x(u_s)) and x(g(u_s)), all maps linear on degree one
                for (int r = 0; r < 2; ++r) {
                  const auto& gr = r == 0 ? gu : gv;
                  const auto& xr = r == 0 ? xu : xv;
                  for (int w = 0; w < 2; ++w) {
                    lhs[w] += xs[r] * gr[w];
                    rhs[w] += lam * gs[r] * xr[w];
                  }
                }
                if (lhs != rhs) ok = false;
              }
              if (ok) hits.insert({le, a, b, anti, i, c});
            }
        }
  }
  return hits;
}

std::set<PlaneHit> plane_library_hits(const SearchResult& r, int k, int m) {
  int L = static_cast<int>(lcm_int(k, m));
  std::set<PlaneHit> out;
  for (const auto& f : r.families) {
    REQUIRE(f.params.size() == 1);
    const Matrix& X = f.params[0];
    const GrouplikeAction& g = f.g();
    bool anti = g.perm[0] == 1;
    int a = *discrete_log(g.alpha[0], L), b = *discrete_log(g.alpha[1], L);
    for (int i = 0; i < 2; ++i)
      for (int c = 0; c < 2; ++c)
        if (!X.at(i, c).is_zero()) {
          CHECK(X.at(i, c) == CycScalar(1));
          out.insert({*discrete_log(f.lambda(), m), a, b, anti, i, c});
        }
  }
  return out;
}

}  // namespace

TEST_CASE("skew_support examples") {
  CycScalar mu = zeta(5), lam = zeta(3);
  CHECK(as_set(skew_support(GrouplikeAction::diagonal({mu, lam.inv() * mu}), lam)) == std::set<Pos>{{0, 1}});
  auto g = GrouplikeAction::diagonal({zeta(7), zeta(7, 3), zeta(7, 5)});
  auto s = as_set(skew_support(g, CycScalar(1)));
  for (int i = 0; i < 3; ++i) CHECK(s.count({i, i}));
  CycScalar l4 = zeta(4), a = zeta(5, 2);
  CHECK(as_set(skew_support(GrouplikeAction::diagonal({a, l4 * a, l4 * l4 * a}), l4)) ==
        std::set<Pos>{{1, 0}, {2, 1}});
  GrouplikeAction anti;
  anti.perm = {1, 0};
  anti.alpha = {CycScalar(1), CycScalar(1)};
  CHECK_THROWS_AS(skew_support(anti, lam), InputError);
}

TEST_CASE("generically nilpotent spans") {
  Matrix e01(2, 2), e10(2, 2), e02(3, 3), e12(3, 3);
  e01.at(0, 1) = 1;
  e10.at(1, 0) = 1;
  e02.at(0, 2) = 1;
  e12.at(1, 2) = 1;
  CHECK(generically_nilpotent({e01}, 2));
  CHECK_FALSE(generically_nilpotent({e01, e10}, 2));
  CHECK_FALSE(generically_nilpotent({e01, e10}, 5));
  CHECK(generically_nilpotent({e02, e12}, 2));
}

TEST_CASE("quantum plane census matches the brute-force oracle") {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {5, 5}}) {
    CAPTURE(k);
    CAPTURE(m);
    SearchGrid grid;
    grid.oracle = true;
    auto r = enumerate_taft_qplane(k, m, false, grid);
    CHECK(r.cross.pass);
    auto oracle = plane_oracle(k, m);
    CHECK(plane_library_hits(r, k, m) == oracle);
    std::set<std::string> tags;
    for (const auto& f : r.families) {
      tags.insert(f.tag);
      CHECK(verify_module_algebra(f.inst).pass);
    }
    CHECK(tags == std::set<std::string>{"plane-a", "plane-b"});
    if (k == 3 && m == 3) CHECK(oracle.size() == 4);
  }
}

TEST_CASE("first Weyl algebra: family (a) needs lambda = mu^2") {
  SearchGrid grid;
  grid.oracle = true;
  auto r33 = enumerate_taft_qplane(3, 3, true, grid);
  CHECK(r33.cross.pass);
  int a = 0;
  for (const auto& f : r33.families)
    if (f.tag == "weyl-a") {
      ++a;
      CHECK(f.lambda() == zeta(3) * zeta(3));
    }
  CHECK(a == 1);
  auto r34 = enumerate_taft_qplane(3, 4, true, grid);
  for (const auto& f : r34.families) CHECK(f.tag != "weyl-a");
}

TEST_CASE("plane max rank is two with inverse characters") {
  auto r = enumerate_taft_qplane(5, 5, false, SearchGrid{});
  auto mr = max_rank(r.families);
  CHECK(mr.theta == 2);
  REQUIRE(mr.characters.size() == 2);
  CHECK(mr.characters[0][1] * mr.characters[1][0] == CycScalar(1));
  CHECK(mr.witness_verify.pass);
  CHECK(mr.witness_qls.pass);
}

TEST_CASE("M_2 catalog rows verify") {
  for (int o : {5, 7}) {
    for (const auto& f : m2_catalog(zeta(o))) {
      CAPTURE(f.tag);
      CHECK(verify_module_algebra(f.inst).pass);
    }
  }
  for (const auto& f : m2_catalog(zeta(3), true)) {
    CAPTURE(f.tag);
    CHECK(verify_module_algebra(f.inst).pass);
  }
}

TEST_CASE("M_2 search by lambda") {
  CycScalar q = zeta(5);
  auto tags = [](const SearchResult& r) {
    std::set<std::string> s;
    for (const auto& f : r.families) s.insert(f.tag);
    return s;
  };
  CHECK(tags(enumerate_taft_matrix(2, q, q * q, SearchGrid{})) ==
        std::set<std::string>{"m2.row1", "m2.row2", "m2.row3"});
  CHECK(tags(enumerate_taft_matrix(2, q, q.pow(4), SearchGrid{})) == std::set<std::string>{"m2.row7"});
  // q = q^-4 at order 5, so row 8 appears; order 7 separates them
  CHECK(tags(enumerate_taft_matrix(2, q, q, SearchGrid{})) == std::set<std::string>{"m2.row8"});
  CHECK(enumerate_taft_matrix(2, zeta(7), zeta(7), SearchGrid{}).families.empty());
}

TEST_CASE("M_2 pair compatibility examples") {
  CycScalar q = zeta(5);
  auto r12 = compatibility(m2_row(1, q), m2_row(2, q));
  REQUIRE(r12.compatible);
  CHECK(*r12.zeta == CycScalar(1));
  CHECK(r12.constraints.empty());
  auto r16 = compatibility(m2_row(1, q), m2_row(6, q));
  REQUIRE(r16.compatible);
  CHECK(*r16.zeta == q.pow(-2));
  REQUIRE(r16.constraints.size() == 1);
  CHECK(r16.constraints[0].rfind("delta", 0) == 0);
  CHECK(r16.constraints[0].find("_i = 0") != std::string::npos);
  auto r38 = compatibility(m2_row(3, q), m2_row(8, q));
  CHECK_FALSE(r38.compatible);
  CHECK_FALSE(r38.zeta.has_value());
}

TEST_CASE("compatibility is symmetric up to inversion") {
  for (int o : {5, 6}) {
    auto cat = m2_catalog(zeta(o));
    for (size_t a = 0; a < cat.size(); ++a)
      for (size_t b = 0; b < cat.size(); ++b) {
        auto ab = compatibility(cat[a], cat[b]), ba = compatibility(cat[b], cat[a]);
        CHECK(ab.compatible == ba.compatible);
        CHECK(ab.zeta.has_value() == ab.compatible);
        if (ab.compatible) CHECK(*ab.zeta * *ba.zeta == CycScalar(1));
      }
  }
  auto cat = mn_catalog(3, zeta(5));
  for (size_t a = 0; a < cat.size(); ++a)
    for (size_t b = 0; b < cat.size(); ++b) {
      auto ab = compatibility(cat[a], cat[b]), ba = compatibility(cat[b], cat[a]);
      REQUIRE(ab.compatible == ba.compatible);
      if (ab.compatible) CHECK(*ab.zeta * *ba.zeta == CycScalar(1));
    }
}

TEST_CASE("M_N compatibility matches the printed table") {
  CycScalar q = zeta(5);
  for (int N : {3, 4}) {
    auto cat = mn_catalog(N, q);
    auto labels = mn_catalog_labels(N);
    REQUIRE(cat.size() == labels.size());
    int cells = 0, dashes = 0;
    for (size_t j = 0; j < cat.size(); ++j)
      for (size_t i = 0; i < cat.size(); ++i) {
        CAPTURE(N);
        CAPTURE(cat[j].tag);
        CAPTURE(cat[i].tag);
        auto want = mn_compat_reference(labels[j], labels[i], N);
        auto got = compatibility(cat[j], cat[i]);
        REQUIRE(got.compatible == want.has_value());
        if (want) CHECK(mod_floor(qexp(*got.zeta, q) - *want, 5) == 0);
        ++cells;
        if (!want) ++dashes;
      }
    CHECK(cells >= 16);
    CHECK(dashes > 0);
  }
}

TEST_CASE("M_N catalog and max rank at N=3") {
  CycScalar q = zeta(5);
  auto cat = mn_catalog(3, q);
  for (const auto& f : cat) {
    CAPTURE(f.tag);
    CHECK(verify_module_algebra(f.inst).pass);
  }
  auto mr = max_rank(cat);
  CHECK(mr.theta == 4);
  CHECK(mr.witness_verify.pass);
  CHECK(mr.witness_inner.verdict == InnerVerdict::InnerFaithful);
  auto ex = build_example("mn-patch");
  CHECK(verify_module_algebra(ex).pass);
  CHECK(validate_qls(qls_view(ex.hopf)).pass);
}

TEST_CASE("M_2 max rank and the rank-three example") {
  CycScalar q = zeta(5);
  auto mr = max_rank(m2_catalog(q));
  CHECK(mr.theta == 3);
  CHECK(mr.raw_clique_number == 3);
  CHECK_FALSE(mr.witness_reduced);
  auto ex = build_example("m2-rank3");
  CHECK(verify_module_algebra(ex).pass);
  CHECK(validate_qls(qls_view(ex.hopf)).pass);
  CHECK(inner_faithfulness(ex).verdict == InnerVerdict::InnerFaithful);
  CHECK(qls_view(ex.hopf).G.orders == std::vector<int>{5, 5, 5});
}

TEST_CASE("M_2 at q^6 = 1: four-cliques are rejected") {
  auto mr = max_rank(m2_catalog(zeta(6)));
  CHECK(mr.raw_clique_number == 4);
  CHECK(mr.theta == 3);
  CHECK(mr.rejected.size() == 2);
}

TEST_CASE("affine search: trivial extensions and the structure lemma") {
  SearchGrid grid;
  grid.oracle = true;
  auto r = enumerate_taft_affine(affine_default_p(3), 5, grid);
  CHECK(r.cross.pass);
  REQUIRE_FALSE(r.families.empty());
  for (const auto& f : r.families) {
    CAPTURE(f.tag);
    CHECK(f.tag.rfind("ext-A", 0) == 0);
    CHECK(f.tag.size() == 7);  // no A_ijk chains at m = 5
    CHECK(f.g().is_diagonal());
    // an arbitrary member of the span
    std::vector<CycScalar> c;
    for (size_t b = 0; b < f.params.size(); ++b) c.push_back(CycScalar(static_cast<long>(b) + 2));
    Matrix X = f.member(c).skews[0];
    for (int i = 0; i < 3; ++i) {
      int row = 0, col = 0;
      for (int k = 0; k < 3; ++k) {
        row += !X.at(i, k).is_zero();
        col += !X.at(k, i).is_zero();
      }
      CHECK(row <= 1);
      CHECK(col <= 1);
      for (int k = 0; k < 3; ++k) CHECK((X.at(i, k) * X.at(k, i)).is_zero());
    }
    CHECK(X.pow(3).is_zero());
  }
}

TEST_CASE("affine search with permuted grouplikes finds nothing inner faithful") {
  for (int o : {4, 5}) {
    std::vector<std::vector<CycScalar>> p(3, std::vector<CycScalar>(3, CycScalar(1)));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        p[i][j] = zeta(o, i + j == 2 ? 1 : o - 1);
        p[j][i] = p[i][j].inv();
      }
    auto r = enumerate_taft_affine(p, o, SearchGrid{});
    for (const auto& f : r.families)
      if (!f.g().is_diagonal()) CHECK(inner_faithfulness(f.inst).verdict != InnerVerdict::InnerFaithful);
  }
}

TEST_CASE("affine hypotheses are input errors") {
  CHECK_THROWS_AS(enumerate_taft_affine(affine_default_p(2), 5, SearchGrid{}), InputError);
  CHECK_THROWS_AS(enumerate_taft_affine(affine_default_p(3), 2, SearchGrid{}), InputError);
  CHECK_THROWS_AS(enumerate_taft_affine(unit_p(3), 5, SearchGrid{}), InputError);
}

TEST_CASE("two disjoint skew entries on four variables never act") {
  auto P = quantum_affine(affine_default_p(4));
  CycScalar lam = zeta(5);
  int checked = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      ActionInstance inst;
      inst.pres = P;
      inst.hopf = TaftSpec{5, 5, lam, CycScalar(0)};
      CycScalar a1 = zeta(5, a), a3 = zeta(5, b);
      inst.grouplikes = {GrouplikeAction::diagonal({lam * a1, a1, lam * a3, a3})};
      Matrix X(4, 4);
      X.at(0, 1) = 1;
      X.at(2, 3) = 1;
      inst.skews = {X};
      CHECK_FALSE(verify_module_algebra(inst).pass);
      ++checked;
    }
  CHECK(checked == 25);
}

TEST_CASE("non-nilpotent cycle with gamma") {
  auto ex = build_example("affine-cycle-gamma");
  CHECK(verify_module_algebra(ex).pass);
  const auto& T = std::get<TaftSpec>(ex.hopf);
  CHECK(T.m == 3);
  CHECK_FALSE(T.gamma.is_zero());
  CHECK(T.gamma == (zeta(9).pow(3) - CycScalar(1)).inv());
  const Matrix& X = ex.skews[0];
  Matrix G = ex.grouplikes[0].matrix();
  CHECK(X.pow(3) == T.gamma * (G.pow(3) - Matrix::identity(3)));
  CHECK_FALSE(X.pow(3).is_zero());
}

TEST_CASE("affine chains need lambda^3 = 1") {
  auto ex = build_example("affine-chain");
  CHECK(verify_module_algebra(ex).pass);
  CHECK(std::get<TaftSpec>(ex.hopf).lambda.pow(3) == CycScalar(1));
}

TEST_CASE("affine sharpness construction") {
  auto ex = build_example("affine-sharp");
  CHECK(hopf_rank(ex.hopf) == 4);
  CHECK(verify_module_algebra(ex).pass);
  CHECK(validate_qls(qls_view(ex.hopf)).pass);
}

TEST_CASE("faithful image removes a trivially acting subgroup") {
  auto r = enumerate_taft_affine(affine_default_p(3), 5, SearchGrid{});
  auto mr = max_rank(r.families);
  CHECK(mr.theta == 4);
  CHECK(mr.witness_verify.pass);
  CHECK(mr.witness_qls.pass);
  CHECK(mr.witness_inner.verdict == InnerVerdict::InnerFaithful);
  CHECK(qls_view(mr.witness.hopf).G.order() <= 125);
}

TEST_CASE("Weyl example does not preserve the filtration") {
  auto ex = build_example("weyl-a2");
  CHECK(verify_module_algebra(ex).pass);
  const Presentation& P = *ex.pres;
  const Matrix& X = ex.skews[0];
  bool raises = false;
  for (int k = 0; k < P.num_gens(); ++k)
    for (int i = 0; i < P.num_gens(); ++i)
      if (!X.at(i, k).is_zero() && P.weight(static_cast<Gen>(i)) > P.weight(static_cast<Gen>(k))) raises = true;
  CHECK(raises);
}

TEST_CASE("unknown example id") { CHECK_THROWS_AS(build_example("nope"), InputError); }

TEST_CASE("worker count does not change search output") {
  SearchGrid one, three;
  three.workers = 3;
  auto a = enumerate_taft_matrix(2, zeta(5), zeta(5, 2), one);
  auto b = enumerate_taft_matrix(2, zeta(5), zeta(5, 2), three);
  REQUIRE(a.families.size() == b.families.size());
  for (size_t i = 0; i < a.families.size(); ++i) CHECK(family_key(a.families[i]) == family_key(b.families[i]));
}

TEST_CASE("M_2 compatibility matches the transcribed table") {
  for (int o : {5, 6}) {
    CycScalar q = zeta(o);
    auto cat = m2_catalog(q);
    for (int j = 1; j <= 8; ++j)
      for (int i = 1; i <= 8; ++i) {
        CAPTURE(o);
        CAPTURE(j);
        CAPTURE(i);
        auto want = m2_compat_reference(j, i);
        bool expect = want.compatible && (!want.needs_q6 || o == 6);
        auto got = compatibility(cat[j - 1], cat[i - 1]);
        REQUIRE(got.compatible == expect);
        if (!expect) continue;
        CHECK(mod_floor(qexp(*got.zeta, q) - want.zeta_exp, o) == 0);
        CHECK(got.constraints == want.constraints);
      }
  }
}
