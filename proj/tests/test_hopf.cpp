#include "doctest.h"
#include "gen.hpp"
#include "qhopf/hopf.hpp"

using namespace qhopf;

namespace {

// Quantum plane u v = mu v u, g = diag(a1, a2), x . v = eta u, Taft of order n.
ActionInstance plane_instance(int k, int m, const CycScalar& a1, const CycScalar& eta = CycScalar(1),
                              int lam_exp = 1) {
  int n = static_cast<int>(lcm_int(k, m));
  CycScalar mu = zeta(k), lam = zeta(m, lam_exp);
  ActionInstance inst;
  inst.pres = quantum_plane(mu);
  inst.hopf = TaftSpec{n, m, lam, CycScalar(0)};
  inst.grouplikes = {GrouplikeAction::diagonal({a1, lam.inv() * mu})};
  Matrix X(2, 2);
  X.at(0, 1) = eta;
  inst.skews = {X};
  return inst;
}

NCPoly random_poly(const Presentation& P, int maxlen) {
  NCPoly p;
  Terms raw;
  for (int k = 0; k < 3; ++k) {
    Word w;
    int len = testgen::uniform(0, maxlen);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Gen>(testgen::uniform(0, P.num_gens() - 1)));
    add_term(raw, w, CycScalar(testgen::uniform(-3, 3)));
  }
  return normalize(P, raw);
}

}  // namespace

TEST_CASE("grouplike action on a word") {
  CycScalar mu = zeta(5), lam = zeta(3);
  auto P = quantum_plane(mu);
  auto g = GrouplikeAction::diagonal({mu, lam.inv() * mu});
  NCPoly uv = word_poly(*P, {0, 1});
  CHECK(act_grouplike(*P, g, uv) == (lam.inv() * mu * mu) * uv);
  CHECK(act_grouplike(*P, GrouplikeAction::identity(2), uv) == uv);
}

TEST_CASE("grouplike composition matches matrix product") {
  GrouplikeAction a{{1, 2, 0}, {zeta(5), zeta(5, 2), CycScalar(3)}};
  GrouplikeAction b{{2, 0, 1}, {CycScalar(2), zeta(3), zeta(4)}};
  CHECK((a * b).matrix() == a.matrix() * b.matrix());
  CHECK(a.pow(3).matrix() == a.matrix().pow(3));
}

TEST_CASE("twisted Leibniz expansion") {
  auto inst = plane_instance(5, 3, zeta(5), CycScalar(7));
  const auto& P = *inst.pres;
  // x . (u v) = (g u)(x v) = mu * eta u^2
  CHECK(act_skew(inst, 0, word_poly(P, {0, 1})) == word_poly(P, {0, 0}, zeta(5) * CycScalar(7)));
  CHECK(act_skew(inst, 0, NCPoly::one()).is_zero());
  CHECK(act_skew(inst, 0, word_poly(P, {0, 0})).is_zero());
}

TEST_CASE("Leibniz rule holds on products for a verified action") {
  auto inst = plane_instance(5, 3, zeta(5));
  REQUIRE(verify_module_algebra(inst).pass);
  const auto& P = *inst.pres;
  auto g = skew_grouplike(inst, 0);
  for (int trial = 0; trial < 40; ++trial) {
    NCPoly a = random_poly(P, 3), b = random_poly(P, 3);
    NCPoly lhs = act_skew(inst, 0, multiply(P, a, b));
    NCPoly rhs = multiply(P, act_grouplike(P, g, a), act_skew(inst, 0, b)) + multiply(P, act_skew(inst, 0, a), b);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("plane action verifies, perturbed action fails with a witness") {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {5, 5}}) {
    auto good = plane_instance(k, m, zeta(k));
    CHECK(verify_module_algebra(good).pass);
  }
  auto bad = plane_instance(5, 3, zeta(5, 2));
  Report r = verify_module_algebra(bad);
  CHECK(!r.pass);
  bool found_b = false;
  for (const auto& v : r.violations)
    if (v.axiom == "b") {
      found_b = true;
      // (alpha_1 - mu) u^2
      CHECK(v.normal_form == word_poly(*bad.pres, {0, 0}, zeta(5, 2) - zeta(5)));
    }
  CHECK(found_b);
}

TEST_CASE("shape mismatch is an input error") {
  auto inst = plane_instance(3, 3, zeta(3));
  inst.skews[0] = Matrix(3, 3);
  CHECK_THROWS_AS(verify_module_algebra(inst), InputError);
  auto inst2 = plane_instance(3, 3, zeta(3));
  inst2.hopf = TaftSpec{3, 3, zeta(3), CycScalar(1)};
  CHECK_THROWS_AS(verify_module_algebra(inst2), InputError);
}

TEST_CASE("relation operators vanish in higher degrees") {
  auto inst = plane_instance(4, 3, zeta(4));
  REQUIRE(verify_module_algebra(inst).pass);
  for (int d = 1; d <= 3; ++d)
    for (const auto& rel : relation_operators(inst, d)) CHECK_MESSAGE(rel.value.is_zero(), rel.name);
  // operator of x^2 on degree one is the matrix square
  CHECK(operator_matrix(inst, {{true, 0}, {true, 0}}, 1) == inst.skews[0].pow(2));
  CHECK(operator_matrix(inst, {{false, 0}}, 1) == inst.grouplikes[0].matrix());
}

TEST_CASE("scaling the skew matrix preserves verification") {
  for (long c : {1L, 2L}) {
    auto inst = plane_instance(5, 5, zeta(5), CycScalar(c));
    CHECK(verify_module_algebra(inst).pass);
  }
}

TEST_CASE("quantum linear space data") {
  QLSData z9;
  z9.G.orders = {9};
  z9.g = {{1}, {4}};
  z9.chi = {{3}, {6}};
  CHECK(validate_qls(z9).pass);
  CHECK(z9.lambda(0) == zeta(3));
  QLSData bad1;
  bad1.G.orders = {5};
  bad1.g = {{1}};
  bad1.chi = {{0}};
  CHECK(!validate_qls(bad1).pass);
  QLSData bad2;
  bad2.G.orders = {3};
  bad2.g = {{1}, {1}};
  bad2.chi = {{1}, {1}};
  CHECK(!validate_qls(bad2).pass);  // chi_1(g_2) chi_2(g_1) = zeta_3^2
}

TEST_CASE("faithfulness of Taft data") {
  CHECK(is_faithful_qls(qls_view(TaftSpec{5, 5, zeta(5), CycScalar(0)})).faithful);
  auto f = is_faithful_qls(qls_view(TaftSpec{12, 3, zeta(3), CycScalar(0)}));
  CHECK(!f.faithful);
  REQUIRE(f.kernel_generators.size() == 1);
  CHECK(f.kernel_generators[0] == GroupElem{3});
}

TEST_CASE("inner faithfulness verdicts") {
  auto inst = plane_instance(5, 5, zeta(5));
  CHECK(inner_faithfulness(inst).verdict == InnerVerdict::InnerFaithful);
  auto zero = inst;
  zero.skews[0] = Matrix(2, 2);
  CHECK(inner_faithfulness(zero).verdict == InnerVerdict::NotInnerFaithful);
  // n = lcm(4,3) = 12, g of order 12 acts faithfully
  CHECK(inner_faithfulness(plane_instance(4, 3, zeta(4))).verdict == InnerVerdict::InnerFaithful);
  // two skews on one grouplike with m = 2 and a non-faithful QLS
  ActionInstance two;
  two.pres = quantum_affine(unit_p(2));
  QLSData q;
  q.G.orders = {4};
  q.g = {{1}, {1}};
  q.chi = {{2}, {2}};
  two.hopf = BosonizationSpec{q, CycScalar(0)};
  two.grouplikes = {GrouplikeAction::diagonal({zeta(4), zeta(4, 3)})};
  Matrix X(2, 2);
  X.at(0, 1) = 1;
  two.skews = {X, X};
  CHECK(inner_faithfulness(two).verdict == InnerVerdict::HypothesesUnmet);
}

TEST_CASE("dual action on the exterior algebra") {
  auto inst = plane_instance(5, 3, zeta(5));
  auto d = dual_action(inst);
  CHECK(d.pres->family() == Family::QuantumExterior);
  CHECK(verify_module_algebra(d).pass);
  // y . u* = v*
  CHECK(d.skews[0].at(1, 0) == CycScalar(1));
  auto z = inst;
  z.skews[0] = Matrix(2, 2);
  CHECK(dual_action(z).skews[0].is_zero());
  CHECK_THROWS_AS(dual_action(d), InputError);
}
