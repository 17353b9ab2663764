#include "doctest.h"
#include "qhopf/classify.hpp"
#include "qhopf/invariants.hpp"
#include "qhopf/qdet.hpp"

using namespace qhopf;

TEST_CASE("permutation length") {
  CHECK(Permutation{{0, 1, 2}}.length() == 0);
  CHECK(Permutation{{2, 1, 0}}.length() == 3);
  CHECK(Permutation{{1, 2, 0}}.length() == 2);
  CHECK(Permutation::all(4).size() == 24);
}

TEST_CASE("quantum determinant, small N") {
  CycScalar q = zeta(5);
  auto P1 = quantum_matrix(1, q);
  CHECK(quantum_determinant(*P1) == NCPoly::generator(0));
  auto P2 = quantum_matrix(2, q);
  Terms ad_qbc;
  add_term(ad_qbc, {0, 3}, CycScalar(1));
  add_term(ad_qbc, {1, 2}, CycScalar(-1) * q);
  CHECK(quantum_determinant(*P2) == normalize(*P2, ad_qbc));
}

TEST_CASE("quantum determinant at N=3 against a written-out expansion") {
  CycScalar q = zeta(7);
  auto P = quantum_matrix(3, q);
  auto Y = [](int i, int j) { return static_cast<Gen>(3 * (i - 1) + (j - 1)); };
  CycScalar m = CycScalar(-1) * q;
  Terms t;
  add_term(t, {Y(1, 1), Y(2, 2), Y(3, 3)}, CycScalar(1));
  add_term(t, {Y(1, 1), Y(2, 3), Y(3, 2)}, m);
  add_term(t, {Y(1, 2), Y(2, 1), Y(3, 3)}, m);
  add_term(t, {Y(1, 2), Y(2, 3), Y(3, 1)}, m * m);
  add_term(t, {Y(1, 3), Y(2, 1), Y(3, 2)}, m * m);
  add_term(t, {Y(1, 3), Y(2, 2), Y(3, 1)}, m * m * m);
  CHECK(quantum_determinant(*P) == normalize(*P, t));
}

TEST_CASE("det_q is central") {
  for (int o = 3; o <= 8; ++o)
    for (int N : {2, 3}) {
      CAPTURE(o);
      CAPTURE(N);
      auto r = centrality_check(N, zeta(o));
      CHECK(r.central);
      CHECK(r.failures.empty());
    }
  // control: AD commutes with B and C but not with A, D (the (q - q^-1) BC term)
  auto P = quantum_matrix(2, zeta(5));
  auto ad = word_poly(*P, {0, 3});
  auto r = commutes_with_generators(*P, ad);
  CHECK_FALSE(r.central);
  CHECK(r.failures == std::vector<std::string>{P->gen_names()[0], P->gen_names()[3]});
}

TEST_CASE("Laplace expansion along every column") {
  for (int o : {3, 5, 7})
    for (int N : {2, 3})
      for (int i = 1; i <= N; ++i) {
        CHECK(laplace_check(N, zeta(o), i));
        CHECK_FALSE(laplace_check(N, zeta(o), i, true));
      }
  CHECK_THROWS_AS(laplace_check(2, zeta(5), 3), InputError);
}

TEST_CASE("ideal stability on the listed rows") {
  CycScalar q = zeta(5);
  for (int row = 1; row <= 8; ++row) {
    CAPTURE(row);
    auto s = ideal_stability(m2_row(row, q).inst);
    bool listed = row == 1 || row == 2 || row == 4 || row == 5;
    CHECK(s.g_fixes_det == listed);
    CHECK(s.x_kills_det == listed);
  }
  for (const auto& f : mn_catalog(3, q)) {
    CAPTURE(f.tag);
    auto s = ideal_stability(f.inst);
    bool listed = f.tag.rfind("mn.row1", 0) == 0 || f.tag.rfind("mn.row2", 0) == 0 || f.tag.rfind("mn.row5", 0) == 0 ||
                  f.tag.rfind("mn.row6", 0) == 0;
    CHECK(s.g_fixes_det == listed);
    CHECK(s.x_kills_det == listed);
  }
  CHECK_THROWS_AS(ideal_stability(plane_taft_instance(3, 3)), InputError);
}
