#include <algorithm>

#include "doctest.h"
#include "gen.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/ncalg.hpp"

using namespace qhopf;

namespace {

std::vector<std::vector<CycScalar>> random_p(int t, int L) {
  auto p = unit_p(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      p[i][j] = testgen::random_root(L);
      p[j][i] = p[i][j].inv();
    }
  return p;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Straightening by explicit adjacent swaps, one at a time.
Terms bubble_oracle(const Presentation& pres, Word w) {
  const auto& p = pres.spec().p;
  bool ext = pres.family() == Family::QuantumExterior;
  CycScalar c(1);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        // u_a u_b = p_ab u_b u_a (affine) or -p_ba u_b u_a (exterior)
        c *= ext ? -p[w[j + 1]][w[j]] : p[w[j]][w[j + 1]];
        std::swap(w[j], w[j + 1]);
      }
  Terms out;
  if (ext && std::adjacent_find(w.begin(), w.end()) != w.end()) return out;
  add_term(out, w, c);
  return out;
}

Word random_word(int n, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<Gen>(testgen::uniform(0, n - 1)));
  return w;
}

// dim of degree-d part of the free algebra modulo the two-sided ideal of the
// relations, computed from the relations only.
long quotient_dim(const Presentation& pres, int d) {
  int n = pres.num_gens();
  std::vector<Word> words;
  Word cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == d) {
      words.push_back(cur);
      return;
    }
    for (int g = 0; g < n; ++g) {
      cur.push_back(static_cast<Gen>(g));
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::map<Word, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  RowReducer rr(static_cast<int>(words.size()));
  for (const auto& r : pres.relations())
    for (int left = 0; left + 2 <= d; ++left)
      for (const auto& w : words) {
        SparseRow row;
        for (const auto& [rw, rc] : r) {
          Word x(w.begin(), w.begin() + left);
          x.insert(x.end(), rw.begin(), rw.end());
          x.insert(x.end(), w.begin() + left + 2, w.end());
          row[index[x]] += rc;
        }
        // only use each (left, right) context once: w's middle two letters are ignored
        if (w[left] == 0 && w[left + 1] == 0) rr.add(row);
      }
  return static_cast<long>(words.size()) - rr.rank();
}

}  // namespace

TEST_CASE("quantum plane relation") {
  CycScalar mu = zeta(5, 2);
  auto A = quantum_plane(mu);
  // u2 u1 = mu^-1 u1 u2
  NCPoly r = word_poly(*A, {1, 0});
  CHECK(r == word_poly(*A, {0, 1}, mu.inv()));
  CHECK(A->gen_names() == std::vector<std::string>{"u1", "u2"});
}

TEST_CASE("straightening matches adjacent-swap oracle") {
  for (int trial = 0; trial < 120; ++trial) {
    int t = testgen::uniform(1, 4);
    auto A = quantum_affine(random_p(t, testgen::uniform(1, 9)));
    for (auto P : {A, koszul_dual(*A)}) {
      Word w = random_word(t, testgen::uniform(0, 6));
      Terms raw;
      add_term(raw, w, 1);
      NCPoly fast = normalize(*P, raw);
      NCPoly slow = normalize_by_rules(*P, raw);
      CHECK(fast == slow);
      CHECK(fast.terms == bubble_oracle(*P, w));
    }
  }
}

TEST_CASE("relations reduce to zero") {
  auto check = [](const Presentation& P) {
    for (const auto& r : P.relations()) {
      CHECK(normalize(P, r).is_zero());
      CHECK(normalize_by_rules(P, r).is_zero());
    }
  };
  check(*quantum_affine(random_p(3, 7)));
  check(*koszul_dual(*quantum_affine(random_p(3, 7))));
  check(*quantum_matrix(2, zeta(5)));
  check(*quantum_matrix(3, zeta(7, 3)));
  check(*quantized_weyl(random_p(3, 5), {zeta(5), zeta(5, 2), CycScalar(3)}));
}

TEST_CASE("confluence of every family") {
  for (int trial = 0; trial < 10; ++trial) {
    int L = testgen::uniform(2, 12);
    CHECK(confluence_check(*quantum_affine(random_p(3, L))).pass);
    CHECK(confluence_check(*koszul_dual(*quantum_affine(random_p(3, L)))).pass);
    auto gam = std::vector<CycScalar>{testgen::random_root(L), testgen::random_root(L)};
    auto W = quantized_weyl(random_p(2, L), gam);
    auto rep = confluence_check(*W);
    CHECK(rep.pass);
    CHECK(rep.overlaps_checked > 0);
  }
  CHECK(confluence_check(*quantum_matrix(2, zeta(5))).pass);
  CHECK(confluence_check(*quantum_matrix(3, zeta(6))).pass);
  CHECK(confluence_check(*quantum_matrix(2, CycScalar(Rational(3, 2)))).pass);
  CHECK(confluence_check(*quantized_weyl(unit_p(3), {CycScalar(2), zeta(3), zeta(4)})).pass);
}

TEST_CASE("overlap count") {
  auto rep = confluence_check(*quantum_matrix(2, zeta(5)));
  CHECK(rep.overlaps_checked == 4);  // descending triples among four generators
  auto ext = confluence_check(*koszul_dual(*quantum_affine(unit_p(2))));
  CHECK(ext.overlaps_checked == 4);  // aaa, baa, bba, bbb
}

TEST_CASE("hilbert coefficients") {
  for (int t = 1; t <= 4; ++t) {
    auto A = quantum_affine(random_p(t, 5));
    auto h = hilbert_coeffs(*A, 6);
    auto E = hilbert_coeffs(*koszul_dual(*A), 6);
    for (int d = 0; d <= 6; ++d) {
      CHECK(h[d] == binom(d + t - 1, t - 1));
      CHECK(E[d] == binom(t, d));
      CHECK(static_cast<long>(basis(*A, d).size()) == h[d]);
    }
  }
  auto h = hilbert_coeffs(*quantum_matrix(3, zeta(5)), 4);
  CHECK(h[4] == binom(12, 8));
}

TEST_CASE("exterior plane dimensions") {
  CHECK(hilbert_coeffs(*koszul_dual(*quantum_plane(zeta(5, 2))), 3) == std::vector<long>{1, 2, 1, 0});
  CHECK(hilbert_coeffs(*quantum_plane(zeta(3)), 4) == std::vector<long>{1, 2, 3, 4, 5});
}

TEST_CASE("normalize is idempotent and multiply associative") {
  std::vector<PresentationPtr> ps = {quantum_affine(random_p(3, 7)), koszul_dual(*quantum_affine(random_p(3, 7))),
                                     quantum_matrix(2, zeta(7)), quantized_weyl(unit_p(2), {zeta(5), zeta(5, 3)})};
  auto random_terms = [](const Presentation& P) {
    Terms t;
    for (int i = testgen::uniform(1, 3); i > 0; --i) {
      Word w;
      for (int j = testgen::uniform(0, 3); j > 0; --j) w.push_back(static_cast<Gen>(testgen::uniform(0, P.num_gens() - 1)));
      add_term(t, w, testgen::random_scalar(7, 1));
    }
    return t;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Presentation& P = *ps[trial % ps.size()];
    NCPoly a = normalize(P, random_terms(P)), b = normalize(P, random_terms(P)), c = normalize(P, random_terms(P));
    CHECK(normalize(P, a.terms) == a);
    CHECK(multiply(P, multiply(P, a, b), c) == multiply(P, a, multiply(P, b, c)));
  }
}

TEST_CASE("PBW dimension agrees with the quotient of the free algebra") {
  std::vector<PresentationPtr> ps = {quantum_affine(random_p(3, 5)), koszul_dual(*quantum_affine(random_p(3, 5))),
                                     quantum_matrix(2, zeta(5)), quantum_matrix(2, zeta(4))};
  for (const auto& P : ps)
    for (int d = 2; d <= 3; ++d) CHECK(quotient_dim(*P, d) == static_cast<long>(basis(*P, d).size()));
}

TEST_CASE("basis is lexicographic and normal") {
  auto M = quantum_matrix(2, zeta(7));
  auto b = basis(*M, 3);
  CHECK(std::is_sorted(b.begin(), b.end()));
  for (const auto& w : b) CHECK(M->is_normal(w));
  CHECK(M->word_name(b.front()) == "Y11 Y11 Y11");
}

TEST_CASE("quantum matrix relations at N=2") {
  CycScalar q = zeta(5);
  auto M = quantum_matrix(2, q);
  Gen a = M->matrix_gen(0, 0), b = M->matrix_gen(0, 1), c = M->matrix_gen(1, 0), d = M->matrix_gen(1, 1);
  CHECK(word_poly(*M, {b, a}) == word_poly(*M, {a, b}, q.inv()));
  CHECK(word_poly(*M, {c, a}) == word_poly(*M, {a, c}, q.inv()));
  CHECK(word_poly(*M, {c, b}) == word_poly(*M, {b, c}));
  // da - ad = -(q - q^-1) bc
  NCPoly lhs = word_poly(*M, {d, a}) - word_poly(*M, {a, d});
  CHECK(lhs == word_poly(*M, {b, c}, -(q - q.inv())));
}

TEST_CASE("quantized Weyl relations and filtration") {
  CycScalar g = zeta(5, 2);
  auto W = quantized_weyl(unit_p(1), {g});
  Gen v = W->weyl_v(0), u = W->weyl_u(0);
  // u v - gamma v u = 1
  CHECK(word_poly(*W, {u, v}) - word_poly(*W, {v, u}, g) == NCPoly::one());
  CHECK_THROWS_AS(basis(*W, 2), InputError);
  auto gr = associated_graded_relations(*quantized_weyl(unit_p(2), {g, g}));
  for (const auto& r : gr) {
    int deg = -1;
    for (const auto& [w, c] : r) {
      int wd = quantized_weyl(unit_p(2), {g, g})->weighted_degree(w);
      if (deg < 0) deg = wd;
      CHECK(wd == deg);
    }
  }
  CHECK(pbw_basis_up_to_length(*W, 2).size() == 6);
}

TEST_CASE("invalid parameters are rejected") {
  auto p = unit_p(2);
  p[0][1] = zeta(5);
  p[1][0] = zeta(5);
  CHECK_THROWS_AS(quantum_affine(p), InputError);
  CHECK_THROWS_AS(quantized_weyl(unit_p(2), {CycScalar(1)}), InputError);
  CHECK_THROWS_AS(quantum_matrix(2, CycScalar(0)), InputError);
  CHECK_THROWS_AS(family_from_name("Nope"), InputError);
}
