#include "doctest.h"
#include "gen.hpp"
#include "qhopf/cyclotomic.hpp"

using namespace qhopf;
using testgen::close;
using testgen::numeric;

TEST_CASE("cyclotomic polynomials of small level") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient -2
  auto p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(p[7] == -2);
  CHECK(euler_phi(105) == 48);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("roots of unity") {
  for (int L : {1, 2, 3, 5, 8, 9, 12, 15}) {
    CycScalar z = zeta(L);
    CHECK(z.pow(L).is_one());
    CHECK(z.mult_order() == L);
    CHECK((z * z.inv()).is_one());
    CHECK(zeta(L, L + 1) == z);
    CHECK(zeta(L, -1) == z.inv());
  }
  CHECK(zeta(2) == CycScalar(-1));
  CHECK(zeta(4, 2) == CycScalar(-1));
  CHECK(zeta(6, 2) == zeta(3));
  CHECK(zeta(15, 5) == zeta(3));
  CHECK(!CycScalar(2).mult_order().has_value());
}

TEST_CASE("order of every root of unity up to level 24") {
  for (int L = 1; L <= 24; ++L)
    for (int k = 1; k <= L; ++k) {
      auto o = zeta(L, k).mult_order();
      REQUIRE(o.has_value());
      CHECK(*o == L / gcd_int(L, k));
      CHECK(zeta(L, k).pow(*o).is_one());
    }
}

TEST_CASE("power to the order is one for products of roots") {
  for (int trial = 0; trial < 100; ++trial) {
    int L1 = testgen::uniform(1, 12), L2 = testgen::uniform(1, 12);
    CycScalar a = testgen::random_root(L1) * testgen::random_root(L2);
    if (testgen::uniform(0, 1)) a = -a;
    auto o = a.mult_order();
    REQUIRE(o.has_value());
    CHECK(a.pow(*o).is_one());
    for (int d = 1; d < *o; ++d) CHECK_FALSE(a.pow(d).is_one());
  }
}

TEST_CASE("lift is a ring embedding") {
  for (int trial = 0; trial < 100; ++trial) {
    int L = testgen::uniform(1, 12), M = L * testgen::uniform(1, 4);
    CycScalar a = testgen::random_scalar(L), b = testgen::random_scalar(L);
    CHECK((a * b).lift(M) == a.lift(M) * b.lift(M));
    CHECK((a + b).lift(M) == a.lift(M) + b.lift(M));
    CHECK((a * b).lift(M).level() == M);
    CHECK(close(numeric(a.lift(M)), numeric(a)));
  }
}

TEST_CASE("sum of all primitive roots is the Moebius value") {
  CycScalar s;
  for (int k = 1; k < 12; ++k)
    if (gcd_int(k, 12) == 1) s += zeta(12, k);
  CHECK(s.is_zero());
  CycScalar t;
  for (int k = 1; k < 10; ++k)
    if (gcd_int(k, 10) == 1) t += zeta(10, k);
  CHECK(t == CycScalar(1));
}

TEST_CASE("field arithmetic agrees with complex evaluation") {
  for (int trial = 0; trial < 200; ++trial) {
    int L1 = testgen::uniform(1, 16), L2 = testgen::uniform(1, 16);
    CycScalar a = testgen::random_scalar(L1), b = testgen::random_scalar(L2);
    CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
    CHECK(close(numeric(a - b), numeric(a) - numeric(b)));
    CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
    if (!b.is_zero()) {
      CHECK(close(numeric(a / b), numeric(a) / numeric(b), 1e-6));
      CHECK((b * b.inv()).is_one());
    }
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("field axioms on random triples") {
  for (int trial = 0; trial < 100; ++trial) {
    int L = testgen::uniform(1, 20);
    CycScalar a = testgen::random_scalar(L), b = testgen::random_scalar(L), c = testgen::random_scalar(L);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycScalar(0));
    CHECK(a.lift(L * 3) == a);
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(CycScalar(0).inv(), ArithmeticError);
  CHECK_THROWS_AS(CycScalar(1) / (zeta(3) + zeta(3, 2) + CycScalar(1)), ArithmeticError);
}

TEST_CASE("discrete logs") {
  CHECK(discrete_log(zeta(15, 7), 15) == 7);
  CHECK(discrete_log(zeta(5, 2), 15) == 6);
  CHECK(!discrete_log(zeta(4), 6).has_value());
  CHECK(log_base(zeta(9, 6), zeta(9, 2)) == 3);
  CHECK(describe(zeta(7, 3)) == "zeta7^3");
}
