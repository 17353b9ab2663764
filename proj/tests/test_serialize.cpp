#include "doctest.h"
#include "gen.hpp"
#include "qhopf/invariants.hpp"
#include "qhopf/serialize.hpp"

using namespace qhopf;

namespace {

bool same_instance(const ActionInstance& a, const ActionInstance& b) {
  const auto &sa = a.pres->spec(), &sb = b.pres->spec();
  if (sa.family != sb.family || sa.t != sb.t || sa.N != sb.N || sa.p != sb.p || sa.gamma != sb.gamma) return false;
  if (sa.family == Family::QuantumMatrix && sa.q != sb.q) return false;
  if (a.grouplikes != b.grouplikes || a.skews != b.skews) return false;
  return hopf_rank(a.hopf) == hopf_rank(b.hopf) && hopf_gamma(a.hopf) == hopf_gamma(b.hopf);
}

std::string error_of(const json& j) {
  try {
    instance_from_json(j);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

TEST_CASE("scalar input forms") {
  CHECK(scalar_from_json(json(3)) == CycScalar(3));
  CHECK(scalar_from_json(json("-2/6")) == CycScalar(Rational(-1, 3)));
  CHECK(scalar_from_json(json("zeta5")) == zeta(5));
  CHECK(scalar_from_json(json("zeta5^-2")) == zeta(5, 3));
  CHECK(scalar_from_json(json("-zeta3^2")) == -zeta(3, 2));
  CHECK(scalar_from_json(json{{"root", {7, 3}}}) == zeta(7, 3));
  CHECK(scalar_from_json(json{{"level", 4}, {"coeffs", {"0", 1}}}) == zeta(4));
  CHECK_THROWS_AS(scalar_from_json(json("1/0")), InputError);
  CHECK_THROWS_AS(scalar_from_json(json("zeta")), InputError);
  CHECK_THROWS_AS(scalar_from_json(json(1.5)), InputError);
  CHECK_THROWS_AS(scalar_from_json(json("abc")), InputError);
}

TEST_CASE("scalar round trip on random elements") {
  for (int trial = 0; trial < 200; ++trial) {
    int L = testgen::uniform(1, 30);
    auto s = testgen::random_scalar(L, testgen::uniform(0, 4));
    auto j = scalar_to_json(s);
    CHECK(j["level"] == s.level());
    CHECK(scalar_from_json(json::parse(j.dump())) == s);
  }
}

TEST_CASE("polynomial round trip keeps word order") {
  auto P = quantum_matrix(2, zeta(5));
  Terms t;
  add_term(t, Word{3, 0}, CycScalar(2));
  add_term(t, Word{1}, zeta(5));
  add_term(t, Word{}, CycScalar(Rational(1, 2)));
  NCPoly p = normalize(*P, t);
  json j = poly_to_json(*P, p);
  REQUIRE(j.size() == 4);  // Y22 Y11 straightens to two terms
  CHECK(j[0]["word"].empty());
  CHECK(j[1]["word"] == json{"Y12"});
  CHECK(poly_from_json(*P, j) == p);
  CHECK_THROWS_WITH_AS(poly_from_json(*P, json::parse(R"([{"word":["Z1"],"coeff":1}])"), "/det"),
                       "/det/0/word/0: unknown generator 'Z1'", InputError);
}

TEST_CASE("instance round trip on every built example") {
  for (const auto& id : example_ids()) {
    CAPTURE(id);
    auto inst = build_example(id);
    auto back = instance_from_json(json::parse(instance_to_json(inst).dump()));
    CHECK(same_instance(inst, back));
    CHECK(verify_module_algebra(back).pass == verify_module_algebra(inst).pass);
  }
  for (const auto& f : m2_catalog(zeta(5))) {
    auto back = instance_from_json(instance_to_json(f.inst));
    CHECK(same_instance(f.inst, back));
  }
  auto plane = plane_taft_instance(4, 3);
  CHECK(same_instance(plane, instance_from_json(instance_to_json(plane))));
}

TEST_CASE("inputs are lifted to one ambient level") {
  auto inst = plane_taft_instance(3, 4);  // levels 3 and 4
  auto back = instance_from_json(instance_to_json(inst));
  CHECK(instance_level(back) == 12);
  for (const auto& a : back.grouplikes[0].alpha) CHECK(a.level() == 12);
  auto wide = instance_from_json(instance_to_json(inst), "", 24);
  CHECK(wide.grouplikes[0].alpha[0].level() == 24);
  CHECK(same_instance(back, wide));
  CHECK_THROWS_AS(instance_from_json(instance_to_json(inst), "", 10), InputError);
}

TEST_CASE("malformed instances name the offending field") {
  json good = instance_to_json(plane_taft_instance(3, 3));
  REQUIRE(error_of(good).empty());

  json j = good;
  j["presentation"]["p"][0][1] = "zeta5";
  CHECK(starts_with(error_of(j), "/presentation: p matrix not multiplicatively antisymmetric"));

  j = good;
  j["grouplikes"][0]["perm"] = {0, 0};
  CHECK(error_of(j) == "/grouplikes/0/perm: not a permutation");

  j = good;
  j["skews"][0]["eta"][1] = {1};
  CHECK(error_of(j) == "/skews/0/eta/1: expected 2 entries");

  j = good;
  j["hopf"]["type"] = "drinfeld";
  CHECK(starts_with(error_of(j), "/hopf/type:"));

  j = good;
  j.erase("skews");
  CHECK(error_of(j) == "/skews: missing field");

  j = good;
  j["presentation"]["family"] = "Heisenberg";
  CHECK(starts_with(error_of(j), "/presentation/family:"));

  j = good;
  j["hopf"]["lambda"] = "zeta5";
  CHECK(starts_with(error_of(j), "/hopf: Taft lambda"));

  j = good;
  j["skews"][0]["grouplike"] = 1;
  CHECK(starts_with(error_of(j), "/skews/0/grouplike:"));
}

TEST_CASE("bosonization instances keep their group data") {
  auto inst = build_example("m2-rank3");
  json j = instance_to_json(inst);
  CHECK(j["hopf"]["type"] == "bosonization");
  CHECK(j["hopf"]["group"] == json{5, 5, 5});
  for (size_t i = 0; i < j["skews"].size(); ++i) CHECK(j["skews"][i]["grouplike"] == static_cast<int>(i));
  auto back = instance_from_json(j);
  const auto& q = std::get<BosonizationSpec>(back.hopf).qls;
  CHECK(q.chi == std::get<BosonizationSpec>(inst.hopf).qls.chi);
}

TEST_CASE("reports serialize deterministically") {
  auto inst = plane_taft_instance(3, 3);
  inst.grouplikes[0].alpha[0] = inst.grouplikes[0].alpha[0] * zeta(3);
  auto r = verify_module_algebra(inst);
  REQUIRE_FALSE(r.pass);
  auto a = report_to_json(r).dump(), b = report_to_json(verify_module_algebra(inst)).dump();
  CHECK(a == b);
  CHECK(report_to_json(r)["violations"][0].contains("axiom"));
  auto c = compatibility(m2_row(1, zeta(5)), m2_row(8, zeta(5)));
  auto cj = compat_to_json(c);
  CHECK(cj["compatible"] == true);
  CHECK(scalar_from_json(cj["zeta"]) == zeta(5).pow(-2));
}
