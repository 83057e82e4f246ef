#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "wtaut/errors.hpp"
#include "wtaut/serialize.hpp"

using namespace wtaut;
using wtaut::testing::P;

TEST_CASE("polynomial JSON form") {
  auto j = poly_to_json(P("-1/2*x1^2*psi + 3"));
  CHECK(j.dump() == R"([{"coeff":"-1/2","exps":{"psi":1,"x1":2}},{"coeff":"3","exps":{}}])");
  CHECK(poly_to_json(MultiPoly()).dump() == "[]");
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff":1,"exps":{}}])")), DataError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"coeff":"1"})")), DataError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff":"1","exps":{"q7":1}}])")), DataError);
}

TEST_CASE("JSON round trip on computed classes") {
  for (int g = 1; g <= 5; ++g)
    for (const auto& h : enumerate_semigroups(g)) {
      auto c = weierstrass_class(h);
      for (const auto& p : {c.class_pointed, c.class_pointed_x, c.class_unpointed}) {
        auto text = poly_to_json(p).dump();
        CHECK(poly_from_json(Json::parse(text)) == p);
      }
    }
  for (int s = 1; s <= 6; ++s) {
    auto sp = smooth_power_sum(s, 3);
    CHECK(poly_from_json(poly_to_json(sp.value)) == sp.value);
  }
}

TEST_CASE("LaTeX form") {
  CHECK(poly_to_latex(P("3*psi - lambda1")) == "-\\lambda_{1} + 3 \\psi");
  CHECK(poly_to_latex(P("1/12*kappa1 + psi")) == "\\psi + \\frac{1}{12} \\kappa_{1}");
  CHECK(poly_to_latex(P("lambda1^2 - 2")) == "\\lambda_{1}^{2} - 2");
  CHECK(poly_to_latex(MultiPoly()) == "0");
  auto table = cycle_table_latex({weierstrass_class(NumericalSemigroup::from_gaps({1, 3}))});
  CHECK(table.find("(1,3) & (1) & 1 & $-\\lambda_{1} + 3 \\psi$ & $3 \\kappa_{0}$") != std::string::npos);
}

TEST_CASE("records") {
  auto rec = semigroup_record(NumericalSemigroup::from_gaps({1, 3}));
  CHECK(rec.dump() ==
        R"({"gaps":[1,3],"genus":2,"partition_gr_gm1":[2,1],"partition_hprime":[1],"sequence_head":[2,0]})");
  auto cyc = cycle_record(weierstrass_class(NumericalSemigroup::from_gaps({1, 3})));
  CHECK(cyc["codim"] == 1);
  CHECK(cyc["virtual"] == false);
  CHECK(cyc["normalization"] == "up-to-constant");
  CHECK(poly_from_json(cyc["class_pointed"]) == P("3*psi - lambda1"));
  auto report = sandwich_report(1, 4);
  CHECK(hilbert_csv(report).find("degree,lower,upper,ambient,generators\n0,1,1,1,0\n1,1,2,2,0\n") != std::string::npos);
  CHECK(hilbert_record(report)["rows"].size() == 5);
}
