#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <algorithm>
#include <random>

#include "wtaut/errors.hpp"
#include "wtaut/matrix.hpp"
#include "wtaut/pullback.hpp"
#include "wtaut/tautring.hpp"

using namespace wtaut;
using wtaut::testing::P;

namespace {

// number of (a_1..a_g, b) with sum i*a_i + b = d, counted by compositions
long count_monomials(int g, int d) {
  if (g == 0) return 1;
  long total = 0;
  for (int a = 0; a * g <= d; ++a) total += count_monomials(g - 1, d - a * g);
  return total;
}

}  // namespace

TEST_CASE("graded algebra dimensions") {
  for (int g = 0; g <= 6; ++g) {
    GradedAlgebraSpec a(g);
    for (int d = 0; d <= 10; ++d) CHECK(static_cast<long>(a.dim(d)) == count_monomials(g, d));
  }
  CHECK(GradedAlgebraSpec(2).dim(3) == 6);
  CHECK_THROWS_AS(GradedAlgebraSpec(-1), DataError);
}

TEST_CASE("relation generators: examples") {
  auto g1 = relation_generators(1, 3);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].partition == Partition({2}));
  CHECK(g1[0].value == P("lambda1^2 - lambda1*psi"));
  CHECK(g1[1].partition == Partition({3}));
  CHECK(g1[1].value == P("lambda1") * P("lambda1 - psi") * P("lambda1 - 2*psi") * MultiPoly(-1));
  CHECK(relation_generators(2, 1).empty());
  CHECK(relation_generators(2, 2).empty());
  CHECK(relation_generators(2, 3).front().partition == Partition({3}));
  for (int g = 1; g <= 5; ++g)
    for (const auto& gen : relation_generators(g, 7)) {
      CHECK(gen.partition != Partition({1}));
      CHECK(gen.partition.length() <= g);
      CHECK(gen.value == kstar_schubert(gen.partition, g).value_lambda);
    }
  CHECK(relation_generators(0, 5).empty());
}

TEST_CASE("excluded partitions have vanishing classes") {
  for (int g = 1; g <= 3; ++g)
    for (int n = g + 1; n <= 5; ++n)
      for (const auto& mu : partitions_of(n))
        if (mu.length() > g) CHECK(kstar_schubert(mu, g).value_lambda.is_zero());
}

TEST_CASE("upper bound") {
  CHECK(hilbert_quotient_upper(1, 6) == std::vector<long>{1, 2, 2, 2, 2, 2, 2});
  for (int g = 0; g <= 5; ++g) CHECK(hilbert_quotient_upper(g, 0) == std::vector<long>{1});
  auto g2 = hilbert_quotient_upper(2, 2);
  CHECK(g2[1] == 2);
  CHECK(g2[2] == 4);
  CHECK_THROWS_AS(hilbert_quotient_upper(2, -1), DataError);
}

TEST_CASE("evaluation homomorphism") {
  auto hyper = NumericalSemigroup::from_gaps({1, 3});
  CHECK(ev_homomorphism(P("lambda1"), hyper) == P("4*psi"));
  CHECK(ev_homomorphism(P("lambda2"), hyper) == P("3*psi^2"));
  CHECK(ev_homomorphism(P("lambda1"), NumericalSemigroup::from_gaps({1})) == P("psi"));
  CHECK(ev_homomorphism(MultiPoly(5), hyper) == MultiPoly(5));
  CHECK(ev_homomorphism(P("psi^2"), hyper) == P("psi^2"));
  CHECK_THROWS_AS(ev_homomorphism(P("x1"), hyper), DataError);
  // ring homomorphism
  auto p = P("lambda1^2 - 3*lambda2 + psi"), q = P("lambda1*psi - 1/2");
  CHECK(ev_homomorphism(p * q, hyper) == ev_homomorphism(p, hyper) * ev_homomorphism(q, hyper));
}

TEST_CASE("lower bound") {
  CHECK(hilbert_quotient_lower(1, 5) == std::vector<long>{1, 1, 1, 1, 1, 1});
  auto g2 = hilbert_quotient_lower(2, 1);
  CHECK(g2 == std::vector<long>{1, 2});
  for (int g = 0; g <= 4; ++g) CHECK(hilbert_quotient_lower(g, 0).front() == 1);
  // rank cannot exceed the number of semigroups
  for (int g = 1; g <= 4; ++g)
    for (long v : hilbert_quotient_lower(g, 8)) CHECK(v <= static_cast<long>(enumerate_semigroups(g).size()));
}

TEST_CASE("sandwich reports") {
  auto r = sandwich_report(1, 4);
  REQUIRE(r.rows.size() == 5);
  std::vector<long> lower, upper;
  for (const auto& row : r.rows) {
    lower.push_back(row.lower);
    upper.push_back(row.upper);
  }
  CHECK(lower == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(upper == std::vector<long>{1, 2, 2, 2, 2});
  CHECK_FALSE(r.notes.empty());
  auto zero = sandwich_report(0, 4);
  for (const auto& row : zero.rows) {
    CHECK(row.lower == 1);
    CHECK(row.upper == 1);
    CHECK(row.ambient == 1);
  }
  auto two = sandwich_report(2, 0);
  REQUIRE(two.rows.size() == 1);
  CHECK(two.rows[0].lower == 1);
  CHECK(two.rows[0].upper == 1);
  auto g3 = sandwich_report(3, 6);
  long gens = 0;
  for (const auto& row : g3.rows) {
    CHECK(row.lower <= row.upper);
    CHECK(row.upper <= row.ambient);
    gens += row.generators;
  }
  CHECK(gens == static_cast<long>(relation_generators(3, 6).size()));
}

TEST_CASE("I lies in the kernel of every evaluation, g <= 4, D <= 8") {
  for (int g = 1; g <= 4; ++g) {
    auto sgs = enumerate_semigroups(g);
    for (const auto& gen : relation_generators(g, 8))
      for (const auto& h : sgs) CHECK(ev_homomorphism(gen.value, h).is_zero());
  }
}

TEST_CASE("monotone stabilization in the cutoff") {
  for (int g = 1; g <= 4; ++g) {
    auto up_long = hilbert_quotient_upper(g, 8), lo_long = hilbert_quotient_lower(g, 8);
    for (int d = 0; d <= 8; d += 3) {
      auto up = hilbert_quotient_upper(g, d), lo = hilbert_quotient_lower(g, d);
      CHECK(std::equal(up.begin(), up.end(), up_long.begin()));
      CHECK(std::equal(lo.begin(), lo.end(), lo_long.begin()));
    }
  }
}

TEST_CASE("upper-bound rank ignores generator and monomial order") {
  std::mt19937 rng(41);
  for (int g = 2; g <= 3; ++g) {
    int D = 7;
    auto gens = relation_generators(g, D);
    GradedAlgebraSpec alg(g);
    auto expected = hilbert_quotient_upper(g, D);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      for (int d = 0; d <= D; ++d) {
        auto basis = alg.monomials(d);
        std::shuffle(basis.begin(), basis.end(), rng);
        RationalMatrix rows;
        for (const auto& gen : gens) {
          int w = gen.partition.weight();
          if (w > d) continue;
          for (const auto& m : alg.monomials(d - w)) {
            auto prod = gen.value * MultiPoly(m, 1);
            std::vector<Rational> row;
            for (const auto& b : basis) row.push_back(prod.coeff(b));
            rows.push_back(std::move(row));
          }
        }
        long dim = static_cast<long>(basis.size()) - static_cast<long>(rank_over_q(rows));
        CHECK(dim == expected[static_cast<std::size_t>(d)]);
      }
    }
  }
}
