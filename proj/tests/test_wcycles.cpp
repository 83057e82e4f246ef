#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <functional>

#include "wtaut/errors.hpp"
#include "wtaut/pullback.hpp"
#include "wtaut/schur.hpp"
#include "wtaut/tautring.hpp"
#include "wtaut/wcycles.hpp"

using namespace wtaut;
using wtaut::testing::P;

namespace {

bool dominates(const IndexSequence& a, const IndexSequence& b, int g) {
  for (long i = 1; i <= g + 1; ++i)
    if (a.at(i) < b.at(i)) return false;
  return true;
}

// every strictly decreasing head of length g with entries in [lo, hi] above the tail, d = g-1
void for_each_sequence(int g, long lo, long hi, const std::function<void(const IndexSequence&)>& f) {
  std::vector<long> head;
  std::function<void(long)> rec = [&](long below) {
    if (static_cast<int>(head.size()) == g) {
      if (head.back() > -2) f(IndexSequence(g - 1, head));
      return;
    }
    for (long v = std::min(hi, below - 1); v >= lo; --v) {
      head.push_back(v);
      rec(v);
      head.pop_back();
    }
  };
  rec(hi + 1);
}

}  // namespace

TEST_CASE("Weierstrass classes: examples") {
  for (int g = 1; g <= 5; ++g) {
    auto ordinary = weierstrass_class(enumerate_semigroups(g).front());
    CHECK(ordinary.partition.empty());
    CHECK(ordinary.class_pointed == MultiPoly(1));
    CHECK(ordinary.class_unpointed.is_zero());
  }
  auto hyper = weierstrass_class(NumericalSemigroup::from_gaps({1, 3}));
  CHECK(hyper.partition == Partition({1}));
  CHECK(hyper.class_pointed == P("3*psi - lambda1"));
  CHECK(hyper.class_unpointed == P("3*kappa0"));
  CHECK(hyper.normalization == "up-to-constant");
  CHECK_FALSE(hyper.is_virtual);
  CHECK(hyper.codimension() == 1);
  auto counted = weierstrass_class(NumericalSemigroup::from_gaps({1, 3}), {.substitute_kappa0 = true});
  CHECK(counted.class_unpointed == MultiPoly(6));
  auto elliptic = weierstrass_class(NumericalSemigroup::from_gaps({1}));
  CHECK(elliptic.class_pointed == MultiPoly(1));
  CHECK_THROWS_AS(weierstrass_class(NumericalSemigroup()), DataError);
}

TEST_CASE("virtual classes") {
  CHECK(virtual_class(Partition({1}), 3).class_pointed == P("-lambda1 + 6*psi"));
  CHECK(virtual_class(Partition(), 4).class_pointed == MultiPoly(1));
  auto v = virtual_class(Partition({3}), 1);
  CHECK(v.is_virtual);
  CHECK_FALSE(v.realizable);
  CHECK(virtual_class(Partition({2}), 1).is_virtual);
  CHECK_FALSE(virtual_class(Partition(), 1).is_virtual);
  CHECK_FALSE(virtual_class(Partition({1}), 2).is_virtual);
  CHECK_THROWS_AS(virtual_class(Partition({1, 1, 1}), 2), DataError);
  // Weierstrass divisor -lambda + g(g+1)/2 psi
  for (int g = 2; g <= 6; ++g) {
    MultiPoly expected = MultiPoly(Monomial(Variable::psi()), Rational(g * (g + 1), 2)) - P("lambda1");
    CHECK(virtual_class(Partition({1}), g).class_pointed == expected);
  }
}

TEST_CASE("shifted formula equals the determinant route; unshifted equals k*Omega") {
  for (int g = 1; g <= 3; ++g)
    for (int n = 0; n <= 4; ++n)
      for (const auto& mu : partitions_of(n)) {
        if (mu.length() > g) continue;
        auto shifted = virtual_class(mu, g);
        CHECK(shifted.class_pointed_x == homogenized_shifted_schur(mu, g, 1));
        CHECK(to_lambda_basis(shifted.class_pointed_x, g) == shifted.class_pointed);
        auto plain = virtual_class(mu, g, {.unshifted = true});
        CHECK(plain.class_pointed == kstar_schubert(mu, g).value_lambda);
      }
}

TEST_CASE("class degree equals the footnote codimension, g <= 6") {
  for (int g = 1; g <= 6; ++g)
    for (const auto& h : enumerate_semigroups(g)) {
      auto c = weierstrass_class(h);
      long codim = hprime_codimension(weierstrass_sequence(h), g);
      CHECK(c.codimension() == codim);
      CHECK(c.class_pointed.is_homogeneous());
      CHECK(c.class_pointed.degree() == codim);
      if (codim > 0) {
        CHECK(c.class_unpointed.is_homogeneous());
        CHECK(c.class_unpointed.degree() == codim - 1);
      }
    }
}

TEST_CASE("pushforward to unpointed moduli") {
  CHECK(push_to_unpointed(P("-lambda1 + 3*psi"), 2) == P("3*kappa0"));
  CHECK(push_to_unpointed(P("-lambda1 + 3*psi"), 2, true) == MultiPoly(6));
  CHECK(push_to_unpointed(MultiPoly(1), 3).is_zero());
  CHECK(push_to_unpointed(P("lambda1*psi^2"), 3) == P("lambda1*kappa1"));
  CHECK(push_to_unpointed(P("psi^3 + lambda2*psi"), 3, true) == P("kappa2 + 4*lambda2"));
  for (int g = 2; g <= 4; ++g)
    for (const auto& h : enumerate_semigroups(g)) {
      auto c = weierstrass_class(h).class_pointed;
      if (c.is_constant()) continue;
      auto pushed = push_to_unpointed(c, g);
      CHECK(pushed.degree() == c.degree() - 1);
    }
}

TEST_CASE("cell criteria: examples") {
  for (int g = 1; g <= 5; ++g)
    for (const auto& h : enumerate_semigroups(g)) CHECK(intersection_nonempty(weierstrass_sequence(h), g, false));
  CHECK_FALSE(intersection_nonempty(IndexSequence(1, {3, 0}), 2, false));
  CHECK_FALSE(intersection_nonempty(IndexSequence(0, {1}), 1, true));
  CHECK(intersection_nonempty(IndexSequence(0, {0}), 1, true));
}

TEST_CASE("open-cell membership implies closed-cell membership") {
  for (int g = 1; g <= 4; ++g) {
    int open = 0;
    for_each_sequence(g, -3, 2 * g, [&](const IndexSequence& s) {
      bool o = intersection_nonempty(s, g, false);
      if (o) {
        ++open;
        CHECK(intersection_nonempty(s, g, true));
      }
    });
    CHECK(open == static_cast<int>(enumerate_semigroups(g).size()));
  }
}

TEST_CASE("localization: ev_H kills W_H' exactly when S_H does not dominate S_H'") {
  for (int g = 1; g <= 4; ++g) {
    auto all = enumerate_semigroups(g);
    for (const auto& target : all) {
      auto cls = weierstrass_class(target).class_pointed;
      auto s_target = weierstrass_sequence(target);
      for (const auto& point : all) {
        bool vanishes = ev_homomorphism(cls, point).is_zero();
        CHECK(vanishes == !dominates(weierstrass_sequence(point), s_target, g));
      }
    }
  }
}
