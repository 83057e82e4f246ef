#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "wtaut/errors.hpp"
#include "wtaut/matrix.hpp"
#include "wtaut/poly.hpp"

using namespace wtaut;

using wtaut::testing::P;

namespace {

MultiPoly random_poly(std::mt19937& rng, const std::vector<Variable>& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 3), ex(0, max_exp);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> f;
    for (auto v : vars) f.emplace_back(v, static_cast<unsigned>(ex(rng)));
    p.add_term(Monomial::from_factors(f), Rational(coef(rng), den(rng)));
  }
  return p;
}

// largest k with a nonzero k x k minor, by enumerating row and column subsets
std::size_t rank_by_minors(const RationalMatrix& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t best = 0;
  for (unsigned rmask = 1; rmask < (1u << rows); ++rmask) {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < rows; ++i)
      if (rmask >> i & 1) r.push_back(i);
    if (r.size() <= best) continue;
    for (unsigned cmask = 1; cmask < (1u << cols); ++cmask) {
      if (static_cast<std::size_t>(__builtin_popcount(cmask)) != r.size()) continue;
      PolyMatrix sub(r.size(), r.size());
      std::size_t jj = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!(cmask >> j & 1)) continue;
        for (std::size_t ii = 0; ii < r.size(); ++ii) sub(ii, jj) = MultiPoly(m[r[ii]][j]);
        ++jj;
      }
      if (!det(sub).is_zero()) {
        best = r.size();
        break;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational q = parse_rational("-6/4");
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("0").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), DataError);
  CHECK_THROWS_AS(parse_rational("x"), DataError);
  CHECK(binomial(5, 2) == 10);
  CHECK(factorial(5) == 120);
}

TEST_CASE("variables carry their weights") {
  CHECK(Variable::lambda(3).weight() == 3);
  CHECK(Variable::kappa(2).weight() == 2);
  CHECK(Variable::kappa(0).weight() == 0);
  CHECK(Variable::psi().weight() == 1);
  CHECK(Variable::x(4).weight() == 1);
  CHECK(Variable::u().weight() == 1);
  CHECK(Variable::parse("lambda12") == Variable::lambda(12));
  CHECK(Variable::parse("psi") == Variable::psi());
  CHECK_THROWS_AS(Variable::parse("w1"), DataError);
  CHECK(Variable::psi() != Variable::u());
}

TEST_CASE("ring operations") {
  CHECK(P("x1 + psi") + P("-psi") == P("x1"));
  CHECK(P("x1 - u") * P("x1 + u") == P("x1^2 - u^2"));
  MultiPoly cube = pow(P("lambda1 + psi"), 3);
  MultiPoly rep = P("lambda1 + psi") * P("lambda1 + psi") * P("lambda1 + psi");
  CHECK(cube == rep);
  CHECK(cube.coeff(Monomial::from_factors({{Variable::lambda(1), 1}, {Variable::psi(), 2}})) == 3);
  CHECK(pow(P("x1"), 0) == MultiPoly(1));
  CHECK_THROWS_WITH_AS(pow(P("x1"), -1), "non-polynomial operation: negative exponent", DataError);
  CHECK((P("x1") - P("x1")).is_zero());
}

TEST_CASE("canonical text form and parse round trip") {
  CHECK(to_string(P("3*psi - lambda1")) == "-lambda1 + 3*psi");
  CHECK(to_string(P("lambda1^2 - lambda1*psi")) == "lambda1^2 - lambda1*psi");
  CHECK(to_string(MultiPoly()) == "0");
  CHECK(to_string(P("-1/2*x1^2")) == "-1/2*x1^2");
  std::mt19937 rng(7);
  std::vector<Variable> vars{Variable::lambda(1), Variable::lambda(2), Variable::psi(), Variable::kappa(0),
                             Variable::x(1), Variable::u()};
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = random_poly(rng, vars, 6, 3);
    CHECK(parse_poly(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_poly("x1 +"), DataError);
}

TEST_CASE("substitution") {
  Substitution pin{{Variable::x(1), MultiPoly(Rational(2)) * MultiPoly(Variable::u())}};
  CHECK(substitute(P("x1"), pin) == P("2*u"));
  CHECK(substitute(P("u^2"), {{Variable::u(), P("-psi")}}) == P("psi^2"));
  CHECK(substitute(P("x1*x2"), {{Variable::x(1), P("-lambda1")}, {Variable::x(2), MultiPoly()}}).is_zero());
}

TEST_CASE("weighted degree and components") {
  MultiPoly p = P("lambda2*psi + lambda1^3 + kappa0*psi");
  CHECK(p.degree() == 3);
  CHECK(p.low_degree() == 1);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.component(3) == P("lambda2*psi + lambda1^3"));
  // leading term: highest degree, then lambda before psi
  CHECK(p.leading().first == Monomial(Variable::lambda(1), 3));
}

TEST_CASE("determinants") {
  PolyMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(det(id) == MultiPoly(1));
  CHECK(det(PolyMatrix({{P("x1"), 1}, {0, P("psi")}})) == P("x1*psi"));
  // Vandermonde on (0,1,3): product of differences
  std::vector<Rational> pts{0, 1, 3};
  PolyMatrix v(3, 3);
  Rational prod(1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational e(1);
      for (std::size_t k = 0; k < j; ++k) e *= pts[i];
      v(i, j) = e;
    }
    for (std::size_t k = i + 1; k < 3; ++k) prod *= pts[k] - pts[i];
  }
  CHECK(det(v) == MultiPoly(prod));
  CHECK(prod == 6);
  CHECK(det(PolyMatrix()) == MultiPoly(1));
  CHECK_THROWS_AS(det(PolyMatrix(2, 3)), DataError);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  // 6x6 block-diagonal: det = product of the block determinants
  std::mt19937 rng(11);
  std::vector<Variable> vars{Variable::x(1), Variable::psi()};
  for (int trial = 0; trial < 5; ++trial) {
    PolyMatrix a(3, 3), b(3, 3), big(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = random_poly(rng, vars, 2, 1);
        b(i, j) = random_poly(rng, vars, 2, 1);
        big(i, j) = a(i, j);
        big(i + 3, j + 3) = b(i, j);
        big(i, j + 3) = random_poly(rng, vars, 1, 1);
      }
    CHECK(det(big) == det(a) * det(b));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(1);
  std::vector<Variable> vars{Variable::lambda(1), Variable::psi(), Variable::x(2)};
  for (int i = 0; i < 30; ++i) {
    auto p = random_poly(rng, vars, 4, 2), q = random_poly(rng, vars, 4, 2), r = random_poly(rng, vars, 4, 2);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    Substitution s{{Variable::psi(), P("x2 - 1/2")}, {Variable::lambda(1), P("u^2")}};
    CHECK(substitute(p * q + r, s) == substitute(p, s) * substitute(q, s) + substitute(r, s));
  }
}

TEST_CASE("determinant is alternating and multilinear") {
  std::mt19937 rng(3);
  std::vector<Variable> vars{Variable::x(1), Variable::psi()};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      PolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, vars, 2, 2);
      MultiPoly d = det(m);
      if (n >= 2) {
        PolyMatrix s = m;
        for (std::size_t j = 0; j < n; ++j) std::swap(s(0, j), s(1, j));
        CHECK(det(s) == -d);
        PolyMatrix e = m;
        for (std::size_t j = 0; j < n; ++j) e(1, j) = e(0, j);
        CHECK(det(e).is_zero());
      }
      MultiPoly c = random_poly(rng, vars, 2, 1);
      PolyMatrix scaled = m, added = m, other = m;
      for (std::size_t j = 0; j < n; ++j) {
        other(0, j) = random_poly(rng, vars, 2, 1);
        scaled(0, j) = c * m(0, j);
        added(0, j) = m(0, j) + other(0, j);
      }
      CHECK(det(scaled) == c * d);
      CHECK(det(added) == d + det(other));
    }
  }
}

TEST_CASE("exact division") {
  MultiPoly a = P("x1 - x2"), b = P("x1^2 + psi*x2 - 3");
  auto q = divide_exact(a * b, a);
  REQUIRE(q.has_value());
  CHECK(*q == b);
  CHECK_FALSE(divide_exact(P("x1 + 1"), P("x1 - 1")).has_value());
}

TEST_CASE("rank over Q") {
  CHECK(rank_over_q(RationalMatrix(3, std::vector<Rational>(5))) == 0);
  RationalMatrix id(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  CHECK(rank_over_q(id) == 4);
  RationalMatrix prop{{1, 2}, {2, 4}, {3, 6}};
  CHECK(rank_over_q(prop) == 1);
  CHECK(rank_by_minors(prop) == 1);
  CHECK(rank_over_q({}) == 0);
}

TEST_CASE("rank agrees with minor enumeration") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
    RationalMatrix m(r, std::vector<Rational>(c));
    // low-rank structure: rows from a couple of seed rows
    std::size_t seeds = 1 + trial % 3;
    RationalMatrix base(seeds, std::vector<Rational>(c));
    for (auto& row : base)
      for (auto& x : row) x = small(rng);
    for (auto& row : m)
      for (std::size_t s = 0; s < seeds; ++s) {
        int k = small(rng);
        for (std::size_t j = 0; j < c; ++j) row[j] += k * base[s][j];
      }
    CHECK(rank_over_q(m) == rank_by_minors(m));
  }
}

TEST_CASE("echelon basis normal forms") {
  EchelonBasis b(3);
  CHECK(b.insert({1, 1, 0}));
  CHECK_FALSE(b.insert({2, 2, 0}));
  CHECK(b.insert({0, 1, 1}));
  CHECK(b.rank() == 2);
  auto r1 = b.reduce({1, 0, 0});
  auto r2 = b.reduce({0, 0, 1});
  CHECK(r1 == b.reduce(r1));
  // (1,0,0) - (0,0,1) lies in the span
  std::vector<Rational> diff(3);
  for (int j = 0; j < 3; ++j) diff[j] = r1[j] - r2[j];
  CHECK(b.reduce(diff) == std::vector<Rational>(3));
}

TEST_CASE("elementary and complete symmetric values") {
  std::vector<Rational> v{3, 1};
  CHECK(elementary(1, v) == 4);
  CHECK(elementary(2, v) == 3);
  CHECK(elementary(3, v) == 0);
  CHECK(complete(2, v) == 13);
  CHECK(elementary(0, std::vector<Rational>{}) == 1);
}

TEST_CASE("weighted monomial enumeration") {
  std::vector<Variable> vars{Variable::lambda(1), Variable::lambda(2), Variable::psi()};
  auto ms = weighted_monomials(vars, 3);
  CHECK(ms.size() == 6);
  for (const auto& m : ms) CHECK(m.degree() == 3);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(MonomialOrder{}(ms[i - 1], ms[i]));
}
