#pragma once

#include <string>
#include <vector>

#include "wtaut/partition.hpp"
#include "wtaut/poly.hpp"
#include "wtaut/semigroups.hpp"

namespace wtaut {

/// A = Q[lambda_1..lambda_g, psi] with deg lambda_i = i, deg psi = 1.
class GradedAlgebraSpec {
 public:
  explicit GradedAlgebraSpec(int g);

  int genus() const { return g_; }
  const std::vector<Variable>& variables() const { return vars_; }
  /// Degree-d monomials, largest first.
  std::vector<Monomial> monomials(int d) const { return weighted_monomials(vars_, d); }
  std::size_t dim(int d) const { return monomials(d).size(); }

 private:
  int g_;
  std::vector<Variable> vars_;
};

struct RelationGenerator {
  Partition partition;
  MultiPoly value;  // k*Omega_mu in lambda, psi
};

/// k*Omega_mu for every mu with |mu| <= max_degree, l(mu) <= g, and
/// mu_i >= g-i+2 for some i (sequences no Weierstrass sequence dominates).
std::vector<RelationGenerator> relation_generators(int g, int max_degree);

/// dim (A/I)_d for d = 0..max_degree.
std::vector<long> hilbert_quotient_upper(int g, int max_degree);

/// lambda_i -> e_i(s_1+1..s_g+1) psi^i, psi -> psi, S the Weierstrass sequence of h.
MultiPoly ev_homomorphism(const MultiPoly& p, const NumericalSemigroup& h);

/// dim (A/I_ev)_d for d = 0..max_degree: rank of the evaluation matrix over
/// all semigroups of genus g.
std::vector<long> hilbert_quotient_lower(int g, int max_degree);

struct HilbertRow {
  int degree = 0;
  long lower = 0;
  long upper = 0;
  long ambient = 0;     // dim A_d
  long generators = 0;  // relation generators of exactly this degree
};

struct HilbertReport {
  int genus = 0;
  int max_degree = 0;
  std::vector<HilbertRow> rows;
  std::vector<std::string> notes;
};

/// Pairs the two bounds. A degree with lower > upper is an internal error and
/// throws std::logic_error.
HilbertReport sandwich_report(int g, int max_degree);

}  // namespace wtaut
