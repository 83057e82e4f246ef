#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wtaut/matrix.hpp"
#include "wtaut/partition.hpp"
#include "wtaut/poly.hpp"

namespace wtaut {

/// Parameter sequence a_1, a_2, ... of a double Schur polynomial.
///
/// Either an explicit finite list or the affine rule a_j = (offset + slope*j)*unit.
class ParamSequence {
 public:
  /// a_j = j - 1; double Schur functions become factorial Schur functions.
  static ParamSequence factorial();
  /// a_j = 0; classical Schur polynomials.
  static ParamSequence zero();
  static ParamSequence affine(const Rational& offset, const Rational& slope, const MultiPoly& unit = MultiPoly(1));
  /// a_1..a_N; asking for a_j with j > N throws DataError.
  static ParamSequence list(std::vector<MultiPoly> values);

  /// (tau^k a)_j = a_{j-k}. Only defined for affine rules.
  ParamSequence translated(long k) const;

  MultiPoly at(long j) const;

 private:
  ParamSequence() = default;
  bool affine_ = true;
  Rational offset_;
  Rational slope_;
  MultiPoly unit_{1};
  std::vector<MultiPoly> values_;
};

/// z(z-1)...(z-i+1); 1 when i = 0.
MultiPoly falling_factorial(const MultiPoly& z, int i);

/// (z|a)^k = (z - a_1)...(z - a_k).
MultiPoly generalized_power(const MultiPoly& z, int k, const ParamSequence& a);

/// det[(x_i|a)^{mu_j+n-j}] / det[(x_i|a)^{n-j}], computed as the numerator
/// determinant divided exactly by the Vandermonde product prod_{i<j}(x_i-x_j).
/// Throws DataError("insufficient variables") when l(mu) > n.
MultiPoly double_schur(const Partition& mu, const std::vector<MultiPoly>& x, const ParamSequence& a);

/// Factorial Schur polynomial t_mu(z_1..z_n).
MultiPoly factorial_schur(const Partition& mu, const std::vector<MultiPoly>& z);

/// Okounkov-Olshanski shifted Schur polynomial s*_mu(z_1..z_n)
/// = t_mu(z_1+n-1, ..., z_n); zero when l(mu) > n.
MultiPoly shifted_schur(const Partition& mu, const std::vector<MultiPoly>& z);

/// Coefficients c_nu with double_schur(mu, x_1..x_n, a) = sum c_nu s_nu(x_1..x_n),
/// obtained by expanding the numerator alternant column by column. Every nu
/// has at most n parts and |nu| <= |mu|.
using SchurExpansion = std::vector<std::pair<Partition, MultiPoly>>;
SchurExpansion double_schur_expansion(const Partition& mu, int n, const ParamSequence& a);

/// Classical Schur polynomial via the dual Jacobi-Trudi determinant
/// det[e_{nu'_i - i + j}], with e_k supplied by the caller (e_0 = 1 and
/// e_k = 0 for k < 0 are handled here).
MultiPoly schur_from_elementary(const Partition& nu, const std::function<MultiPoly(int)>& e);

/// Components by weighted degree: result[d] is the degree-d part of p.
using Grading = std::function<int(const Variable&)>;
std::vector<MultiPoly> homogeneous_components(const MultiPoly& p);
std::vector<MultiPoly> homogeneous_components(const MultiPoly& p, const Grading& weight);

enum class PsiVariant { Psi, PsiPrime };

/// Jacobi-Trudi style matrices whose determinant is k*Omega_mu, with entries
/// in x_1..x_g and psi. Psi is l(mu) x l(mu); PsiPrime is l(mu') x l(mu').
PolyMatrix psi_matrix(const Partition& mu, int g, PsiVariant variant);

/// Variables x_1..x_n (or z_1..z_n) as polynomials.
std::vector<MultiPoly> x_variables(int n);
std::vector<MultiPoly> z_variables(int n);

}  // namespace wtaut
