#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wtaut/matrix.hpp"
#include "wtaut/partition.hpp"
#include "wtaut/poly.hpp"

namespace wtaut {

/// Cohen-Macaulay (all irreducible curves) or smooth curves only.
enum class Mode { CM, Smooth };

/// A Krichever pullback, in both the Chern-root and the lambda alphabet.
struct PullbackClass {
  int genus = 0;
  std::optional<Partition> partition;  // set for Schubert classes
  int power = 0;                       // set for power-sum classes
  Mode mode = Mode::CM;
  MultiPoly value_x;       // x_1..x_g, psi
  MultiPoly value_lambda;  // lambda_1..lambda_g, psi
};

/// k* Omega_mu = (-psi)^{|mu|} s*_mu(z_1..z_g), z_i = (x_i - (i-g)psi)/(-psi).
/// Zero when l(mu) > g. Throws DataError for g < 1.
PullbackClass kstar_schubert(const Partition& mu, int g);

/// The same class evaluated with n >= g shifted-Schur arguments, the extra
/// ones pinned to 0 (x_i = (g-i)u), through the determinant-ratio route.
/// Returns the x-form.
MultiPoly kstar_schubert_padded(const Partition& mu, int g, int n);

/// u^{|mu|} s*_mu(z) with z_i = (x_i + (i - g - shift) u)/u for i <= g,
/// u -> -psi, via the determinant-ratio route. shift = 0 is k*Omega_mu,
/// shift = 1 the Weierstrass-cycle convention. x-form.
MultiPoly homogenized_shifted_schur(const Partition& mu, int g, int shift);

/// k*Omega_mu read off the double Schur function of the rank g-1+l bundle:
/// s_mu(x_1..x_{g-1+l} | a_j = (j-l)u) with x_i = (g-i)u for i > g, u -> -psi.
MultiPoly kstar_schubert_double(const Partition& mu, int g, int l);

struct PowerSumOptions {
  /// Divide the power-sum part by s! (Chern character normalization).
  bool chern_character = false;
};

/// k* p_s = sum_{i<=g} x_i^s - sum_{i<=g} (i-g)^s psi^s.
PullbackClass kstar_power_sum(int s, int g, PowerSumOptions options = {});

/// Rewrites a polynomial symmetric in x_1..x_g through e_a(x) -> (-1)^a lambda_a.
/// Throws DataError if p is not symmetric in the x variables.
MultiPoly to_lambda_basis(const MultiPoly& p, int g);
/// lambda_a -> (-1)^a e_a(x_1..x_g).
MultiPoly from_lambda_basis(const MultiPoly& p, int g);

/// e_a(x_1..x_g) written in lambda classes: (-1)^a lambda_a, zero for a > g.
MultiPoly lambda_elementary(int a, int g);

/// Normal forms modulo the ideal generated by the even components of
/// (1 + lambda_1 + ... + lambda_g)(1 - lambda_1 + lambda_2 - ...).
///
/// Each degree d gets its own echelon table over the degree-d monomials of
/// lambda_1..lambda_g, psi (largest monomial first), built on first use.
/// Variables outside lambda/psi are treated as coefficients.
class MumfordReducer {
 public:
  explicit MumfordReducer(int g);

  int genus() const { return g_; }
  /// Generator of degree 2k, k = 1..g.
  const std::vector<MultiPoly>& generators() const { return generators_; }
  MultiPoly reduce(const MultiPoly& p) const;

 private:
  struct Table;
  const Table& table(int d) const;

  int g_;
  std::vector<MultiPoly> generators_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<Table>> tables_;
};

MultiPoly mumford_reduce(const MultiPoly& p, int g);

/// Smooth-curve form of k*p_s in kappa and psi.
struct SmoothPowerSum {
  /// odd s = 2r-1: B_{2r} kappa_{2r-1}/(2r) - sum (i-g)^s psi^s
  /// even s = 2r:  -sum (i-g)^{2r} psi^{2r}  (+ when paper_sign is set)
  MultiPoly value;
  /// The formula exactly as usually printed: kappa_{2r} and + in the even case.
  MultiPoly printed;
  std::vector<std::string> notes;
};
SmoothPowerSum smooth_power_sum(int s, int g, bool paper_sign = false);

/// B_n from sum_{j<=n} C(n+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
Rational bernoulli(int n);

/// prod_{m=i}^{j} (1 - (m+1)u); 1 for an empty range.
MultiPoly chern_interval(long i, long j);

}  // namespace wtaut
