#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wtaut/rational.hpp"

namespace wtaut {

// Declaration order is the canonical family order used for display and for
// the monomial order: lambda < psi < kappa < x < u < z < y.
enum class Family : std::uint8_t { Lambda, Psi, Kappa, X, U, Z, Y };

/// A named generator of the weighted-graded alphabet.
///
/// Weights are complex degrees: lambda_i -> i, kappa_j -> j, everything else
/// -> 1. psi and u carry no index.
class Variable {
 public:
  constexpr Variable(Family family, std::uint32_t index) : family_(family), index_(index) {}

  static Variable lambda(std::uint32_t i) { return {Family::Lambda, i}; }
  static Variable psi() { return {Family::Psi, 0}; }
  static Variable kappa(std::uint32_t j) { return {Family::Kappa, j}; }
  static Variable x(std::uint32_t i) { return {Family::X, i}; }
  static Variable u() { return {Family::U, 0}; }
  static Variable z(std::uint32_t i) { return {Family::Z, i}; }
  static Variable y(std::uint32_t j) { return {Family::Y, j}; }

  Family family() const { return family_; }
  std::uint32_t index() const { return index_; }
  int weight() const;
  bool has_index() const { return family_ != Family::Psi && family_ != Family::U; }

  /// "lambda2", "psi", "kappa0", "x1", "u", "z3", "y1"
  std::string name() const;
  /// Inverse of name(). Throws DataError.
  static Variable parse(const std::string& name);

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;

 private:
  Family family_;
  std::uint32_t index_;
};

/// A power product of variables, stored sparse and sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(Variable v, unsigned e = 1);
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(Variable v) const;
  bool divides(const Monomial& other) const;
  /// other / *this, assuming divides(other).
  Monomial cofactor_in(const Monomial& other) const;
  Monomial without(Variable v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Strict weak order placing the larger monomial first: higher weighted
/// degree wins, ties broken lexicographically with earlier variables more
/// significant. This is a monomial order, so leading terms are multiplicative.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(Variable v);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  /// Leading term under MonomialOrder. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.begin(); }

  /// Maximum weighted degree; -1 for the zero polynomial.
  int degree() const;
  /// Minimum weighted degree; -1 for the zero polynomial.
  int low_degree() const;
  bool is_homogeneous() const;
  /// Largest exponent of v.
  unsigned degree_in(Variable v) const;
  std::set<Variable> variables() const;

  /// Component of weighted degree d.
  MultiPoly component(int d) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Applies f to every coefficient, dropping zeros.
  MultiPoly map_coefficients(const std::function<Rational(const Rational&)>& f) const;

 private:
  TermMap terms_;
};

/// p^e. Negative e throws DataError("non-polynomial operation").
MultiPoly pow(const MultiPoly& p, long e);

/// Ring homomorphism fixing every variable not in the map.
using Substitution = std::map<Variable, MultiPoly>;
MultiPoly substitute(const MultiPoly& p, const Substitution& sigma);

/// q with p = q*d, or nullopt when d does not divide p. d must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

/// Elementary and complete homogeneous symmetric polynomials of a list.
MultiPoly elementary(int a, const std::vector<MultiPoly>& values);
MultiPoly complete(int a, const std::vector<MultiPoly>& values);
Rational elementary(int a, const std::vector<Rational>& values);
Rational complete(int a, const std::vector<Rational>& values);

/// All monomials in `vars` of weighted degree d, sorted by MonomialOrder
/// (largest first). Every variable must have positive weight.
std::vector<Monomial> weighted_monomials(const std::vector<Variable>& vars, int d);

/// Canonical text form, e.g. "-lambda1 + 3*psi", "1/2*x1^2*u". Zero prints "0".
std::string to_string(const MultiPoly& p);
/// Parses the canonical text form (and any whitespace variant of it).
MultiPoly parse_poly(const std::string& text);

}  // namespace wtaut
