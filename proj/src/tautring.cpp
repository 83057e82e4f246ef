#include "wtaut/tautring.hpp"

#include <map>
#include <stdexcept>

#include "wtaut/errors.hpp"
#include "wtaut/matrix.hpp"
#include "wtaut/pullback.hpp"

namespace wtaut {

GradedAlgebraSpec::GradedAlgebraSpec(int g) : g_(g) {
  if (g < 0) throw DataError("negative genus");
  for (int i = 1; i <= g; ++i) vars_.push_back(Variable::lambda(static_cast<std::uint32_t>(i)));
  vars_.push_back(Variable::psi());
}

namespace {

bool violates_bound(const Partition& mu, int g) {
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] >= g - i + 2) return true;
  return false;
}

void check_cutoff(int max_degree) {
  if (max_degree < 0) throw DataError("degree cutoff must be non-negative");
}

std::vector<Rational> coordinates(const MultiPoly& p, const std::map<Monomial, std::size_t, MonomialOrder>& index) {
  std::vector<Rational> row(index.size());
  for (const auto& [m, c] : p.terms()) row[index.at(m)] = c;
  return row;
}

}  // namespace

std::vector<RelationGenerator> relation_generators(int g, int max_degree) {
  check_cutoff(max_degree);
  std::vector<RelationGenerator> out;
  if (g < 1) return out;
  for (const auto& mu : partitions_up_to(max_degree, g)) {
    if (!violates_bound(mu, g)) continue;
    out.push_back({mu, kstar_schubert(mu, g).value_lambda});
  }
  return out;
}

namespace {

std::vector<long> upper_from(const GradedAlgebraSpec& algebra, const std::vector<RelationGenerator>& gens,
                             int max_degree) {
  std::vector<long> dims;
  for (int d = 0; d <= max_degree; ++d) {
    auto basis = algebra.monomials(d);
    std::map<Monomial, std::size_t, MonomialOrder> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    EchelonBasis span(basis.size());
    for (const auto& gen : gens) {
      int w = gen.partition.weight();
      if (gen.value.is_zero() || w > d) continue;
      for (const auto& m : algebra.monomials(d - w)) span.insert(coordinates(gen.value * MultiPoly(m, 1), index));
    }
    dims.push_back(static_cast<long>(basis.size() - span.rank()));
  }
  return dims;
}

}  // namespace

std::vector<long> hilbert_quotient_upper(int g, int max_degree) {
  check_cutoff(max_degree);
  GradedAlgebraSpec algebra(g);
  return upper_from(algebra, relation_generators(g, max_degree), max_degree);
}

namespace {

// e_i(s_1+1..s_g+1) for i = 0..g
std::vector<Rational> lambda_values(const NumericalSemigroup& h) {
  int g = h.genus();
  IndexSequence s = weierstrass_sequence(h);
  std::vector<Rational> shifted;
  for (int i = 1; i <= g; ++i) shifted.emplace_back(s.at(i) + 1);
  std::vector<Rational> values;
  for (int i = 0; i <= g; ++i) values.push_back(elementary(i, shifted));
  return values;
}

}  // namespace

MultiPoly ev_homomorphism(const MultiPoly& p, const NumericalSemigroup& h) {
  auto values = lambda_values(h);
  int g = h.genus();
  Substitution sigma;
  for (const auto& v : p.variables()) {
    if (v.family() == Family::Psi) continue;
    if (v.family() != Family::Lambda) throw DataError("ev_homomorphism: variable " + v.name() + " outside lambda, psi");
    int i = static_cast<int>(v.index());
    Rational value = i <= g ? values[static_cast<std::size_t>(i)] : Rational(0);
    sigma.emplace(v, MultiPoly(Monomial(Variable::psi(), static_cast<unsigned>(i)), value));
  }
  return substitute(p, sigma);
}

std::vector<long> hilbert_quotient_lower(int g, int max_degree) {
  check_cutoff(max_degree);
  GradedAlgebraSpec algebra(g);
  std::vector<std::vector<Rational>> values;
  for (const auto& h : enumerate_semigroups(g)) values.push_back(lambda_values(h));
  std::vector<long> dims;
  for (int d = 0; d <= max_degree; ++d) {
    auto basis = algebra.monomials(d);
    RationalMatrix rows;
    for (const auto& lam : values) {
      std::vector<Rational> row;
      for (const auto& m : basis) {
        // coefficient of psi^d in ev(m)
        Rational entry(1);
        for (const auto& [v, e] : m.factors()) {
          if (v.family() != Family::Lambda) continue;
          Rational base = lam[v.index()];
          for (unsigned r = 0; r < e; ++r) entry *= base;
        }
        row.push_back(entry);
      }
      rows.push_back(std::move(row));
    }
    dims.push_back(static_cast<long>(rank_over_q(std::move(rows))));
  }
  return dims;
}

HilbertReport sandwich_report(int g, int max_degree) {
  check_cutoff(max_degree);
  HilbertReport report;
  report.genus = g;
  report.max_degree = max_degree;
  GradedAlgebraSpec algebra(g);
  auto gens = relation_generators(g, max_degree);
  auto upper = upper_from(algebra, gens, max_degree);
  auto lower = hilbert_quotient_lower(g, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    HilbertRow row;
    row.degree = d;
    row.lower = lower[static_cast<std::size_t>(d)];
    row.upper = upper[static_cast<std::size_t>(d)];
    row.ambient = static_cast<long>(algebra.dim(d));
    for (const auto& gen : gens) row.generators += gen.partition.weight() == d ? 1 : 0;
    if (row.lower > row.upper)
      throw std::logic_error("Hilbert sandwich violated in degree " + std::to_string(d) + ": lower " +
                             std::to_string(row.lower) + " > upper " + std::to_string(row.upper));
    report.rows.push_back(row);
  }
  report.notes.push_back("lower bound is computed on Q[lambda, psi]/I_ev (ev fixes psi)");
  return report;
}

}  // namespace wtaut
