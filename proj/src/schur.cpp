#include "wtaut/schur.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wtaut/errors.hpp"

namespace wtaut {

// ------------------------------------------------------------ ParamSequence

ParamSequence ParamSequence::factorial() { return affine(-1, 1); }

ParamSequence ParamSequence::zero() { return affine(0, 0); }

ParamSequence ParamSequence::affine(const Rational& offset, const Rational& slope, const MultiPoly& unit) {
  ParamSequence p;
  p.offset_ = offset;
  p.slope_ = slope;
  p.unit_ = unit;
  return p;
}

ParamSequence ParamSequence::list(std::vector<MultiPoly> values) {
  ParamSequence p;
  p.affine_ = false;
  p.values_ = std::move(values);
  return p;
}

ParamSequence ParamSequence::translated(long k) const {
  if (!affine_) throw DataError("translation is only defined for affine parameter rules");
  // a_{j-k} = (offset - slope*k + slope*j) * unit
  return affine(offset_ - slope_ * k, slope_, unit_);
}

MultiPoly ParamSequence::at(long j) const {
  if (affine_) return unit_ * Rational(offset_ + slope_ * j);
  if (j < 1 || j > static_cast<long>(values_.size()))
    throw DataError("parameter a_" + std::to_string(j) + " outside the explicit list");
  return values_[static_cast<std::size_t>(j - 1)];
}

// ---------------------------------------------------------------- builders

MultiPoly falling_factorial(const MultiPoly& z, int i) {
  MultiPoly r(1);
  for (int k = 0; k < i; ++k) r *= z - MultiPoly(k);
  return r;
}

MultiPoly generalized_power(const MultiPoly& z, int k, const ParamSequence& a) {
  MultiPoly r(1);
  for (int m = 1; m <= k; ++m) r *= z - a.at(m);
  return r;
}

std::vector<MultiPoly> x_variables(int n) {
  std::vector<MultiPoly> v;
  for (int i = 1; i <= n; ++i) v.emplace_back(Variable::x(static_cast<std::uint32_t>(i)));
  return v;
}

std::vector<MultiPoly> z_variables(int n) {
  std::vector<MultiPoly> v;
  for (int i = 1; i <= n; ++i) v.emplace_back(Variable::z(static_cast<std::uint32_t>(i)));
  return v;
}

namespace {

bool has_repeated_argument(const std::vector<MultiPoly>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) return true;
  return false;
}

MultiPoly double_schur_distinct(const Partition& mu, const std::vector<MultiPoly>& x, const ParamSequence& a) {
  int n = static_cast<int>(x.size());
  int top = mu[1] + n - 1;
  PolyMatrix num(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // powers[k] = (x_i|a)^k
    std::vector<MultiPoly> powers{MultiPoly(1)};
    for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * (x[static_cast<std::size_t>(i)] - a.at(k)));
    for (int j = 1; j <= n; ++j)
      num(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) = powers[static_cast<std::size_t>(mu[j] + n - j)];
  }
  MultiPoly result = det(num);
  Rational scalar(1);
  std::vector<MultiPoly> factors;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MultiPoly diff = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
      if (diff.is_constant())
        scalar *= diff.constant_term();
      else
        factors.push_back(std::move(diff));
    }
  result *= Rational(1 / scalar);
  for (const auto& f : factors) {
    auto q = divide_exact(result, f);
    if (!q) throw std::logic_error("Schur numerator not divisible by the Vandermonde product");
    result = std::move(*q);
  }
  return result;
}

}  // namespace

MultiPoly double_schur(const Partition& mu, const std::vector<MultiPoly>& x, const ParamSequence& a) {
  int n = static_cast<int>(x.size());
  if (mu.length() > n)
    throw DataError("insufficient variables: partition " + mu.str() + " needs at least " +
                    std::to_string(mu.length()) + " arguments, got " + std::to_string(n));
  if (n == 0) return MultiPoly(1);
  if (!has_repeated_argument(x)) return double_schur_distinct(mu, x, a);
  // Equal arguments make both alternants vanish; evaluate the (polynomial)
  // ratio on fresh symbols and substitute afterwards.
  constexpr std::uint32_t kFresh = 100000;
  std::vector<MultiPoly> generic;
  Substitution back;
  for (int i = 0; i < n; ++i) {
    Variable v = Variable::z(kFresh + static_cast<std::uint32_t>(i));
    generic.emplace_back(v);
    back.emplace(v, x[static_cast<std::size_t>(i)]);
  }
  return substitute(double_schur_distinct(mu, generic, a), back);
}

MultiPoly factorial_schur(const Partition& mu, const std::vector<MultiPoly>& z) {
  return double_schur(mu, z, ParamSequence::factorial());
}

MultiPoly shifted_schur(const Partition& mu, const std::vector<MultiPoly>& z) {
  int n = static_cast<int>(z.size());
  if (mu.length() > n) return {};
  std::vector<MultiPoly> shifted;
  for (int i = 1; i <= n; ++i) shifted.push_back(z[static_cast<std::size_t>(i - 1)] + MultiPoly(n - i));
  return factorial_schur(mu, shifted);
}

SchurExpansion double_schur_expansion(const Partition& mu, int n, const ParamSequence& a) {
  if (mu.length() > n)
    throw DataError("insufficient variables: partition " + mu.str() + " needs " + std::to_string(mu.length()));
  // column j holds (w|a)^{m_j} = sum_k coeff[j][k] w^k
  std::vector<std::vector<MultiPoly>> coeff(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int m = mu[j] + n - j;
    std::vector<MultiPoly> params;
    for (int r = 1; r <= m; ++r) params.push_back(-a.at(r));
    auto& c = coeff[static_cast<std::size_t>(j - 1)];
    for (int k = 0; k <= m; ++k) c.push_back(elementary(m - k, params));
  }
  std::map<Partition, MultiPoly> acc;
  std::vector<int> chosen;
  std::vector<bool> used;
  auto recurse = [&](auto&& self, int j, const MultiPoly& weight) -> void {
    if (j == n) {
      // sort exponents decreasingly, tracking the permutation sign
      std::vector<int> k = chosen;
      int sign = 1;
      for (std::size_t p = 0; p < k.size(); ++p)
        for (std::size_t q = 0; q + 1 < k.size() - p; ++q)
          if (k[q] < k[q + 1]) {
            std::swap(k[q], k[q + 1]);
            sign = -sign;
          }
      std::vector<int> parts;
      for (int i = 0; i < n; ++i) parts.push_back(k[static_cast<std::size_t>(i)] - (n - 1 - i));
      acc[Partition(std::move(parts))] += sign > 0 ? weight : -weight;
      return;
    }
    const auto& col = coeff[static_cast<std::size_t>(j)];
    for (int k = 0; k < static_cast<int>(col.size()); ++k) {
      if (col[static_cast<std::size_t>(k)].is_zero()) continue;
      if (static_cast<std::size_t>(k) < used.size() && used[static_cast<std::size_t>(k)]) continue;
      if (used.size() <= static_cast<std::size_t>(k)) used.resize(static_cast<std::size_t>(k) + 1, false);
      used[static_cast<std::size_t>(k)] = true;
      chosen.push_back(k);
      self(self, j + 1, weight * col[static_cast<std::size_t>(k)]);
      chosen.pop_back();
      used[static_cast<std::size_t>(k)] = false;
    }
  };
  recurse(recurse, 0, MultiPoly(1));
  SchurExpansion out;
  for (auto& [nu, c] : acc)
    if (!c.is_zero()) out.emplace_back(nu, std::move(c));
  return out;
}

MultiPoly schur_from_elementary(const Partition& nu, const std::function<MultiPoly(int)>& e) {
  Partition conj = nu.conjugate();
  int l = conj.length();
  if (l == 0) return MultiPoly(1);
  PolyMatrix m(static_cast<std::size_t>(l), static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      int k = conj[i] - i + j;
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          k < 0 ? MultiPoly() : (k == 0 ? MultiPoly(1) : e(k));
    }
  return det(m);
}

std::vector<MultiPoly> homogeneous_components(const MultiPoly& p) {
  return homogeneous_components(p, [](const Variable& v) { return v.weight(); });
}

std::vector<MultiPoly> homogeneous_components(const MultiPoly& p, const Grading& weight) {
  std::vector<MultiPoly> out;
  for (const auto& [m, c] : p.terms()) {
    long d = 0;
    for (const auto& [v, e] : m.factors()) d += static_cast<long>(weight(v)) * e;
    if (d < 0) throw DataError("negative weighted degree in homogeneous_components");
    if (out.size() <= static_cast<std::size_t>(d)) out.resize(static_cast<std::size_t>(d) + 1);
    out[static_cast<std::size_t>(d)].add_term(m, c);
  }
  if (out.empty()) out.emplace_back();
  return out;
}

PolyMatrix psi_matrix(const Partition& mu, int g, PsiVariant variant) {
  bool primed = variant == PsiVariant::PsiPrime;
  Partition rows_from = primed ? mu.conjugate() : mu;
  int l = rows_from.length();
  PolyMatrix m(static_cast<std::size_t>(l), static_cast<std::size_t>(l));
  if (l == 0) return m;
  int max_deg = rows_from[1] + l;
  auto x = x_variables(g);
  std::vector<MultiPoly> e_x;
  std::vector<MultiPoly> h_x;
  for (int a = 0; a <= max_deg; ++a) {
    e_x.push_back(elementary(a, x));
    h_x.push_back(complete(a, x));
  }
  MultiPoly psi(Variable::psi());
  for (int i = 1; i <= l; ++i) {
    int part = rows_from[i];
    // Psi:  c = mu_i - i + g,    c >= 1: h_a(x) e_b(0..c-1)     else h_a(x) h_b(0..-c)
    // Psi': c = g + i - mu'_i,   c >= 1: e_a(x) h_b(0..c-1)     else e_a(x) e_b(0..-c)
    int c = primed ? g + i - part : part - i + g;
    std::vector<Rational> list;
    for (int v = 0; v <= (c >= 1 ? c - 1 : -c); ++v) list.emplace_back(v);
    bool x_elementary = primed;
    bool list_elementary = (c >= 1) != primed;
    for (int j = 1; j <= l; ++j) {
      int deg = part + j - i;
      MultiPoly entry;
      for (int a = 0; a <= deg; ++a) {
        int b = deg - a;
        Rational numeric = list_elementary ? elementary(b, list) : complete(b, list);
        if (numeric == 0) continue;
        const MultiPoly& xpart = x_elementary ? e_x[static_cast<std::size_t>(a)] : h_x[static_cast<std::size_t>(a)];
        entry += xpart * MultiPoly(Monomial(Variable::psi(), static_cast<unsigned>(b)), numeric);
      }
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = std::move(entry);
    }
  }
  return m;
}

}  // namespace wtaut
