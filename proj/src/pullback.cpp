#include "wtaut/pullback.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "wtaut/errors.hpp"
#include "wtaut/schur.hpp"

namespace wtaut {

namespace {

const MultiPoly& psi() {
  static const MultiPoly p(Variable::psi());
  return p;
}

const MultiPoly& u() {
  static const MultiPoly p(Variable::u());
  return p;
}

void require_genus(int g) {
  if (g < 1) throw DataError("genus must be at least 1, got " + std::to_string(g));
}

// u^{weight} * p(z/u) evaluated at z_i = x_i + (i-g-shift)u, then u -> -psi.
MultiPoly homogenize(const MultiPoly& p_in_z, int weight, int g, int shift) {
  Substitution to_x;
  for (int i = 1; i <= g; ++i)
    to_x.emplace(Variable::z(static_cast<std::uint32_t>(i)),
                 MultiPoly(Variable::x(static_cast<std::uint32_t>(i))) + u() * Rational(i - g - shift));
  auto parts = homogeneous_components(p_in_z);
  MultiPoly total;
  for (int k = 0; k < static_cast<int>(parts.size()); ++k) {
    if (parts[static_cast<std::size_t>(k)].is_zero()) continue;
    if (k > weight) throw std::logic_error("shifted Schur component above the partition weight");
    total += substitute(parts[static_cast<std::size_t>(k)], to_x) * pow(u(), weight - k);
  }
  return substitute(total, {{Variable::u(), -psi()}});
}

}  // namespace

MultiPoly lambda_elementary(int a, int g) {
  if (a < 0 || a > g) return {};
  if (a == 0) return MultiPoly(1);
  return MultiPoly(Monomial(Variable::lambda(static_cast<std::uint32_t>(a))), a % 2 == 0 ? 1 : -1);
}

PullbackClass kstar_schubert(const Partition& mu, int g) {
  require_genus(g);
  PullbackClass out;
  out.genus = g;
  out.partition = mu;
  if (mu.length() > g) return out;
  // u^{|mu|} t_mu(x_1/u..x_g/u) = sum_nu c_nu u^{|mu|-|nu|} s_nu(x)
  auto expansion = double_schur_expansion(mu, g, ParamSequence::factorial());
  auto e_lambda = [g](int k) { return lambda_elementary(k, g); };
  for (const auto& [nu, c] : expansion) {
    MultiPoly term = c * schur_from_elementary(nu, e_lambda);
    out.value_lambda += term * pow(-psi(), mu.weight() - nu.weight());
  }
  out.value_x = from_lambda_basis(out.value_lambda, g);
  return out;
}

MultiPoly kstar_schubert_padded(const Partition& mu, int g, int n) {
  require_genus(g);
  if (n < g) throw DataError("padding below the genus");
  auto args = z_variables(g);
  args.resize(static_cast<std::size_t>(n), MultiPoly());
  return homogenize(shifted_schur(mu, args), mu.weight(), g, 0);
}

MultiPoly homogenized_shifted_schur(const Partition& mu, int g, int shift) {
  require_genus(g);
  if (mu.length() > g) return {};
  return homogenize(shifted_schur(mu, z_variables(g)), mu.weight(), g, shift);
}

MultiPoly kstar_schubert_double(const Partition& mu, int g, int l) {
  require_genus(g);
  if (l < 1) throw DataError("double Schur level must be positive");
  int n = g - 1 + l;
  if (mu.length() > n) return {};
  auto args = x_variables(g);
  for (int i = g + 1; i <= n; ++i) args.push_back(u() * Rational(g - i));
  auto params = ParamSequence::affine(-l, 1, u());
  return substitute(double_schur(mu, args, params), {{Variable::u(), -psi()}});
}

// ------------------------------------------------------------- power sums

namespace {

// p_k in lambda classes by Newton's identities, e_i -> (-1)^i lambda_i.
std::vector<MultiPoly> newton_power_sums(int s, int g) {
  std::vector<MultiPoly> p(static_cast<std::size_t>(s) + 1);
  for (int k = 1; k <= s; ++k) {
    MultiPoly v = lambda_elementary(k, g) * Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      MultiPoly t = lambda_elementary(i, g) * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1)
        v += t;
      else
        v -= t;
    }
    p[static_cast<std::size_t>(k)] = std::move(v);
  }
  return p;
}

Rational offset_sum(int s, int g) {
  Rational total;
  for (int i = 1; i <= g; ++i) {
    Integer term;
    mpz_pow_ui(term.get_mpz_t(), Integer(i - g).get_mpz_t(), static_cast<unsigned long>(s));
    total += term;
  }
  return total;
}

}  // namespace

PullbackClass kstar_power_sum(int s, int g, PowerSumOptions options) {
  require_genus(g);
  if (s < 1) throw DataError("power index must be positive");
  // Terms past g vanish once x_i = (g-i)u; check a few of them.
  for (int i = g + 1; i <= g + 3; ++i) {
    MultiPoly xi = u() * Rational(g - i);
    Integer shift;
    mpz_pow_ui(shift.get_mpz_t(), Integer(i - g).get_mpz_t(), static_cast<unsigned long>(s));
    MultiPoly term = pow(xi, s) - pow(u(), s) * Rational(s % 2 == 0 ? shift : Integer(-shift));
    if (!term.is_zero()) throw std::logic_error("pinned power-sum tail did not cancel");
  }
  Rational scale = options.chern_character ? Rational(1, 1) / Rational(factorial(s)) : Rational(1);
  PullbackClass out;
  out.genus = g;
  out.power = s;
  MultiPoly shift_part = pow(psi(), s) * offset_sum(s, g);
  for (int i = 1; i <= g; ++i)
    out.value_x += MultiPoly(Monomial(Variable::x(static_cast<std::uint32_t>(i)), static_cast<unsigned>(s)), scale);
  out.value_x -= shift_part;
  out.value_lambda = newton_power_sums(s, g)[static_cast<std::size_t>(s)] * scale - shift_part;
  return out;
}

// ---------------------------------------------------------- lambda basis

MultiPoly from_lambda_basis(const MultiPoly& p, int g) {
  auto x = x_variables(g);
  Substitution sigma;
  for (const auto& v : p.variables()) {
    if (v.family() != Family::Lambda) continue;
    int a = static_cast<int>(v.index());
    MultiPoly e = a <= g ? elementary(a, x) : MultiPoly();
    sigma.emplace(v, a % 2 == 0 ? e : -e);
  }
  return substitute(p, sigma);
}

namespace {

using Dense = std::vector<unsigned>;
struct LexGreater {
  bool operator()(const Dense& a, const Dense& b) const { return a > b; }
};
using DensePoly = std::map<Dense, Rational, LexGreater>;

DensePoly dense_multiply(const DensePoly& a, const DensePoly& b) {
  DensePoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Dense e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = r.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

}  // namespace

MultiPoly to_lambda_basis(const MultiPoly& p, int g) {
  require_genus(g);
  for (const auto& v : p.variables())
    if (v.family() == Family::X && static_cast<int>(v.index()) > g)
      throw DataError("variable " + v.name() + " outside x_1..x_g");
  if (g >= 2) {
    auto xv = [](int i) { return Variable::x(static_cast<std::uint32_t>(i)); };
    Substitution swap{{xv(1), MultiPoly(xv(2))}, {xv(2), MultiPoly(xv(1))}};
    Substitution cycle;
    for (int i = 1; i <= g; ++i) cycle.emplace(xv(i), MultiPoly(xv(i % g + 1)));
    if (substitute(p, swap) != p || substitute(p, cycle) != p)
      throw DataError("polynomial is not symmetric in x_1..x_" + std::to_string(g));
  }
  // group by x-exponent; coefficients carry the remaining variables
  std::map<Dense, MultiPoly, LexGreater> grouped;
  for (const auto& [m, c] : p.terms()) {
    Dense alpha(static_cast<std::size_t>(g), 0);
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      if (v.family() == Family::X)
        alpha[v.index() - 1] = e;
      else
        rest.emplace_back(v, e);
    }
    grouped[alpha].add_term(Monomial::from_factors(std::move(rest)), c);
  }
  std::vector<DensePoly> e_dense(static_cast<std::size_t>(g) + 1);
  for (int k = 1; k <= g; ++k) {
    std::vector<bool> pick(static_cast<std::size_t>(g), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      Dense e(static_cast<std::size_t>(g));
      for (int i = 0; i < g; ++i) e[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i)] ? 1 : 0;
      e_dense[static_cast<std::size_t>(k)].emplace(e, 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  MultiPoly result;
  while (!grouped.empty()) {
    auto it = grouped.begin();
    if (it->second.is_zero()) {
      grouped.erase(it);
      continue;
    }
    Dense alpha = it->first;
    MultiPoly coeff = it->second;
    for (std::size_t k = 0; k + 1 < alpha.size(); ++k)
      if (alpha[k] < alpha[k + 1]) throw DataError("polynomial is not symmetric in the x variables");
    DensePoly product{{Dense(static_cast<std::size_t>(g), 0), Rational(1)}};
    MultiPoly lambda_product(1);
    for (int k = 1; k <= g; ++k) {
      unsigned mult = alpha[static_cast<std::size_t>(k - 1)] - (k < g ? alpha[static_cast<std::size_t>(k)] : 0);
      for (unsigned r = 0; r < mult; ++r) product = dense_multiply(product, e_dense[static_cast<std::size_t>(k)]);
      if (mult > 0) lambda_product *= pow(lambda_elementary(k, g), mult);
    }
    result += coeff * lambda_product;
    for (const auto& [e, c] : product) {
      auto& slot = grouped[e];
      slot -= coeff * c;
    }
    auto top = grouped.find(alpha);
    if (top != grouped.end() && !top->second.is_zero())
      throw std::logic_error("symmetric reduction failed to cancel the leading term");
    if (top != grouped.end()) grouped.erase(top);
  }
  return result;
}

// ---------------------------------------------------------------- Mumford

struct MumfordReducer::Table {
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t, MonomialOrder> index;
  EchelonBasis echelon{0};
};

MumfordReducer::MumfordReducer(int g) : g_(g) {
  if (g < 0) throw DataError("negative genus");
  MultiPoly total_chern(1);
  MultiPoly dual_chern(1);
  for (int i = 1; i <= g; ++i) {
    MultiPoly li(Variable::lambda(static_cast<std::uint32_t>(i)));
    total_chern += li;
    dual_chern += i % 2 == 0 ? li : -li;
  }
  MultiPoly product = total_chern * dual_chern;
  for (int k = 1; k <= g; ++k) generators_.push_back(product.component(2 * k));
}

const MumfordReducer::Table& MumfordReducer::table(int d) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto found = tables_.find(d);
  if (found != tables_.end()) return *found->second;
  std::vector<Variable> vars;
  for (int i = 1; i <= g_; ++i) vars.push_back(Variable::lambda(static_cast<std::uint32_t>(i)));
  vars.push_back(Variable::psi());
  auto t = std::make_shared<Table>();
  t->basis = weighted_monomials(vars, d);
  for (std::size_t k = 0; k < t->basis.size(); ++k) t->index.emplace(t->basis[k], k);
  t->echelon = EchelonBasis(t->basis.size());
  for (const auto& gen : generators_) {
    int w = gen.degree();
    if (gen.is_zero() || w > d) continue;
    for (const auto& m : weighted_monomials(vars, d - w)) {
      std::vector<Rational> row(t->basis.size());
      for (const auto& [mono, c] : gen.terms()) row[t->index.at(mono * m)] = c;
      t->echelon.insert(std::move(row));
    }
  }
  return *tables_.emplace(d, std::move(t)).first->second;
}

MultiPoly MumfordReducer::reduce(const MultiPoly& p) const {
  // split off variables other than lambda/psi as coefficients
  std::map<Monomial, MultiPoly, MonomialOrder> groups;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> inner;
    std::vector<Monomial::Factor> outer;
    for (const auto& f : m.factors()) {
      bool taut = f.first.family() == Family::Psi ||
                  (f.first.family() == Family::Lambda && static_cast<int>(f.first.index()) <= g_);
      (taut ? inner : outer).push_back(f);
    }
    groups[Monomial::from_factors(std::move(outer))].add_term(Monomial::from_factors(std::move(inner)), c);
  }
  MultiPoly result;
  for (const auto& [outer, q] : groups) {
    for (int d = 0; d <= q.degree(); ++d) {
      MultiPoly part = q.component(d);
      if (part.is_zero()) continue;
      const Table& t = table(d);
      std::vector<Rational> v(t.basis.size());
      for (const auto& [m, c] : part.terms()) v[t.index.at(m)] = c;
      v = t.echelon.reduce(std::move(v));
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) result.add_term(t.basis[k] * outer, v[k]);
    }
  }
  return result;
}

MultiPoly mumford_reduce(const MultiPoly& p, int g) { return MumfordReducer(g).reduce(p); }

// ----------------------------------------------------- smooth power sums

Rational bernoulli(int n) {
  if (n < 0) throw DataError("Bernoulli index must be non-negative");
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational sum;
    for (int j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-sum / Rational(m + 1));
  }
  return b[static_cast<std::size_t>(n)];
}

SmoothPowerSum smooth_power_sum(int s, int g, bool paper_sign) {
  require_genus(g);
  if (s < 1) throw DataError("power index must be positive");
  SmoothPowerSum out;
  MultiPoly shift = pow(psi(), s) * offset_sum(s, g);
  if (s % 2 == 0) {
    out.value = paper_sign ? shift : -shift;
    out.printed = shift;
    out.notes.push_back("even s: sign of the psi term follows from c(E)c(E*)=1; printed form has +");
    if (paper_sign) out.notes.push_back("even-case sign set to the printed form");
  } else {
    int r = (s + 1) / 2;
    Rational coeff = bernoulli(2 * r) / Rational(2 * r);
    out.value = MultiPoly(Monomial(Variable::kappa(static_cast<std::uint32_t>(2 * r - 1))), coeff) - shift;
    out.printed = MultiPoly(Monomial(Variable::kappa(static_cast<std::uint32_t>(2 * r))), coeff) - shift;
    out.notes.push_back("odd s: kappa index 2r-1 keeps the class homogeneous of degree s; printed form has kappa_{2r}");
  }
  return out;
}

MultiPoly chern_interval(long i, long j) {
  MultiPoly r(1);
  for (long m = i; m <= j; ++m) r *= MultiPoly(1) - u() * Rational(m + 1);
  return r;
}

}  // namespace wtaut
