#include "wtaut/wcycles.hpp"

#include "wtaut/errors.hpp"
#include "wtaut/pullback.hpp"
#include "wtaut/schur.hpp"

namespace wtaut {

MultiPoly cycle_formula(const Partition& mu, int g, bool unshifted) {
  if (g < 1) throw DataError("genus must be at least 1");
  if (mu.length() > g) throw DataError("partition " + mu.str() + " has more than g=" + std::to_string(g) + " parts");
  // shifted: u^{|mu|} t_mu(x/u - 1), i.e. parameters a_r = r; unshifted: a_r = r - 1
  auto params = unshifted ? ParamSequence::factorial() : ParamSequence::affine(0, 1);
  MultiPoly minus_psi = -MultiPoly(Variable::psi());
  auto e_lambda = [g](int k) { return lambda_elementary(k, g); };
  MultiPoly out;
  for (const auto& [nu, c] : double_schur_expansion(mu, g, params))
    out += c * schur_from_elementary(nu, e_lambda) * pow(minus_psi, mu.weight() - nu.weight());
  return out;
}

namespace {

CycleClass build(const Partition& mu, int g, const CycleOptions& options) {
  CycleClass c;
  c.genus = g;
  c.partition = mu;
  c.unshifted = options.unshifted;
  c.class_pointed = cycle_formula(mu, g, options.unshifted);
  c.class_pointed_x = from_lambda_basis(c.class_pointed, g);
  c.class_unpointed = push_to_unpointed(c.class_pointed, g, options.substitute_kappa0);
  return c;
}

}  // namespace

CycleClass weierstrass_class(const NumericalSemigroup& h, const CycleOptions& options) {
  int g = h.genus();
  if (g < 1) throw DataError("Weierstrass cycles need genus >= 1");
  CycleClass c = build(hprime_partition(weierstrass_sequence(h), g), g, options);
  c.semigroup = h;
  return c;
}

CycleClass virtual_class(const Partition& mu, int g, const CycleOptions& options) {
  IndexSequence s = hprime_sequence(mu, g);  // throws when l(mu) > g
  CycleClass c = build(mu, g, options);
  c.realizable = is_realizable(s, g);
  c.is_virtual = !c.realizable;
  return c;
}

MultiPoly push_to_unpointed(const MultiPoly& pointed, int g, bool substitute_kappa0) {
  MultiPoly out;
  for (const auto& [m, c] : pointed.terms()) {
    unsigned e = m.exponent(Variable::psi());
    if (e == 0) continue;
    Monomial rest = m.without(Variable::psi());
    if (e == 1 && substitute_kappa0)
      out.add_term(rest, c * (2 * g - 2));
    else
      out.add_term(rest * Monomial(Variable::kappa(e - 1)), c);
  }
  return out;
}

bool intersection_nonempty(const IndexSequence& s, int g, bool closed) {
  if (closed) return is_realizable(s, g);
  auto h = semigroup_from_sequence(s);
  return h && h->genus() == g;
}

}  // namespace wtaut
