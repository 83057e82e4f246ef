#pragma once

#include <optional>
#include <string>

#include "wtaut/partition.hpp"
#include "wtaut/poly.hpp"
#include "wtaut/semigroups.hpp"

namespace wtaut {

struct CycleOptions {
  /// Use t_mu(-x/psi) (no argument shift) instead of s*_mu(z) with z_i = (x_i-(i-g-1)psi)/(-psi).
  bool unshifted = false;
  /// Replace kappa_0 by 2g-2 in the unpointed class.
  bool substitute_kappa0 = false;
};

/// Class of a (possibly virtual) Weierstrass cycle. Formulas hold up to a
/// nonzero constant for generic cycles; `normalization` records that.
struct CycleClass {
  int genus = 0;
  std::optional<NumericalSemigroup> semigroup;
  Partition partition;  // H' convention
  MultiPoly class_pointed;    // lambda, psi
  MultiPoly class_pointed_x;  // x, psi
  MultiPoly class_unpointed;  // lambda, kappa
  bool realizable = true;
  bool is_virtual = false;
  bool unshifted = false;
  std::string normalization = "up-to-constant";

  int codimension() const { return partition.weight(); }
};

/// [W_H] for a semigroup of genus >= 1.
CycleClass weierstrass_class(const NumericalSemigroup& h, const CycleOptions& options = {});

/// The same formula driven by any partition with at most g parts; flagged
/// virtual when its sequence fails the realizability bound.
CycleClass virtual_class(const Partition& mu, int g, const CycleOptions& options = {});

/// The (-psi)^{|mu|} s*_mu(z) polynomial of the cycle formula, lambda form.
MultiPoly cycle_formula(const Partition& mu, int g, bool unshifted = false);

/// c(lambda) psi^m -> c(lambda) kappa_{m-1}, kappa_{-1} = 0.
MultiPoly push_to_unpointed(const MultiPoly& pointed, int g, bool substitute_kappa0 = false);

/// closed = false: Z - (S+1) is a numerical semigroup of genus g (open cell);
/// closed = true: the realizability bound (closed cell).
bool intersection_nonempty(const IndexSequence& s, int g, bool closed);

}  // namespace wtaut
