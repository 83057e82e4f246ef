#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wtaut/partition.hpp"

namespace wtaut {

inline constexpr int kDefaultMaxGenus = 12;

/// Cofinite additive submonoid of N0, stored by its gap set.
class NumericalSemigroup {
 public:
  /// The genus-0 semigroup N0.
  NumericalSemigroup() = default;

  /// Validates the gap list; throws DataError naming the first failing sum,
  /// e.g. "closure violation: 2+2=4 is a gap".
  static NumericalSemigroup from_gaps(std::vector<int> gaps);
  /// Why `gaps` is not the gap set of a numerical semigroup, or nullopt.
  static std::optional<std::string> check_gaps(const std::vector<int>& gaps);

  int genus() const { return static_cast<int>(gaps_.size()); }
  const std::vector<int>& gaps() const { return gaps_; }
  bool contains(int n) const;
  /// Largest gap, -1 for N0.
  int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  /// Smallest positive element.
  int multiplicity() const;
  std::vector<int> minimal_generators() const;

  std::string str() const;

  friend auto operator<=>(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  explicit NumericalSemigroup(std::vector<int> gaps) : gaps_(std::move(gaps)) {}
  std::vector<int> gaps_;
};

/// All semigroups of genus g, sorted by gap list. Walks the semigroup tree
/// (children remove a minimal generator larger than the Frobenius number).
/// Throws ResourceError when g > max_genus.
std::vector<NumericalSemigroup> enumerate_semigroups(int g, int max_genus = kDefaultMaxGenus);

/// Strictly decreasing integer sequence s_1 > s_2 > ... with s_i = d - i for
/// all i past a finite head. d is the virtual cardinality. The head is kept
/// minimal, so two sequences are equal iff their members agree.
class IndexSequence {
 public:
  IndexSequence(long d, std::vector<long> head);

  /// The set `above` (any order) together with every integer <= floor.
  /// Elements of `above` must exceed floor.
  static IndexSequence from_set(std::vector<long> above, long floor);

  long virtual_cardinality() const { return d_; }
  const std::vector<long>& head() const { return head_; }
  /// 1-based term.
  long at(long i) const;
  bool contains(long n) const;
  /// Largest member.
  long top() const { return at(1); }
  /// Every member <= this is in the tail.
  long tail_top() const { return d_ - static_cast<long>(head_.size()) - 1; }

  /// "(2,0|d=1)"
  std::string str() const;

  friend bool operator==(const IndexSequence&, const IndexSequence&) = default;

 private:
  long d_;
  std::vector<long> head_;
};

/// s_i = a_{g-i+1} - 1 for i <= g, tail s_i = g-1-i (d = g-1).
IndexSequence weierstrass_sequence(const NumericalSemigroup& h);

/// Z minus (S+1) when that is a numerical semigroup of genus d+1, else nullopt.
std::optional<NumericalSemigroup> semigroup_from_sequence(const IndexSequence& s);

/// mu_i = s_i + i - d. Throws DataError if some mu_i is negative.
Partition partition_from_sequence(const IndexSequence& s);

/// Partition of S in the Gr_g(H') convention: mu_i = s_i+i-g up to the last
/// nonnegative term, s_i+i-g+1 after it. Requires tail s_i = g-1-i and -1 not
/// in S (DataError "sequence not in H'" otherwise).
Partition hprime_partition(const IndexSequence& s, int g);

/// Codimension |S| of the closed cell in Gr_g(H'), summed term by term.
long hprime_codimension(const IndexSequence& s, int g);

/// The H'-convention sequence of a partition with at most g parts:
/// s_i = mu_i - i + g for i <= g, tail g-1-i. Throws DataError if l(mu) > g.
IndexSequence hprime_sequence(const Partition& mu, int g);

/// s_i <= 2g-2i for i <= g and s_i <= g-i-1 for i > g.
bool is_realizable(const IndexSequence& s, int g);

/// {m : -1-m not in S}; an involution, maps the sequence of H to -H.
IndexSequence dual_index_set(const IndexSequence& s);

}  // namespace wtaut
