#pragma once

#include <compare>
#include <string>
#include <vector>

namespace wtaut {

/// Weakly decreasing list of positive integers. Trailing zeros passed to the
/// constructor are dropped; anything else that is not a partition throws.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 1-based part, 0 beyond the length.
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  /// Young-diagram containment: this ⊆ other.
  bool contained_in(const Partition& other) const;

  /// "(2,1)"; the empty partition prints "()".
  std::string str() const;
  /// Accepts "2,1", "(2,1)", "" and "()".
  static Partition parse(const std::string& text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse-lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// All partitions with weight <= max_weight and at most max_length parts.
std::vector<Partition> partitions_up_to(int max_weight, int max_length);

}  // namespace wtaut
