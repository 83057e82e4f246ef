#include "wtaut/semigroups.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wtaut/errors.hpp"

namespace wtaut {

// ------------------------------------------------------- NumericalSemigroup

std::optional<std::string> NumericalSemigroup::check_gaps(const std::vector<int>& gaps) {
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] <= 0) return "gap " + std::to_string(gaps[i]) + " is not positive";
    if (i > 0 && gaps[i] <= gaps[i - 1]) return std::string("gaps must be strictly increasing");
  }
  if (gaps.empty()) return std::nullopt;
  auto is_gap = [&](int n) { return std::binary_search(gaps.begin(), gaps.end(), n); };
  int top = gaps.back();
  for (int a = 1; a <= top; ++a) {
    if (is_gap(a)) continue;
    for (int b = a; a + b <= top; ++b) {
      if (is_gap(b)) continue;
      if (is_gap(a + b))
        return "closure violation: " + std::to_string(a) + "+" + std::to_string(b) + "=" + std::to_string(a + b) +
               " is a gap";
    }
  }
  return std::nullopt;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps) {
  if (auto why = check_gaps(gaps)) throw DataError(*why);
  return NumericalSemigroup(std::move(gaps));
}

bool NumericalSemigroup::contains(int n) const {
  return n >= 0 && !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

int NumericalSemigroup::multiplicity() const {
  int m = 1;
  while (!contains(m)) ++m;
  return m;
}

std::vector<int> NumericalSemigroup::minimal_generators() const {
  std::vector<int> gens;
  int limit = std::max(frobenius() + multiplicity(), multiplicity());
  for (int h = 1; h <= limit; ++h) {
    if (!contains(h)) continue;
    bool decomposable = false;
    for (int a = 1; a <= h / 2 && !decomposable; ++a) decomposable = contains(a) && contains(h - a);
    if (!decomposable) gens.push_back(h);
  }
  return gens;
}

std::string NumericalSemigroup::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < gaps_.size(); ++i) os << (i ? "," : "") << gaps_[i];
  os << '}';
  return os.str();
}

std::vector<NumericalSemigroup> enumerate_semigroups(int g, int max_genus) {
  if (g < 0) throw DataError("genus must be non-negative");
  if (g > max_genus)
    throw ResourceError("genus " + std::to_string(g) + " exceeds the configured maximum " + std::to_string(max_genus));
  std::vector<NumericalSemigroup> out;
  std::function<void(const NumericalSemigroup&)> walk = [&](const NumericalSemigroup& node) {
    if (node.genus() == g) {
      out.push_back(node);
      return;
    }
    for (int h : node.minimal_generators()) {
      if (h <= node.frobenius()) continue;
      std::vector<int> gaps = node.gaps();
      gaps.push_back(h);  // h > Frobenius keeps the list sorted
      walk(NumericalSemigroup::from_gaps(std::move(gaps)));
    }
  };
  walk(NumericalSemigroup());
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ IndexSequence

IndexSequence::IndexSequence(long d, std::vector<long> head) : d_(d), head_(std::move(head)) {
  for (std::size_t i = 1; i < head_.size(); ++i)
    if (head_[i] >= head_[i - 1]) throw DataError("index sequence must be strictly decreasing");
  // drop head terms that already follow the tail rule
  while (!head_.empty() && head_.back() == d_ - static_cast<long>(head_.size())) head_.pop_back();
  if (!head_.empty() && head_.back() <= d_ - static_cast<long>(head_.size()) - 1)
    throw DataError("index sequence head does not stay above its tail: " + str());
}

IndexSequence IndexSequence::from_set(std::vector<long> above, long floor) {
  std::sort(above.begin(), above.end(), std::greater<>());
  above.erase(std::unique(above.begin(), above.end()), above.end());
  if (!above.empty() && above.back() <= floor) throw DataError("from_set: element not above floor");
  long d = floor + 1 + static_cast<long>(above.size());
  return IndexSequence(d, std::move(above));
}

long IndexSequence::at(long i) const {
  if (i >= 1 && i <= static_cast<long>(head_.size())) return head_[static_cast<std::size_t>(i - 1)];
  return d_ - i;
}

bool IndexSequence::contains(long n) const {
  if (n <= tail_top()) return true;
  return std::find(head_.begin(), head_.end(), n) != head_.end();
}

std::string IndexSequence::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < head_.size(); ++i) os << (i ? "," : "") << head_[i];
  os << "|d=" << d_ << ')';
  return os.str();
}

IndexSequence weierstrass_sequence(const NumericalSemigroup& h) {
  int g = h.genus();
  std::vector<long> head;
  for (int i = 1; i <= g; ++i) head.push_back(h.gaps()[static_cast<std::size_t>(g - i)] - 1);
  return IndexSequence(g - 1, std::move(head));
}

std::optional<NumericalSemigroup> semigroup_from_sequence(const IndexSequence& s) {
  // H = Z - (S+1); every integer <= tail_top()+1 lies in S+1.
  if (s.contains(-1)) return std::nullopt;  // 0 must be in H
  for (long n = s.tail_top() + 2; n < 0; ++n)
    if (!s.contains(n - 1)) return std::nullopt;  // negative element of H
  std::vector<int> gaps;
  for (long n = 1; n <= s.top() + 1; ++n)
    if (s.contains(n - 1)) gaps.push_back(static_cast<int>(n));
  if (NumericalSemigroup::check_gaps(gaps)) return std::nullopt;
  if (static_cast<long>(gaps.size()) != s.virtual_cardinality() + 1) return std::nullopt;
  return NumericalSemigroup::from_gaps(std::move(gaps));
}

Partition partition_from_sequence(const IndexSequence& s) {
  std::vector<int> parts;
  long d = s.virtual_cardinality();
  for (long i = 1; i <= static_cast<long>(s.head().size()); ++i) {
    long mu = s.at(i) + i - d;
    if (mu < 0) throw DataError("negative partition entry from sequence " + s.str());
    parts.push_back(static_cast<int>(mu));
  }
  return Partition(std::move(parts));
}

namespace {

// Shared by hprime_partition / hprime_codimension: entries mu_i for
// i = 1..(last index that can be nonzero).
std::vector<long> hprime_entries(const IndexSequence& s, int g) {
  if (s.virtual_cardinality() != g - 1)
    throw DataError("sequence " + s.str() + " does not have the tail s_i = g-1-i for g=" + std::to_string(g));
  if (s.contains(-1)) throw DataError("sequence not in H': -1 is a member of " + s.str());
  long last = std::max<long>(static_cast<long>(s.head().size()), g);
  long i0 = 0;
  for (long i = 1; i <= last; ++i)
    if (s.at(i) >= 0) i0 = i;
  std::vector<long> mu;
  for (long i = 1; i <= last; ++i) mu.push_back(i <= i0 ? s.at(i) + i - g : s.at(i) + i - g + 1);
  return mu;
}

}  // namespace

Partition hprime_partition(const IndexSequence& s, int g) {
  std::vector<int> parts;
  for (long m : hprime_entries(s, g)) {
    if (m < 0) throw DataError("negative H'-partition entry from sequence " + s.str());
    parts.push_back(static_cast<int>(m));
  }
  return Partition(std::move(parts));
}

long hprime_codimension(const IndexSequence& s, int g) {
  long total = 0;
  for (long m : hprime_entries(s, g)) total += m;
  return total;
}

IndexSequence hprime_sequence(const Partition& mu, int g) {
  if (mu.length() > g) throw DataError("partition " + mu.str() + " has more than g=" + std::to_string(g) + " parts");
  std::vector<long> head;
  for (int i = 1; i <= g; ++i) head.push_back(mu[i] - i + g);
  return IndexSequence(g - 1, std::move(head));
}

bool is_realizable(const IndexSequence& s, int g) {
  // the tail d-i stays below g-i-1 exactly when d <= g-1
  if (s.virtual_cardinality() > g - 1) return false;
  long last = std::max<long>(static_cast<long>(s.head().size()), g) + 1;
  for (long i = 1; i <= last; ++i) {
    long bound = i <= g ? 2L * g - 2 * i : g - i - 1;
    if (s.at(i) > bound) return false;
  }
  return true;
}

IndexSequence dual_index_set(const IndexSequence& s) {
  long floor = -2 - s.top();
  std::vector<long> above;
  for (long m = floor + 1; m <= -2 - s.tail_top(); ++m)
    if (!s.contains(-1 - m)) above.push_back(m);
  return IndexSequence::from_set(std::move(above), floor);
}

}  // namespace wtaut
