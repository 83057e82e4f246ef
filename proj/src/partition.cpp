#include "wtaut/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wtaut/errors.hpp"

namespace wtaut {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DataError("partition parts must be positive: " + str());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DataError("partition parts must be weakly decreasing: " + str());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (int i = 1; i <= length(); ++i)
    if ((*this)[i] > other[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DataError("empty part in partition '" + text + "'");
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw DataError("");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw DataError("malformed partition '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

namespace {

void extend(int remaining, int max_part, int max_length, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    extend(remaining - p, p, max_length, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  if (n >= 0) extend(n, n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_length) {
  std::vector<Partition> out;
  std::vector<int> current;
  for (int n = 0; n <= max_weight; ++n) extend(n, n, max_length, current, out);
  return out;
}

}  // namespace wtaut
