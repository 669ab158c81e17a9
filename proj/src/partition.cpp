#include "tracecat/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tracecat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out), std::greater<>());
  Partition p;
  p.parts_ = std::move(out);
  p.size_ = size_ + other.size_;
  return p;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 1; c <= largest(); ++c) {
    int count = 0;
    for (int p : parts_)
      if (p >= c) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

bool operator<(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                      a.parts_.end());
}

std::vector<Partition> partitions_of(int n, int max_part, int max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_part < 0 || max_part > n) max_part = n;
  if (max_length < 0) max_length = n;
  std::vector<int> current;
  // Generates in lexicographically decreasing order, which is canonical order.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_length) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

}  // namespace tracecat
