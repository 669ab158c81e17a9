#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tracecat {

// Weakly decreasing sequence of positive integers. The empty partition is
// valid and has size 0.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts decreasingly and drops zero entries; negative entries are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // Union of the multisets of parts.
  Partition merged(const Partition& other) const;
  Partition conjugate() const;
  bool fits_in_box(int rows, int cols) const {
    return length() <= rows && largest() <= cols;
  }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  // Canonical order: by size, then lexicographically decreasing parts, so
  // (3) < (2,1) < (1,1,1).
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of `n` with parts at most `max_part` and at most `max_length`
// parts, in canonical order.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1);

}  // namespace tracecat
