#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "wonderful/errors.hpp"

namespace wonderful {

/// Subset I of {1..rank} naming the G x G-orbit O_I of the wonderful
/// compactification: the points lying on exactly the boundary divisors D_i,
/// i in I. The empty set is the open orbit, the full set the closed one.
class OrbitLabel {
 public:
  OrbitLabel() = default;
  OrbitLabel(std::size_t rank, std::vector<int> subset) : rank_(rank), subset_(std::move(subset)) {
    std::sort(subset_.begin(), subset_.end());
    subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
    for (int i : subset_)
      if (i < 1 || static_cast<std::size_t>(i) > rank_)
        throw IndexOutOfRange("orbit index " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
  }

  static OrbitLabel open(std::size_t rank) { return {rank, {}}; }
  static OrbitLabel closed(std::size_t rank) {
    std::vector<int> all;
    for (std::size_t i = 1; i <= rank; ++i) all.push_back(static_cast<int>(i));
    return {rank, std::move(all)};
  }

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<int>& subset() const noexcept { return subset_; }
  bool is_open() const noexcept { return subset_.empty(); }
  bool is_closed() const noexcept { return subset_.size() == rank_; }
  /// Codimension of the orbit in X.
  std::size_t codimension() const noexcept { return subset_.size(); }

  std::string str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < subset_.size(); ++k) s += (k ? "," : "") + std::to_string(subset_[k]);
    return s + "}";
  }

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
  friend std::ostream& operator<<(std::ostream& os, const OrbitLabel& o) { return os << o.str(); }

 private:
  std::size_t rank_ = 0;
  std::vector<int> subset_;
};

/// The closure of O_a contains O_b iff a is a subset of b.
inline bool orbit_closure_contains(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.rank() != b.rank())
    throw RankMismatch("orbit labels of rank " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
  return std::includes(b.subset().begin(), b.subset().end(), a.subset().begin(), a.subset().end());
}

}  // namespace wonderful
