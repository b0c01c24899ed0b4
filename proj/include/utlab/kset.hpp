#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "utlab/core.hpp"

namespace utlab {

/// A strictly increasing list of points. Comparison is lexicographic.
class KSet {
 public:
  KSet() = default;
  /// Sorts and validates; throws InvalidArgument on duplicates or point 0.
  KSet(std::initializer_list<Point> points);
  explicit KSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  Point operator[](std::size_t i) const { return points_[i]; }
  Point max() const { return points_.back(); }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }
  bool is_subset_of(const KSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }
  /// True when every point lies in {1..n}.
  bool fits(std::size_t n) const { return points_.empty() || points_.back() <= n; }

  /// "{1,2,7}"
  std::string to_string() const;
  /// Parses "1,2,7" or "{1,2,7}".
  static KSet parse(const std::string& text);

  friend auto operator<=>(const KSet&, const KSet&) = default;

 private:
  std::vector<Point> points_;
};

}  // namespace utlab
