#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "utlab/core.hpp"

namespace utlab {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// Saturating a + b and a * b on 64-bit counters.
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);

/// C(n, k), saturating at kSaturated. Backed by a table for n <= kMaxDegree.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Exact C(n, k).
BigInt binomial_big(std::size_t n, std::size_t k);

/// Stirling number of the second kind S(n, k), saturating.
std::uint64_t stirling2(std::size_t n, std::size_t k);

/// Colexicographic rank of a strictly increasing list of 1-based points:
/// sum over i of C(p_i - 1, i + 1). Dense in [0, C(n, k)).
std::uint64_t colex_rank(std::span<const Point> sorted_points);

/// Inverse of colex_rank for sets of size k.
void colex_unrank(std::uint64_t rank, std::size_t k, std::span<Point> out);

/// Advances a sorted k-subset of {1..n} to its lexicographic successor.
/// Returns false after the last subset.
bool next_combination(std::span<Point> points, std::size_t n);

/// Union-find over 0-based indices with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when two different classes were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t class_size(std::size_t x) { return size_[find(x)]; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace utlab
