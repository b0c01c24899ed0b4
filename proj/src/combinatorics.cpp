#include "utlab/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <memory>

namespace utlab {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kSaturated - b) ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a > kSaturated / b) ? kSaturated : a * b;
}

namespace {

// Pascal triangle for n <= kMaxDegree, saturating.
class BinomialTable {
 public:
  BinomialTable() : rows_(kMaxDegree + 1) {
    for (std::size_t n = 0; n <= kMaxDegree; ++n) {
      rows_[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k)
        rows_[n][k] = sat_add(rows_[n - 1][k - 1], rows_[n - 1][k]);
    }
  }
  std::uint64_t at(std::size_t n, std::size_t k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n <= kMaxDegree) return table().at(n, k);
  return static_cast<std::uint64_t>(std::min<BigInt>(binomial_big(n, k), BigInt(kSaturated)));
}

BigInt binomial_big(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t stirling2(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  // Row-by-row recurrence S(m,j) = j*S(m-1,j) + S(m-1,j-1).
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j)
      row[j] = sat_add(sat_mul(j, row[j]), row[j - 1]);
    row[0] = 0;
  }
  return row[k];
}

std::uint64_t colex_rank(std::span<const Point> sorted_points) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted_points.size(); ++i)
    r += binomial(sorted_points[i] - 1u, i + 1);
  return r;
}

void colex_unrank(std::uint64_t rank, std::size_t k, std::span<Point> out) {
  for (std::size_t i = k; i >= 1; --i) {
    // Largest m with C(m, i) <= rank.
    std::size_t m = i - 1;
    while (binomial(m + 1, i) <= rank) ++m;
    rank -= binomial(m, i);
    out[i - 1] = static_cast<Point>(m + 1);
  }
}

bool next_combination(std::span<Point> points, std::size_t n) {
  const std::size_t k = points.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0 && points[i - 1] == n - k + i) --i;
  if (i == 0) return false;
  ++points[i - 1];
  for (std::size_t j = i; j < k; ++j) points[j] = static_cast<Point>(points[j - 1] + 1);
  return true;
}

}  // namespace utlab
