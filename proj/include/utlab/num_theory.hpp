#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "utlab/core.hpp"

namespace utlab {

/// Order of the subgroup of GF(p)* generated by gens, by closure.
std::uint64_t subgroup_order(std::uint64_t p, std::span<const std::uint64_t> gens);

struct AglRow {
  std::uint64_t c = 0;
  std::uint64_t order = 0;  // |<-1, c, c-1>|
};

/// The criterion for the 3-ut property of AGL(1,p): every c in
/// GF(p) \ {0,1} generates GF(p)* together with -1 and c-1.
struct AglReport {
  std::uint64_t p = 0;
  std::vector<AglRow> rows;
  bool verdict = true;
  std::vector<std::uint64_t> witnesses;  // c with order < p-1
};

/// With stop_early the scan ends at the first witness.
AglReport agl_criterion(std::uint64_t p, bool stop_early = false);

/// A primitive 6th root of unity c (so c^2 = c - 1) when p = 1 mod 3, p > 7.
std::optional<std::uint64_t> sixth_root_shortcut(std::uint64_t p);

/// The larger of the first two consecutive quadratic residues when
/// p = 1 mod 4, p > 5.
std::optional<std::uint64_t> consecutive_qr_shortcut(std::uint64_t p);

struct SieveRow {
  std::uint64_t p = 0;
  bool verdict = true;
  std::optional<std::uint64_t> min_witness;
  std::uint64_t order = 0;  // of <-1, c, c-1> for the minimal witness, else p-1
  friend bool operator==(const SieveRow&, const SieveRow&) = default;
};

/// Primes p = 11 mod 12 up to limit with the criterion's verdict.
std::vector<SieveRow> sieve_problem1(std::uint64_t limit);
std::vector<SieveRow> sieve_problem1_serial(std::uint64_t limit);

/// Point of the catalog's AGL(1,p) carrying the field element x: 0 is
/// point 1 and w^i is point i + 2 for the least primitive root w.
Point agl_point(std::uint64_t p, std::uint64_t x);

}  // namespace utlab
