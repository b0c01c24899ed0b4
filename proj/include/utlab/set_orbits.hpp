#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "utlab/kset.hpp"
#include "utlab/perm.hpp"

namespace utlab {

/// Default limit on the number of k-sets held in memory at once.
inline constexpr std::size_t kDefaultSetCap = 10'000'000;

/// One orbit of G on k-sets. Members are stored as sorted colex ranks.
struct KSetOrbit {
  std::size_t degree = 0;
  KSet representative;  // lexicographically least member
  std::vector<std::uint64_t> members;

  std::size_t size() const { return members.size(); }
  std::size_t k() const { return representative.size(); }
  bool contains(const KSet& s) const;
  std::vector<KSet> member_sets() const;
};

/// Sorts the images of the points under g into out.
void apply_sorted(const Permutation& g, std::span<const Point> in, std::span<Point> out);

/// Orbit of a single set by breadth-first closure under the generators.
KSetOrbit orbit_of_set(const PermGroup& G, const KSet& s, std::size_t cap = kDefaultSetCap);

/// Every k-set of {1..n} labelled with the index of its orbit. Orbits are
/// numbered in lexicographic order of their least members.
class OrbitLabelling {
 public:
  OrbitLabelling(const PermGroup& G, std::size_t k, std::size_t cap = kDefaultSetCap);

  std::size_t degree() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t num_orbits() const { return reps_.size(); }
  std::uint32_t label(std::uint64_t rank) const { return labels_[rank]; }
  std::uint32_t label_of(std::span<const Point> sorted_points) const;
  const KSet& representative(std::size_t orbit) const { return reps_[orbit]; }
  std::size_t orbit_size(std::size_t orbit) const { return members_[orbit].size(); }
  /// Sorted colex ranks of the members of an orbit.
  const std::vector<std::uint64_t>& members(std::size_t orbit) const { return members_[orbit]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  KSetOrbit orbit(std::size_t i) const { return {n_, reps_[i], members_[i]}; }

 private:
  std::size_t n_, k_;
  std::vector<std::uint32_t> labels_;
  std::vector<KSet> reps_;
  std::vector<std::vector<std::uint64_t>> members_;
};

/// All orbits on k-sets, ordered by representative.
std::vector<KSetOrbit> orbits_on_ksets(const PermGroup& G, std::size_t k,
                                       std::size_t cap = kDefaultSetCap);

bool is_k_homogeneous(const PermGroup& G, std::size_t k, std::size_t cap = kDefaultSetCap);

/// Outcome of an (i,j)-homogeneity test. On failure, no element of G maps
/// i_set into j_set.
struct IjResult {
  bool holds = true;
  KSet i_set;
  KSet j_set;
  explicit operator bool() const { return holds; }
};

/// Every i-set can be moved into every j-set by some element of G.
IjResult is_ij_homogeneous(const PermGroup& G, std::size_t i, std::size_t j,
                           std::size_t cap = kDefaultSetCap);

/// True iff |G| * k >= C(n, k), a necessary condition for the k-ut property.
bool order_bound_pass(const PermGroup& G, std::size_t k);

/// Complement of a set in {1..n}.
KSet complement(const KSet& s, std::size_t n);

}  // namespace utlab
