#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "utlab/partitions.hpp"
#include "utlab/perm.hpp"
#include "utlab/set_orbits.hpp"
#include "utlab/ut_deciders.hpp"

namespace utlab {

/// A map {1..n} -> {1..n} stored as an image table, composed left to right
/// like Permutation.
class Transformation {
 public:
  Transformation() = default;
  /// Identity of the given degree.
  explicit Transformation(std::size_t degree);

  static Transformation from_images(std::span<const Point> images);
  static Transformation from_permutation(const Permutation& g);
  /// "1,4,5,2,2,2,2,2,2": the image of i is the i-th entry.
  static Transformation parse(const std::string& text);
  /// Sends block i of the kernel to image[i].
  static Transformation from_kernel_image(const SetPartition& kernel, std::span<const Point> image);

  std::size_t degree() const { return img_.empty() ? 0 : img_.size() - 1; }
  Point operator()(Point p) const { return img_[p]; }
  std::span<const Point> images() const { return {img_.data() + 1, degree()}; }

  std::size_t rank() const;
  KSet image() const;
  SetPartition kernel() const;
  bool is_permutation() const { return rank() == degree(); }
  /// At most one kernel class has more than one point.
  bool is_quasi_permutation() const;

  Transformation operator*(const Transformation& b) const;
  Transformation operator*(const Permutation& g) const;

  std::string to_string() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<Point> img_;  // img_[0] == 0
};

/// a then b: i -> b(a(i)). Throws InvalidArgument on degree mismatch.
Transformation t_compose(const Transformation& a, const Transformation& b);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

struct RegularityResult {
  bool regular = false;
  /// On success, g with rank(a g a) = rank(a).
  std::optional<Permutation> g;
  explicit operator bool() const { return regular; }
};

/// Whether a is regular in <a, G>: some image of image(a) under G is a
/// section of kernel(a). Walks the orbit of image(a) with parent pointers
/// and never lists group elements.
RegularityResult is_regular_in(const Transformation& a, const PermGroup& G,
                               std::size_t cap = kDefaultSetCap);

/// Every product of the generators, sorted. Throws CapExceeded past cap.
std::vector<Transformation> semigroup_closure(const std::vector<Transformation>& gens,
                                              std::size_t cap = 1'000'000);
std::vector<Transformation> semigroup_closure_serial(const std::vector<Transformation>& gens,
                                                     std::size_t cap = 1'000'000);

/// Generators of <a, G>: a together with the generators of G.
std::vector<Transformation> generators_with(const Transformation& a, const PermGroup& G);

struct SemigroupRegularity {
  bool regular = true;
  std::optional<Transformation> witness;  // least non-regular element
};

/// S must be closed under composition. b is regular iff some c in S makes
/// rank(bcb) = rank(b); candidates are grouped by the image set of b.
SemigroupRegularity is_regular_semigroup(const std::vector<Transformation>& S);
/// Direct search for c with bcb = b; quadratic, for small S.
SemigroupRegularity is_regular_semigroup_naive(const std::vector<Transformation>& S);

enum class RegularityMode { Delegate, Direct };

struct RankRegularity {
  UtStatus status = UtStatus::Undecided;
  /// Direct mode: a rank-k map that is not regular in <a, G>.
  std::optional<Transformation> witness;
  bool holds() const { return status == UtStatus::Holds; }
};

/// All rank-k maps a are regular in <a, G>. Delegate mode asks has_kut;
/// direct mode runs is_regular_in on one map per (kernel orbit, image
/// orbit) pair.
RankRegularity regular_for_all_rank_k(const PermGroup& G, std::size_t k,
                                      RegularityMode mode = RegularityMode::Delegate);

/// Representatives of the G-orbits on k-partitions, in stream order of
/// their first member. Throws CapExceeded when S(n,k) exceeds cap.
std::vector<SetPartition> kpartition_orbit_reps(const PermGroup& G, std::size_t k,
                                                std::size_t cap = 10'000'000);

/// All rank-k quasi-permutations a are regular in <a, G>, decided by
/// (n-k, n-k+1)-homogeneity (Delegate) or shape by shape (Direct).
RankRegularity quasi_regularity_classifier(const PermGroup& G, std::size_t k,
                                           RegularityMode mode = RegularityMode::Delegate);

}  // namespace utlab
