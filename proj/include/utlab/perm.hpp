#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "utlab/core.hpp"
#include "utlab/partitions.hpp"

namespace utlab {

/// A bijection of {1..n} stored as an image table. Composition is
/// left-to-right: (p * q)(i) = q(p(i)), so a point set I moved by g is Ig.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// images[i - 1] is the image of i. Throws unless it is a bijection.
  static Permutation from_images(std::span<const Point> images);
  /// Cycle notation such as "(1,2,3)(4,5)"; "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.empty() ? 0 : img_.size() - 1; }
  Point operator()(Point p) const { return img_[p]; }
  /// Images of 1..n, in order.
  std::span<const Point> images() const { return {img_.data() + 1, degree()}; }
  /// Raw table including the unused slot 0, for hot loops: table()[p] = image of p.
  const Point* table() const { return img_.data(); }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& q) const;
  std::size_t order() const;

  std::string to_cycle_string() const;
  std::string to_image_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> img_;  // img_[0] == 0
};

/// p then q. Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Deterministic stabilizer chain with base 1, 2, 3, ... (levels whose
/// basic orbit is trivial are kept so that level i always stabilizes
/// 1..i). Built by Knuth's incremental sifting version of Schreier-Sims.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  BigInt order() const;
  std::size_t degree() const { return n_; }
  std::size_t depth() const { return levels_.size(); }
  /// Basic orbit of base point i + 1 under the pointwise stabilizer of 1..i.
  const std::vector<Point>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  bool contains(const Permutation& g) const;
  /// Largest t such that the group is t-transitive (n for S_n).
  std::size_t transitivity() const;

 private:
  struct Level {
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into reps, or -1
    std::vector<Permutation> reps;   // reps[i] maps the base point to orbit[i]
    std::vector<Permutation> inv;
  };

  Level& level(std::size_t i);
  void add_generator(std::size_t i, const Permutation& g);
  void add_coset(std::size_t i, const Permutation& h);
  Permutation sift_from(std::size_t i, Permutation g) const;

  std::size_t n_;
  std::deque<Level> levels_;
};

/// An invariant partition into equal-size blocks.
struct BlockSystem {
  SetPartition blocks;
  std::size_t block_size() const { return blocks.block(0).size(); }
};

/// A permutation group given by generators. Immutable; the stabilizer chain
/// is computed once on first use and shared between copies, and concurrent
/// readers are safe.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {});

  std::size_t degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  const StabilizerChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  std::size_t transitivity() const { return chain().transitivity(); }

  std::vector<Point> orbit(Point p) const;
  /// Point orbits, each sorted, ordered by least element.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Block system generated by {1, beta}: the finest invariant partition in
  /// which 1 and beta share a block.
  SetPartition minimal_block(Point beta) const;
  /// std::nullopt when primitive, otherwise a nontrivial block system of
  /// smallest block size. Throws InvalidArgument when intransitive.
  std::optional<BlockSystem> find_block_system() const;
  bool is_primitive() const { return !find_block_system().has_value(); }

  /// All elements by breadth-first closure; throws CapExceeded past cap.
  std::vector<Permutation> elements(std::size_t cap = 1'000'000) const;

 private:
  struct Cache;

  std::size_t n_;
  std::vector<Permutation> gens_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace utlab
