#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "utlab/core.hpp"
#include "utlab/kset.hpp"

namespace utlab {

/// Block index of each point; entry 0 is unused so that labels[p] is the
/// block of point p.
using BlockLabels = std::vector<std::uint16_t>;

/// A partition of {1..n} into nonempty blocks. Always held in canonical
/// form: each block sorted, blocks ordered by their minimum element, so
/// equality of partitions is equality of representations.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws InvalidArgument unless the blocks are nonempty, disjoint and
  /// cover {1..n}.
  SetPartition(std::size_t n, std::vector<std::vector<Point>> blocks);

  /// labels[p] for p = 1..n (labels[0] ignored); any label values.
  static SetPartition from_labels(std::span<const std::uint16_t> labels);

  std::size_t degree() const { return n_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }
  const std::vector<Point>& block(std::size_t i) const { return blocks_[i]; }

  /// Block index per point in canonical block order.
  BlockLabels labels() const;

  /// Product of block sizes, i.e. the number of sections.
  std::uint64_t section_count() const;

  /// The image of this partition under a point map (used for relabelling).
  template <class Map>
  SetPartition mapped(const Map& f) const {
    std::vector<std::vector<Point>> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) {
      std::vector<Point> nb;
      nb.reserve(b.size());
      for (Point p : b) nb.push_back(f(p));
      out.push_back(std::move(nb));
    }
    return SetPartition(n_, std::move(out));
  }

  /// "1|2,7|3,4,5,6"
  std::string to_string() const;
  /// Inverse of to_string; also accepts "{1},{2,7},{3,4,5,6}".
  static SetPartition parse(const std::string& text, std::size_t n);

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Point>> blocks_;
};

/// Disjoint nonempty blocks whose union need not be all of {1..n}.
class SubPartition {
 public:
  SubPartition() = default;
  SubPartition(std::size_t n, std::vector<std::vector<Point>> blocks);

  std::size_t degree() const { return n_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }
  std::size_t support_size() const;
  bool is_placed(Point p) const;
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Point>> blocks_;
};

/// Streams every partition of {1..n} into exactly k blocks, once each, as
/// restricted growth strings in lexicographic order. An optional fixed
/// prefix restricts the stream to completions of that prefix, which is how
/// the parallel kernels split the work.
class KPartitionStream {
 public:
  KPartitionStream(std::size_t n, std::size_t k, std::vector<std::uint8_t> prefix = {});

  /// Advances to the next partition; the first call yields the first one.
  bool next();

  /// rgs()[i] is the block of point i + 1.
  std::span<const std::uint8_t> rgs() const { return rgs_; }
  SetPartition partition() const;

 private:
  bool fill_minimal(std::size_t from, std::size_t used);

  std::size_t n_;
  std::size_t k_;
  std::size_t fixed_;
  std::vector<std::uint8_t> rgs_;
  std::vector<std::uint8_t> prefix_max_;  // blocks used by rgs_[0..i]
  bool started_ = false;
  bool done_ = false;
};

/// All valid RGS prefixes of the given length for k-partitions of {1..n}.
std::vector<std::vector<std::uint8_t>> kpartition_prefixes(std::size_t n, std::size_t k,
                                                           std::size_t length);

/// True iff |s| equals the number of blocks and s meets every block once.
bool is_section(const KSet& s, const SetPartition& p);
bool is_section(std::span<const Point> s, std::span<const std::uint16_t> labels,
                std::size_t num_blocks);

/// Each head a singleton block, every other point in one tail block.
SetPartition singleton_tail_partition(const KSet& heads, std::size_t n);

/// The partition that a Steiner block obstructs: the k-2 given points as
/// singletons, the rest of the block, and everything else.
SetPartition steiner_bad_partition(const KSet& block, const KSet& inside, std::size_t n,
                                   std::size_t k);

}  // namespace utlab
