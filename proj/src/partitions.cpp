#include "utlab/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "utlab/combinatorics.hpp"

namespace utlab {

// ---------------------------------------------------------------- KSet

KSet::KSet(std::initializer_list<Point> points) : KSet(std::vector<Point>(points)) {}

KSet::KSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw InvalidArgument("KSet: duplicate point");
  if (!points_.empty() && points_.front() == 0) throw InvalidArgument("KSet: point 0");
}

std::string KSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < points_.size(); ++i) os << (i ? "," : "") << points_[i];
  os << '}';
  return os.str();
}

KSet KSet::parse(const std::string& text) {
  std::vector<Point> pts;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    const unsigned long v = std::stoul(digits);
    if (v == 0 || v > kMaxDegree) throw InvalidArgument("KSet: point out of range: " + digits);
    pts.push_back(static_cast<Point>(v));
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      flush();
    } else {
      throw InvalidArgument("KSet: unexpected character in '" + text + "'");
    }
  }
  flush();
  return KSet(std::move(pts));
}

// -------------------------------------------------------- SetPartition

SetPartition::SetPartition(std::size_t n, std::vector<std::vector<Point>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<char> seen(n + 1, 0);
  std::size_t total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidArgument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (Point p : b) {
      if (p == 0 || p > n) throw InvalidArgument("SetPartition: point out of range");
      if (seen[p]) throw InvalidArgument("SetPartition: blocks overlap");
      seen[p] = 1;
      ++total;
    }
  }
  if (total != n) throw InvalidArgument("SetPartition: blocks do not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_labels(std::span<const std::uint16_t> labels) {
  const std::size_t n = labels.size() - 1;
  std::vector<std::vector<Point>> blocks;
  std::vector<int> slot;
  for (std::size_t p = 1; p <= n; ++p) {
    const std::size_t l = labels[p];
    if (l >= slot.size()) slot.resize(l + 1, -1);
    if (slot[l] < 0) {
      slot[l] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[l]].push_back(static_cast<Point>(p));
  }
  return SetPartition(n, std::move(blocks));
}

BlockLabels SetPartition::labels() const {
  BlockLabels out(n_ + 1, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (Point p : blocks_[i]) out[p] = static_cast<std::uint16_t>(i);
  return out;
}

std::uint64_t SetPartition::section_count() const {
  std::uint64_t c = 1;
  for (const auto& b : blocks_) c = sat_mul(c, b.size());
  return c;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) os << (j ? "," : "") << blocks_[i][j];
  }
  return os.str();
}

SetPartition SetPartition::parse(const std::string& text, std::size_t n) {
  std::vector<std::vector<Point>> blocks;
  std::string t = text;
  // Accept "{1},{2,7}" by turning "},{" into '|'.
  std::string norm;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '}') {
      std::size_t j = i + 1;
      while (j < t.size() && (t[j] == ',' || t[j] == ' ')) ++j;
      if (j < t.size() && t[j] == '{') {
        norm.push_back('|');
        i = j;
        continue;
      }
      continue;
    }
    if (t[i] == '{' || t[i] == ' ') continue;
    norm.push_back(t[i]);
  }
  std::stringstream ss(norm);
  std::string part;
  while (std::getline(ss, part, '|')) {
    KSet b = KSet::parse(part);
    blocks.emplace_back(b.begin(), b.end());
  }
  return SetPartition(n, std::move(blocks));
}

// -------------------------------------------------------- SubPartition

SubPartition::SubPartition(std::size_t n, std::vector<std::vector<Point>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<char> seen(n + 1, 0);
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidArgument("SubPartition: empty block");
    std::sort(b.begin(), b.end());
    for (Point p : b) {
      if (p == 0 || p > n) throw InvalidArgument("SubPartition: point out of range");
      if (seen[p]) throw InvalidArgument("SubPartition: blocks overlap");
      seen[p] = 1;
    }
  }
}

std::size_t SubPartition::support_size() const {
  std::size_t s = 0;
  for (const auto& b : blocks_) s += b.size();
  return s;
}

bool SubPartition::is_placed(Point p) const {
  for (const auto& b : blocks_)
    if (std::binary_search(b.begin(), b.end(), p)) return true;
  return false;
}

std::string SubPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) os << (j ? "," : "") << blocks_[i][j];
  }
  return os.str();
}

// ---------------------------------------------------- KPartitionStream

KPartitionStream::KPartitionStream(std::size_t n, std::size_t k, std::vector<std::uint8_t> prefix)
    : n_(n), k_(k), fixed_(prefix.size()), rgs_(n, 0), prefix_max_(n, 0) {
  if (k < 1 || k > n) throw InvalidArgument("KPartitionStream: need 1 <= k <= n");
  if (k > 255) throw InvalidArgument("KPartitionStream: k too large");
  if (prefix.size() > n) throw InvalidArgument("KPartitionStream: prefix too long");
  std::size_t used = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] > used || prefix[i] >= k)
      throw InvalidArgument("KPartitionStream: prefix is not a restricted growth string");
    rgs_[i] = prefix[i];
    used = std::max<std::size_t>(used, prefix[i] + 1u);
    prefix_max_[i] = static_cast<std::uint8_t>(used);
  }
  if (k - std::min(k, used) > n - prefix.size()) done_ = true;
}

bool KPartitionStream::fill_minimal(std::size_t from, std::size_t used) {
  if (k_ < used || k_ - used > n_ - from) return false;
  for (std::size_t j = from; j < n_; ++j) {
    const std::size_t needed = k_ - used;
    const std::size_t remaining = n_ - j;
    std::uint8_t v = 0;
    if (needed == remaining) v = static_cast<std::uint8_t>(used);
    rgs_[j] = v;
    used = std::max<std::size_t>(used, v + 1u);
    prefix_max_[j] = static_cast<std::uint8_t>(used);
  }
  return used == k_;
}

bool KPartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    const std::size_t used = fixed_ ? prefix_max_[fixed_ - 1] : 0;
    if (fill_minimal(fixed_, used)) return true;
    done_ = true;
    return false;
  }
  for (std::size_t i = n_; i-- > fixed_;) {
    if (i == 0) break;
    const std::size_t prev_used = prefix_max_[i - 1];
    const std::size_t v = rgs_[i] + 1u;
    if (v > prev_used || v >= k_) continue;
    const std::size_t new_used = std::max(prev_used, v + 1);
    if (k_ - new_used > n_ - 1 - i) continue;
    rgs_[i] = static_cast<std::uint8_t>(v);
    prefix_max_[i] = static_cast<std::uint8_t>(new_used);
    if (fill_minimal(i + 1, new_used)) return true;
  }
  done_ = true;
  return false;
}

SetPartition KPartitionStream::partition() const {
  std::vector<std::vector<Point>> blocks(k_);
  for (std::size_t i = 0; i < n_; ++i) blocks[rgs_[i]].push_back(static_cast<Point>(i + 1));
  return SetPartition(n_, std::move(blocks));
}

std::vector<std::vector<std::uint8_t>> kpartition_prefixes(std::size_t n, std::size_t k,
                                                           std::size_t length) {
  std::vector<std::vector<std::uint8_t>> out;
  length = std::min(length, n);
  std::vector<std::uint8_t> cur;
  auto rec = [&](auto&& self, std::size_t used) -> void {
    if (cur.size() == length) {
      if (k >= used && k - used <= n - length) out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v <= used && v < k; ++v) {
      if (cur.empty() && v > 0) break;
      cur.push_back(static_cast<std::uint8_t>(v));
      self(self, std::max(used, v + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// ------------------------------------------------------------ sections

bool is_section(std::span<const Point> s, std::span<const std::uint16_t> labels,
                std::size_t num_blocks) {
  if (s.size() != num_blocks) return false;
  // Blocks can exceed 64, so mark in a small vector rather than a mask.
  if (num_blocks <= 64) {
    std::uint64_t mask = 0;
    for (Point p : s) {
      const std::uint64_t bit = std::uint64_t{1} << labels[p];
      if (mask & bit) return false;
      mask |= bit;
    }
    return true;
  }
  std::vector<char> hit(num_blocks, 0);
  for (Point p : s) {
    if (hit[labels[p]]) return false;
    hit[labels[p]] = 1;
  }
  return true;
}

bool is_section(const KSet& s, const SetPartition& p) {
  if (!s.fits(p.degree())) return false;
  const auto labels = p.labels();
  return is_section(s.points(), labels, p.num_blocks());
}

SetPartition singleton_tail_partition(const KSet& heads, std::size_t n) {
  if (!heads.fits(n)) throw InvalidArgument("singleton_tail_partition: head outside {1..n}");
  if (heads.size() >= n) throw InvalidArgument("singleton_tail_partition: need |heads| < n");
  std::vector<std::vector<Point>> blocks;
  std::vector<Point> tail;
  for (Point h : heads) blocks.push_back({h});
  for (std::size_t p = 1; p <= n; ++p)
    if (!heads.contains(static_cast<Point>(p))) tail.push_back(static_cast<Point>(p));
  blocks.push_back(std::move(tail));
  return SetPartition(n, std::move(blocks));
}

SetPartition steiner_bad_partition(const KSet& block, const KSet& inside, std::size_t n,
                                   std::size_t k) {
  if (k < 3) throw InvalidArgument("steiner_bad_partition: need k >= 3");
  if (inside.size() != k - 2) throw InvalidArgument("steiner_bad_partition: need k-2 inside points");
  if (!inside.is_subset_of(block)) throw InvalidArgument("steiner_bad_partition: points not in block");
  if (!block.fits(n)) throw InvalidArgument("steiner_bad_partition: block outside {1..n}");
  if (block.size() <= k - 2) throw InvalidArgument("steiner_bad_partition: block too small");
  if (block.size() >= n) throw InvalidArgument("steiner_bad_partition: block must be proper");
  std::vector<std::vector<Point>> blocks;
  std::vector<Point> rest_of_block, outside;
  for (Point p : inside) blocks.push_back({p});
  for (Point p : block)
    if (!inside.contains(p)) rest_of_block.push_back(p);
  for (std::size_t p = 1; p <= n; ++p)
    if (!block.contains(static_cast<Point>(p))) outside.push_back(static_cast<Point>(p));
  blocks.push_back(std::move(rest_of_block));
  blocks.push_back(std::move(outside));
  return SetPartition(n, std::move(blocks));
}

}  // namespace utlab
