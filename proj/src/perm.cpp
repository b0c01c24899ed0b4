#include "utlab/perm.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "utlab/combinatorics.hpp"

namespace utlab {

// --------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t degree) : img_(degree + 1) {
  if (degree == 0 || degree > kMaxDegree) throw InvalidArgument("Permutation: degree out of range");
  std::iota(img_.begin(), img_.end(), Point{0});
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const std::size_t n = images.size();
  Permutation p(n);
  std::vector<char> seen(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point x = images[i];
    if (x == 0 || x > n || seen[x]) throw InvalidArgument("Permutation: images are not a bijection");
    seen[x] = 1;
    p.img_[i + 1] = x;
  }
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  std::vector<char> moved(degree + 1, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidArgument("from_cycles: expected '(' in " + std::string(text));
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw InvalidArgument("from_cycles: expected a point in " + std::string(text));
      const unsigned long v = std::stoul(std::string(text.substr(i, j - i)));
      if (v == 0 || v > degree) throw InvalidArgument("from_cycles: point out of range");
      cycle.push_back(static_cast<Point>(v));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) {
      if (moved[cycle[c]]) throw InvalidArgument("from_cycles: cycles are not disjoint");
      moved[cycle[c]] = 1;
      p.img_[cycle[c]] = cycle[(c + 1) % cycle.size()];
    }
    skip_ws();
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 1; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 1; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("compose: degree mismatch");
  return p * q;
}

Permutation Permutation::operator*(const Permutation& q) const {
  Permutation r;
  r.img_.resize(img_.size());
  const Point* qt = q.table();
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = qt[img_[i]];
  return r;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 1; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 1; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      os << (j == i ? "" : ",") << j;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::string Permutation::to_image_string() const {
  std::ostringstream os;
  for (std::size_t i = 1; i < img_.size(); ++i) os << (i > 1 ? "," : "") << img_[i];
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point x : p.images()) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

// ---------------------------------------------------- StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : n_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("StabilizerChain: generator degree mismatch");
    if (!g.is_identity()) add_generator(0, g);
  }
}

StabilizerChain::Level& StabilizerChain::level(std::size_t i) {
  while (levels_.size() <= i) {
    Level l;
    const Point base = static_cast<Point>(levels_.size() + 1);
    l.slot.assign(n_ + 1, -1);
    l.orbit.push_back(base);
    l.slot[base] = 0;
    l.reps.emplace_back(n_);
    l.inv.emplace_back(n_);
    levels_.push_back(std::move(l));
  }
  return levels_[i];
}

Permutation StabilizerChain::sift_from(std::size_t i, Permutation g) const {
  for (std::size_t j = i; j < levels_.size(); ++j) {
    const Level& l = levels_[j];
    const std::int32_t s = l.slot[g(static_cast<Point>(j + 1))];
    if (s < 0) return g;
    g = g * l.inv[s];
  }
  return g;
}

void StabilizerChain::add_generator(std::size_t i, const Permutation& g) {
  // g fixes 1..i. It joins S[i] even when it also fixes i + 1, so that the
  // generators of each level generate that level's whole group.
  level(i);
  if (sift_from(i, g).is_identity()) return;
  levels_[i].gens.push_back(g);
  const std::size_t count = levels_[i].reps.size();
  for (std::size_t r = 0; r < count; ++r) add_coset(i, levels_[i].reps[r] * g);
}

void StabilizerChain::add_coset(std::size_t i, const Permutation& h) {
  const Point x = h(static_cast<Point>(i + 1));
  const std::int32_t s = levels_[i].slot[x];
  if (s >= 0) {
    Permutation r = h * levels_[i].inv[s];
    if (!r.is_identity()) add_generator(i + 1, r);
    return;
  }
  Level& l = levels_[i];
  l.slot[x] = static_cast<std::int32_t>(l.reps.size());
  l.orbit.push_back(x);
  l.reps.push_back(h);
  l.inv.push_back(h.inverse());
  const std::size_t ngens = l.gens.size();
  for (std::size_t j = 0; j < ngens; ++j) add_coset(i, h * levels_[i].gens[j]);
}

BigInt StabilizerChain::order() const {
  BigInt ord = 1;
  for (const auto& l : levels_) ord *= l.orbit.size();
  return ord;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != n_) return false;
  return sift_from(0, g).is_identity();
}

std::size_t StabilizerChain::transitivity() const {
  std::size_t t = 0;
  while (t < n_) {
    const std::size_t orbit = t < levels_.size() ? levels_[t].orbit.size() : 1;
    if (orbit != n_ - t) break;
    ++t;
  }
  return t;
}

// ----------------------------------------------------------- PermGroup

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : n_(degree), gens_(std::move(generators)), name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  if (degree == 0 || degree > kMaxDegree) throw InvalidArgument("PermGroup: degree out of range");
  for (const auto& g : gens_)
    if (g.degree() != degree) throw InvalidArgument("PermGroup: generator degree mismatch");
  if (gens_.empty()) gens_.emplace_back(degree);
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once,
                 [this] { cache_->chain = std::make_unique<StabilizerChain>(n_, gens_); });
  return *cache_->chain;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<Point> out{p};
  seen[p] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens_) {
      const Point q = g(out[i]);
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> done(n_ + 1, 0);
  for (std::size_t p = 1; p <= n_; ++p) {
    if (done[p]) continue;
    auto o = orbit(static_cast<Point>(p));
    for (Point q : o) done[q] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(1).size() == n_; }

SetPartition PermGroup::minimal_block(Point beta) const {
  // Atkinson: merge {1, beta} and propagate through the generators.
  DisjointSet ds(n_ + 1);
  std::deque<std::pair<Point, Point>> queue;
  ds.unite(1, beta);
  queue.emplace_back(1, beta);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& g : gens_) {
      const Point ga = g(a), gb = g(b);
      const std::size_t ra = ds.find(ga), rb = ds.find(gb);
      if (ra != rb) {
        ds.unite(ra, rb);
        queue.emplace_back(static_cast<Point>(ra), static_cast<Point>(rb));
      }
    }
  }
  std::vector<std::uint16_t> labels(n_ + 1, 0);
  for (std::size_t p = 1; p <= n_; ++p) labels[p] = static_cast<std::uint16_t>(ds.find(p));
  return SetPartition::from_labels(labels);
}

std::optional<BlockSystem> PermGroup::find_block_system() const {
  if (!is_transitive()) throw InvalidArgument("find_block_system: group is intransitive");
  std::optional<BlockSystem> best;
  for (std::size_t beta = 2; beta <= n_; ++beta) {
    SetPartition p = minimal_block(static_cast<Point>(beta));
    if (p.num_blocks() == 1) continue;
    if (!best || p.block(0).size() < best->block_size()) best = BlockSystem{std::move(p)};
  }
  return best;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  std::vector<Permutation> out{Permutation(n_)};
  std::unordered_set<Permutation, PermutationHash> seen{out.front()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens_) {
      Permutation h = out[i] * g;
      if (seen.insert(h).second) {
        if (out.size() >= cap) throw CapExceeded("PermGroup::elements: cap exceeded", out.size());
        out.push_back(std::move(h));
      }
    }
  return out;
}

}  // namespace utlab
