#include "utlab/set_orbits.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "utlab/combinatorics.hpp"

namespace utlab {

namespace {

constexpr std::uint32_t kUnlabelled = std::numeric_limits<std::uint32_t>::max();

void check_k(const PermGroup& G, std::size_t k, const char* who) {
  if (k < 1 || k > G.degree()) throw InvalidArgument(std::string(who) + ": need 1 <= k <= n");
}

KSet unrank_set(std::uint64_t rank, std::size_t k) {
  std::vector<Point> pts(k);
  colex_unrank(rank, k, pts);
  return KSet(std::move(pts));
}

}  // namespace

void apply_sorted(const Permutation& g, std::span<const Point> in, std::span<Point> out) {
  const Point* t = g.table();
  for (std::size_t i = 0; i < in.size(); ++i) {
    // insertion sort; sets are short
    Point x = t[in[i]];
    std::size_t j = i;
    while (j > 0 && out[j - 1] > x) {
      out[j] = out[j - 1];
      --j;
    }
    out[j] = x;
  }
}

bool KSetOrbit::contains(const KSet& s) const {
  if (s.size() != k() || !s.fits(degree)) return false;
  return std::binary_search(members.begin(), members.end(), colex_rank(s.points()));
}

std::vector<KSet> KSetOrbit::member_sets() const {
  std::vector<KSet> out;
  out.reserve(members.size());
  for (auto r : members) out.push_back(unrank_set(r, k()));
  std::sort(out.begin(), out.end());
  return out;
}

KSetOrbit orbit_of_set(const PermGroup& G, const KSet& s, std::size_t cap) {
  if (s.empty() || !s.fits(G.degree())) throw InvalidArgument("orbit_of_set: set outside {1..n}");
  const std::size_t k = s.size();
  std::vector<Point> queue(s.begin(), s.end());
  std::unordered_set<std::uint64_t> seen{colex_rank(s.points())};
  std::vector<Point> img(k);
  std::vector<Point> best(s.begin(), s.end());
  for (std::size_t head = 0; head < queue.size(); head += k) {
    for (const auto& g : G.generators()) {
      apply_sorted(g, std::span<const Point>(queue.data() + head, k), img);
      if (!seen.insert(colex_rank(img)).second) continue;
      if (seen.size() > cap) throw CapExceeded("orbit_of_set: cap exceeded", seen.size());
      if (img < best) best = img;
      queue.insert(queue.end(), img.begin(), img.end());
    }
  }
  KSetOrbit o{G.degree(), KSet(best), {seen.begin(), seen.end()}};
  std::sort(o.members.begin(), o.members.end());
  return o;
}

OrbitLabelling::OrbitLabelling(const PermGroup& G, std::size_t k, std::size_t cap)
    : n_(G.degree()), k_(k) {
  check_k(G, k, "OrbitLabelling");
  const std::uint64_t total = binomial(n_, k);
  if (total > cap) throw CapExceeded("OrbitLabelling: C(n,k) exceeds the set cap", 0);
  labels_.assign(total, kUnlabelled);

  std::vector<Point> cur(k), img(k), queue;
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Point>(i + 1);
  do {
    const std::uint64_t r = colex_rank(cur);
    if (labels_[r] != kUnlabelled) continue;
    // Sets are visited in lex order, so cur is the least member of its orbit.
    const auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.emplace_back(cur);
    std::vector<std::uint64_t> mem{r};
    labels_[r] = id;
    queue.assign(cur.begin(), cur.end());
    for (std::size_t head = 0; head < queue.size(); head += k) {
      for (const auto& g : G.generators()) {
        apply_sorted(g, std::span<const Point>(queue.data() + head, k), img);
        const std::uint64_t ir = colex_rank(img);
        if (labels_[ir] != kUnlabelled) continue;
        labels_[ir] = id;
        mem.push_back(ir);
        queue.insert(queue.end(), img.begin(), img.end());
      }
    }
    std::sort(mem.begin(), mem.end());
    members_.push_back(std::move(mem));
  } while (next_combination(cur, n_));
}

std::uint32_t OrbitLabelling::label_of(std::span<const Point> sorted_points) const {
  return labels_[colex_rank(sorted_points)];
}

std::vector<KSetOrbit> orbits_on_ksets(const PermGroup& G, std::size_t k, std::size_t cap) {
  OrbitLabelling lab(G, k, cap);
  std::vector<KSetOrbit> out;
  out.reserve(lab.num_orbits());
  for (std::size_t i = 0; i < lab.num_orbits(); ++i) out.push_back(lab.orbit(i));
  return out;
}

bool is_k_homogeneous(const PermGroup& G, std::size_t k, std::size_t cap) {
  check_k(G, k, "is_k_homogeneous");
  const std::size_t n = G.degree();
  const std::size_t kk = std::min(k, n - k);  // complements have the same orbits
  if (kk == 0) return true;
  std::vector<Point> first(kk);
  for (std::size_t i = 0; i < kk; ++i) first[i] = static_cast<Point>(i + 1);
  return orbit_of_set(G, KSet(first), cap).size() == binomial(n, kk);
}

KSet complement(const KSet& s, std::size_t n) {
  std::vector<Point> out;
  for (std::size_t p = 1; p <= n; ++p)
    if (!s.contains(static_cast<Point>(p))) out.push_back(static_cast<Point>(p));
  return KSet(std::move(out));
}

IjResult is_ij_homogeneous(const PermGroup& G, std::size_t i, std::size_t j, std::size_t cap) {
  const std::size_t n = G.degree();
  if (i < 1 || i > j || j > n) throw InvalidArgument("is_ij_homogeneous: need 1 <= i <= j <= n");
  if (i == j) {
    OrbitLabelling lab(G, i, cap);
    if (lab.num_orbits() == 1) return {};
    return {false, lab.representative(1), lab.representative(0)};
  }
  if (j == n) return {};
  OrbitLabelling small(G, i, cap);
  if (small.num_orbits() == 1) return {};
  OrbitLabelling big(G, j, cap);
  // The condition is G-invariant in J, so one representative per j-orbit suffices.
  std::vector<char> hit(small.num_orbits());
  std::vector<Point> sub(i);
  for (std::size_t o = 0; o < big.num_orbits(); ++o) {
    const KSet& J = big.representative(o);
    std::fill(hit.begin(), hit.end(), 0);
    std::size_t count = 0;
    // Walk the i-subsets of J through index vectors.
    std::vector<Point> idx(i);
    for (std::size_t t = 0; t < i; ++t) idx[t] = static_cast<Point>(t + 1);
    do {
      for (std::size_t t = 0; t < i; ++t) sub[t] = J[idx[t] - 1];
      const auto l = small.label_of(sub);
      if (!hit[l]) {
        hit[l] = 1;
        ++count;
      }
    } while (count < hit.size() && next_combination(idx, j));
    if (count < hit.size()) {
      const auto miss = static_cast<std::size_t>(std::find(hit.begin(), hit.end(), 0) - hit.begin());
      return {false, small.representative(miss), J};
    }
  }
  return {};
}

bool order_bound_pass(const PermGroup& G, std::size_t k) {
  check_k(G, k, "order_bound_pass");
  return G.order() * k >= binomial_big(G.degree(), k);
}

}  // namespace utlab
