#include "utlab/semigroup.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "utlab/combinatorics.hpp"

namespace utlab {

Transformation::Transformation(std::size_t degree) : img_(degree + 1) {
  if (degree == 0 || degree > kMaxDegree) throw InvalidArgument("Transformation: degree out of range");
  std::iota(img_.begin(), img_.end(), Point{0});
}

Transformation Transformation::from_images(std::span<const Point> images) {
  const std::size_t n = images.size();
  Transformation t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i] == 0 || images[i] > n) throw InvalidArgument("Transformation: image out of range");
    t.img_[i + 1] = images[i];
  }
  return t;
}

Transformation Transformation::from_permutation(const Permutation& g) {
  return from_images(g.images());
}

Transformation Transformation::parse(const std::string& text) {
  std::vector<Point> images;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) throw InvalidArgument("Transformation: empty entry in '" + text + "'");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item.substr(first), &used);
    } catch (const std::exception&) {
      throw InvalidArgument("Transformation: bad entry '" + item + "'");
    }
    if (item.find_first_not_of(' ', first + used) != std::string::npos || v > kMaxDegree)
      throw InvalidArgument("Transformation: bad entry '" + item + "'");
    images.push_back(static_cast<Point>(v));
  }
  if (images.empty()) throw InvalidArgument("Transformation: empty image list");
  return from_images(images);
}

Transformation Transformation::from_kernel_image(const SetPartition& kernel, std::span<const Point> image) {
  if (image.size() != kernel.num_blocks())
    throw InvalidArgument("from_kernel_image: one image point per kernel block");
  std::vector<Point> images(kernel.degree());
  for (std::size_t b = 0; b < kernel.num_blocks(); ++b)
    for (Point p : kernel.block(b)) images[p - 1] = image[b];
  return from_images(images);
}

std::size_t Transformation::rank() const {
  std::vector<char> hit(img_.size(), 0);
  std::size_t r = 0;
  for (std::size_t i = 1; i < img_.size(); ++i)
    if (!hit[img_[i]]) {
      hit[img_[i]] = 1;
      ++r;
    }
  return r;
}

KSet Transformation::image() const {
  std::vector<Point> pts(img_.begin() + 1, img_.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return KSet(std::move(pts));
}

SetPartition Transformation::kernel() const { return SetPartition::from_labels(img_); }

bool Transformation::is_quasi_permutation() const {
  std::vector<std::size_t> fiber(img_.size(), 0);
  for (std::size_t i = 1; i < img_.size(); ++i) ++fiber[img_[i]];
  return std::count_if(fiber.begin(), fiber.end(), [](std::size_t f) { return f > 1; }) <= 1;
}

Transformation Transformation::operator*(const Transformation& b) const {
  Transformation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = b.img_[img_[i]];
  return r;
}

Transformation Transformation::operator*(const Permutation& g) const {
  Transformation r;
  r.img_.resize(img_.size());
  const Point* t = g.table();
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = t[img_[i]];
  return r;
}

std::string Transformation::to_string() const {
  std::string out;
  for (std::size_t i = 1; i < img_.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(img_[i]);
  }
  return out;
}

Transformation t_compose(const Transformation& a, const Transformation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("t_compose: degree mismatch");
  return a * b;
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point x : t.images()) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

namespace {

struct PointsHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Point x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

RegularityResult is_regular_in(const Transformation& a, const PermGroup& G, std::size_t cap) {
  const std::size_t n = a.degree();
  if (G.degree() != n) throw InvalidArgument("is_regular_in: degree mismatch");
  const KSet image = a.image();
  const std::size_t k = image.size();
  const auto labels = a.kernel().labels();
  const auto& gens = G.generators();

  std::vector<std::vector<Point>> sets{std::vector<Point>(image.begin(), image.end())};
  std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};  // (set, generator)
  std::unordered_map<std::vector<Point>, std::size_t, PointsHash> index{{sets[0], 0}};
  std::optional<std::size_t> found;
  if (is_section(sets[0], labels, k)) found = 0;
  std::vector<Point> img(k);
  for (std::size_t i = 0; !found && i < sets.size(); ++i)
    for (std::size_t j = 0; j < gens.size() && !found; ++j) {
      apply_sorted(gens[j], sets[i], img);
      if (index.count(img)) continue;
      if (sets.size() >= cap) throw CapExceeded("is_regular_in: orbit cap exceeded", sets.size());
      index.emplace(img, sets.size());
      sets.push_back(img);
      parent.emplace_back(i, j);
      if (is_section(img, labels, k)) found = sets.size() - 1;
    }
  RegularityResult res;
  if (!found) return res;
  std::vector<std::size_t> word;
  for (std::size_t s = *found; s != 0; s = parent[s].first) word.push_back(parent[s].second);
  Permutation g(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = g * gens[*it];
  if ((a * g * a).rank() != k) throw Error("internal error: is_regular_in produced a bad witness");
  res.regular = true;
  res.g = std::move(g);
  return res;
}

namespace {

std::vector<Transformation> closure_impl(const std::vector<Transformation>& gens, std::size_t cap,
                                         bool parallel) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw InvalidArgument("semigroup_closure: degree mismatch");
  std::vector<Transformation> elems;
  std::unordered_set<Transformation, TransformationHash> seen;
  auto add = [&](const Transformation& t) {
    if (!seen.insert(t).second) return;
    if (elems.size() >= cap) throw CapExceeded("semigroup_closure: cap exceeded", elems.size());
    elems.push_back(t);
  };
  for (const auto& g : gens) add(g);
  std::size_t lo = 0;
  const std::size_t m = gens.size();
  while (lo < elems.size()) {
    const std::size_t hi = elems.size();
    std::vector<Transformation> products((hi - lo) * m);
    const auto count = static_cast<std::int64_t>(hi - lo);
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m; ++j) products[i * m + j] = elems[lo + i] * gens[j];
    } else {
      for (std::int64_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m; ++j) products[i * m + j] = elems[lo + i] * gens[j];
    }
    for (const auto& p : products) add(p);
    lo = hi;
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::vector<Transformation> semigroup_closure(const std::vector<Transformation>& gens, std::size_t cap) {
  if (cap == 0) throw InvalidArgument("semigroup_closure: cap must be positive");
  return closure_impl(gens, cap, true);
}

std::vector<Transformation> semigroup_closure_serial(const std::vector<Transformation>& gens,
                                                     std::size_t cap) {
  if (cap == 0) throw InvalidArgument("semigroup_closure: cap must be positive");
  return closure_impl(gens, cap, false);
}

std::vector<Transformation> generators_with(const Transformation& a, const PermGroup& G) {
  if (a.degree() != G.degree()) throw InvalidArgument("generators_with: degree mismatch");
  std::vector<Transformation> gens{a};
  for (const auto& g : G.generators()) gens.push_back(Transformation::from_permutation(g));
  return gens;
}

SemigroupRegularity is_regular_semigroup(const std::vector<Transformation>& S) {
  // If rank(bcb) = rank(b) then cb permutes image(b), so some power
  // (cb)^m fixes it pointwise and b = b (cb)^m = b c' b with c' in S.
  // Hence only the sets c(image(b)) matter.
  std::map<KSet, std::vector<std::size_t>> by_image;
  for (std::size_t i = 0; i < S.size(); ++i) by_image[S[i].image()].push_back(i);
  std::vector<const std::pair<const KSet, std::vector<std::size_t>>*> groups;
  for (const auto& kv : by_image) groups.push_back(&kv);

  const std::size_t none = S.size();
  std::vector<std::size_t> worst(groups.size(), none);
  const auto count = static_cast<std::int64_t>(groups.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t gi = 0; gi < count; ++gi) {
    const KSet& Y = groups[gi]->first;
    const std::size_t r = Y.size();
    std::unordered_set<std::vector<Point>, PointsHash> targets;
    std::vector<Point> t(r);
    for (const auto& c : S) {
      for (std::size_t j = 0; j < r; ++j) t[j] = c(Y[j]);
      std::sort(t.begin(), t.end());
      if (std::adjacent_find(t.begin(), t.end()) == t.end()) targets.insert(t);
    }
    for (std::size_t b : groups[gi]->second) {
      const auto labels = S[b].kernel().labels();
      const bool ok = std::any_of(targets.begin(), targets.end(),
                                  [&](const std::vector<Point>& s) { return is_section(s, labels, r); });
      if (!ok) {
        worst[gi] = std::min(worst[gi], b);
      }
    }
  }
  SemigroupRegularity res;
  const std::size_t w = *std::min_element(worst.begin(), worst.end());
  if (w != none) {
    res.regular = false;
    res.witness = S[w];
  }
  return res;
}

SemigroupRegularity is_regular_semigroup_naive(const std::vector<Transformation>& S) {
  std::vector<Transformation> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  SemigroupRegularity res;
  for (const auto& b : sorted) {
    const bool ok = std::any_of(sorted.begin(), sorted.end(), [&](const Transformation& c) { return b * c * b == b; });
    if (!ok) {
      res.regular = false;
      res.witness = b;
      return res;
    }
  }
  return res;
}

std::vector<SetPartition> kpartition_orbit_reps(const PermGroup& G, std::size_t k, std::size_t cap) {
  const std::size_t n = G.degree();
  if (k == 0 || k > n) throw InvalidArgument("kpartition_orbit_reps: need 1 <= k <= n");
  if (stirling2(n, k) > cap) throw CapExceeded("kpartition_orbit_reps: too many partitions", 0);
  // Keys are restricted growth strings.
  auto canonical = [n](std::string& s) {
    char map[256];
    std::fill(std::begin(map), std::end(map), char(-1));
    char next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto& m = map[static_cast<unsigned char>(s[i])];
      if (m < 0) m = next++;
      s[i] = m;
    }
  };
  std::unordered_set<std::string> seen;
  std::vector<SetPartition> reps;
  KPartitionStream st(n, k);
  std::string key(n, 0), img(n, 0);
  while (st.next()) {
    for (std::size_t i = 0; i < n; ++i) key[i] = static_cast<char>(st.rgs()[i]);
    if (seen.count(key)) continue;
    reps.push_back(st.partition());
    std::vector<std::string> queue{key};
    seen.insert(key);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& g : G.generators()) {
        for (std::size_t p = 1; p <= n; ++p) img[g(static_cast<Point>(p)) - 1] = queue[q][p - 1];
        canonical(img);
        if (seen.insert(img).second) queue.push_back(img);
      }
  }
  return reps;
}

RankRegularity regular_for_all_rank_k(const PermGroup& G, std::size_t k, RegularityMode mode) {
  const std::size_t n = G.degree();
  if (k < 2 || k >= n) throw InvalidArgument("regular_for_all_rank_k: need 2 <= k < n");
  RankRegularity res;
  if (mode == RegularityMode::Delegate) {
    const auto v = has_kut(G, k);
    res.status = v.status;
    // Kernel the bad partition, image the orbit representative.
    if (v.fails() && v.partition && v.orbit_rep)
      res.witness = Transformation::from_kernel_image(*v.partition, v.orbit_rep->points());
    return res;
  }
  const auto kernels = kpartition_orbit_reps(G, k);
  const auto images = orbits_on_ksets(G, k);
  for (const auto& P : kernels)
    for (const auto& I : images) {
      const auto a = Transformation::from_kernel_image(P, I.representative.points());
      if (!is_regular_in(a, G)) {
        res.status = UtStatus::Fails;
        res.witness = a;
        return res;
      }
    }
  res.status = UtStatus::Holds;
  return res;
}

RankRegularity quasi_regularity_classifier(const PermGroup& G, std::size_t k, RegularityMode mode) {
  const std::size_t n = G.degree();
  if (k < 2 || k >= n) throw InvalidArgument("quasi_regularity_classifier: need 1 < k < n");
  RankRegularity res;
  if (mode == RegularityMode::Delegate) {
    const auto r = is_ij_homogeneous(G, n - k, n - k + 1);
    res.status = r ? UtStatus::Holds : UtStatus::Fails;
    // No g maps i_set into j_set, so none maps the complement of j_set
    // (the singletons) into the complement of i_set (the image).
    if (!r)
      res.witness = Transformation::from_kernel_image(singleton_tail_partition(complement(r.j_set, n), n),
                                                      complement(r.i_set, n).points());
    return res;
  }
  // Kernel: k-1 singletons plus the rest; both the singleton set and the
  // image may be moved independently by G.
  const auto heads = orbits_on_ksets(G, k - 1);
  const auto images = orbits_on_ksets(G, k);
  for (const auto& H : heads) {
    const auto kernel = singleton_tail_partition(H.representative, n);
    for (const auto& I : images) {
      const auto a = Transformation::from_kernel_image(kernel, I.representative.points());
      if (!is_regular_in(a, G)) {
        res.status = UtStatus::Fails;
        res.witness = a;
        return res;
      }
    }
  }
  res.status = UtStatus::Holds;
  return res;
}

}  // namespace utlab
