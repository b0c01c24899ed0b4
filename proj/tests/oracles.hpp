#pragma once

// Brute-force reference computations over explicit element lists. Only for
// groups small enough to enumerate.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "utlab/combinatorics.hpp"
#include "utlab/partitions.hpp"
#include "utlab/perm.hpp"

namespace oracle {

using utlab::Point;

inline std::vector<std::vector<Point>> all_ksets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Point>(i + 1);
  do out.push_back(s);
  while (utlab::next_combination(s, n));
  return out;
}

inline std::vector<Point> image(const utlab::Permutation& g, const std::vector<Point>& s) {
  std::vector<Point> out;
  for (Point p : s) out.push_back(g(p));
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbits of k-sets as sorted lists of sets, ordered by least member.
inline std::vector<std::set<std::vector<Point>>> korbits(const utlab::PermGroup& G, std::size_t k) {
  const auto els = G.elements();
  std::set<std::vector<Point>> done;
  std::vector<std::set<std::vector<Point>>> out;
  for (const auto& s : all_ksets(G.degree(), k)) {
    if (done.count(s)) continue;
    std::set<std::vector<Point>> orb;
    for (const auto& g : els) orb.insert(image(g, s));
    done.insert(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

inline bool ij_homogeneous(const utlab::PermGroup& G, std::size_t i, std::size_t j) {
  const auto els = G.elements();
  const auto js = all_ksets(G.degree(), j);
  for (const auto& I : all_ksets(G.degree(), i))
    for (const auto& J : js) {
      bool found = false;
      for (const auto& g : els) {
        const auto Ig = image(g, I);
        if (std::includes(J.begin(), J.end(), Ig.begin(), Ig.end())) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

/// Every k-partition has a section in every orbit on k-sets.
inline bool kut(const utlab::PermGroup& G, std::size_t k) {
  const auto orbits = korbits(G, k);
  utlab::KPartitionStream st(G.degree(), k);
  while (st.next()) {
    const auto P = st.partition();
    const auto labels = P.labels();
    for (const auto& orb : orbits) {
      bool found = false;
      for (const auto& s : orb)
        if (utlab::is_section(s, labels, k)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

using Map = std::vector<Point>;  // map[i] = image of i + 1

inline Map compose(const Map& a, const Map& b) {
  Map r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i] - 1];
  return r;
}

/// Semigroup generated by maps: saturate under all pairwise products until
/// nothing new appears.
inline std::set<Map> saturate(const std::vector<Map>& gens) {
  std::set<Map> s(gens.begin(), gens.end());
  for (;;) {
    std::set<Map> next = s;
    for (const auto& x : s)
      for (const auto& y : s) next.insert(compose(x, y));
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

/// a is regular in the semigroup generated by a and the generators of G:
/// some b in it has a b a = a.
inline bool regular_by_closure(const Map& a, const utlab::PermGroup& G) {
  std::vector<Map> gens{a};
  for (const auto& g : G.generators()) gens.emplace_back(g.images().begin(), g.images().end());
  // Words in the generators, grown by right multiplication.
  std::set<Map> S(gens.begin(), gens.end());
  std::vector<Map> queue(S.begin(), S.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      auto x = compose(queue[i], g);
      if (S.insert(x).second) queue.push_back(std::move(x));
    }
  for (const auto& b : S)
    if (compose(compose(a, b), a) == a) return true;
  return false;
}

}  // namespace oracle
