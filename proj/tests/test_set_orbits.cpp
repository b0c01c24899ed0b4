#include <doctest.h>

#include "oracles.hpp"
#include "utlab/catalog.hpp"
#include "utlab/set_orbits.hpp"

using namespace utlab;

namespace {

const char* kSmall[] = {"C5", "D(2*5)", "AGL(1,5)", "PSL(2,5)", "PGL(2,5)", "7:3", "AGL(1,7)",
                        "PSL(3,2)", "PSL(2,7)", "AGL(1,8)", "3^2:4", "M9", "ASL(2,3)", "C6",
                        "D(2*8)"};

}  // namespace

TEST_CASE("orbit of a single set") {
  const auto s4 = resolve_group("catalog:S4");
  CHECK(orbit_of_set(s4, KSet{1, 2}).size() == 6);
  const auto c5 = resolve_group("catalog:C5");
  const auto o = orbit_of_set(c5, KSet{2, 3});
  CHECK(o.representative == KSet{1, 2});
  std::vector<KSet> expect{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(o.member_sets() == expect);
  CHECK(o.contains(KSet{1, 5}));
  CHECK_FALSE(o.contains(KSet{1, 3}));
  CHECK_THROWS_AS(orbit_of_set(s4, KSet{1, 2}, 3), CapExceeded);
}

TEST_CASE("orbit labelling agrees with brute force") {
  for (const char* name : kSmall) {
    const auto G = resolve_group(std::string("catalog:") + name);
    for (std::size_t k = 1; k < G.degree(); ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto got = orbits_on_ksets(G, k);
      const auto want = oracle::korbits(G, k);
      REQUIRE(got.size() == want.size());
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].size() == want[i].size());
        CHECK(std::vector<Point>(got[i].representative.begin(), got[i].representative.end()) ==
              *want[i].begin());
        total += got[i].size();
        // closed under the generators
        for (const auto& s : got[i].member_sets())
          for (const auto& g : G.generators()) CHECK(got[i].contains(KSet(oracle::image(g, {s.begin(), s.end()}))));
      }
      CHECK(total == binomial(G.degree(), k));
    }
  }
}

TEST_CASE("homogeneity on small groups") {
  CHECK(is_k_homogeneous(resolve_group("catalog:S5"), 3));
  CHECK_FALSE(is_k_homogeneous(resolve_group("catalog:C5"), 2));
  CHECK(is_k_homogeneous(resolve_group("catalog:AGL(1,7)"), 2));
  CHECK(orbits_on_ksets(resolve_group("catalog:C5"), 2).size() == 2);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(orbits_on_ksets(resolve_group("catalog:S6"), k).size() == 1);
}

TEST_CASE("(i,j)-homogeneity agrees with brute force and complements") {
  for (const char* name : kSmall) {
    const auto G = resolve_group(std::string("catalog:") + name);
    const std::size_t n = G.degree();
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i; j < n && j <= i + 2; ++j) {
        CAPTURE(name);
        CAPTURE(i);
        CAPTURE(j);
        const auto r = is_ij_homogeneous(G, i, j);
        CHECK(r.holds == oracle::ij_homogeneous(G, i, j));
        CHECK(r.holds == is_ij_homogeneous(G, n - j, n - i).holds);
        if (!r.holds) {
          // the witness really fails
          for (const auto& g : G.elements()) {
            const auto img = oracle::image(g, {r.i_set.begin(), r.i_set.end()});
            CHECK_FALSE(std::includes(r.j_set.begin(), r.j_set.end(), img.begin(), img.end()));
          }
        }
      }
  }
}

TEST_CASE("affine plane groups and (3,4)-homogeneity") {
  const auto asl = resolve_group("catalog:ASL(2,3)");
  const auto r = is_ij_homogeneous(asl, 3, 4);
  CHECK_FALSE(r.holds);
  CHECK(r.i_set.size() == 3);
  CHECK(r.j_set.size() == 4);
  CHECK(is_ij_homogeneous(asl, 4, 5).holds);
  CHECK_FALSE(is_ij_homogeneous(resolve_group("catalog:AGL(2,3)"), 3, 4).holds);
}

TEST_CASE("order bound") {
  CHECK(order_bound_pass(resolve_group("catalog:S7"), 3));
  CHECK(order_bound_pass(resolve_group("catalog:AGL(1,11)"), 4));
  CHECK_FALSE(order_bound_pass(resolve_group("catalog:AGL(1,13)"), 4));
}

TEST_CASE("Livingstone-Wagner monotonicity on the catalog") {
  for (const auto& s : catalog_manifest()) {
    if (s.degree > 12) continue;
    const auto G = build(s);
    for (std::size_t k = 2; 2 * k <= G.degree(); ++k)
      if (is_k_homogeneous(G, k)) CHECK(is_k_homogeneous(G, k - 1));
  }
}

TEST_CASE("orbit counts of the larger groups") {
  CHECK(orbits_on_ksets(resolve_group("catalog:M11@12"), 4).size() == 2);
  CHECK(orbits_on_ksets(resolve_group("catalog:PGammaL(2,32)"), 5).size() == 3);
  CHECK(orbits_on_ksets(resolve_group("catalog:2^6:U3(3)"), 3).size() == 3);
}
