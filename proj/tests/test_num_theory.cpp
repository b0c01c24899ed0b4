#include <doctest.h>

#include <random>

#include "utlab/catalog.hpp"
#include "utlab/galois.hpp"
#include "utlab/num_theory.hpp"
#include "utlab/ut_deciders.hpp"

using namespace utlab;

TEST_CASE("subgroup orders") {
  CHECK(subgroup_order(11, std::vector<std::uint64_t>{10}) == 2);
  CHECK(subgroup_order(13, std::vector<std::uint64_t>{12, 4, 3}) == 6);
  CHECK(subgroup_order(17, std::vector<std::uint64_t>{16, 2, 1}) == 8);
  CHECK_THROWS_AS(subgroup_order(15, std::vector<std::uint64_t>{2}), InvalidArgument);
  CHECK_THROWS_AS(subgroup_order(13, std::vector<std::uint64_t>{0}), InvalidArgument);
  CHECK_THROWS_AS(subgroup_order(13, std::vector<std::uint64_t>{}), InvalidArgument);

  std::mt19937_64 rng(1);
  for (std::uint64_t p : {101, 211, 409, 997}) {
    std::uniform_int_distribution<std::uint64_t> pick(1, p - 1);
    for (int i = 0; i < 50; ++i) {
      const std::vector<std::uint64_t> gens{pick(rng), pick(rng)};
      CHECK((p - 1) % subgroup_order(p, gens) == 0);
    }
  }
}

TEST_CASE("AGL criterion") {
  CHECK(agl_criterion(5).verdict);
  CHECK(agl_criterion(7).verdict);
  const auto r13 = agl_criterion(13);
  CHECK_FALSE(r13.verdict);
  CHECK(std::find(r13.witnesses.begin(), r13.witnesses.end(), 4) != r13.witnesses.end());
  for (const auto& row : r13.rows) {
    CHECK(12 % row.order == 0);
    if (row.c == 4) CHECK(row.order == 6);
  }
  CHECK(r13.rows.size() == 11);
  CHECK(agl_criterion(13, true).witnesses.size() == 1);
  CHECK_THROWS_AS(agl_criterion(9), InvalidArgument);
}

TEST_CASE("shortcuts") {
  const auto s13 = sixth_root_shortcut(13);
  REQUIRE(s13);
  CHECK((*s13 == 4 || *s13 == 10));
  CHECK_FALSE(sixth_root_shortcut(11));
  CHECK_FALSE(sixth_root_shortcut(7));
  CHECK(consecutive_qr_shortcut(17) == 2u);
  CHECK(consecutive_qr_shortcut(13) == 4u);
  CHECK_FALSE(consecutive_qr_shortcut(7));
  CHECK_FALSE(consecutive_qr_shortcut(5));

  for (std::uint64_t p = 5; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    for (auto c : {sixth_root_shortcut(p), consecutive_qr_shortcut(p)}) {
      if (!c) continue;
      const std::vector<std::uint64_t> gens{p - 1, *c, *c - 1};
      CHECK(subgroup_order(p, gens) < p - 1);
    }
    if ((p % 3 == 1 && p > 7) || (p % 4 == 1 && p > 5)) CHECK_FALSE(agl_criterion(p, true).verdict);
  }
}

TEST_CASE("criterion matches the decider on AGL(1,p)") {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    CAPTURE(p);
    const auto G = resolve_group("catalog:AGL(1," + std::to_string(p) + ")");
    const auto report = agl_criterion(p);
    CHECK(report.verdict == has_kut(G, 3).holds());
    // Each failing c yields the bad partition ({0}, H, rest).
    for (auto c : report.witnesses) {
      std::vector<char> inH(p, 0);
      std::vector<std::uint64_t> H{1};
      inH[1] = 1;
      for (std::size_t i = 0; i < H.size(); ++i)
        for (auto g : {p - 1, c, c - 1}) {
          const auto y = H[i] * g % p;
          if (!inH[y]) {
            inH[y] = 1;
            H.push_back(y);
          }
        }
      std::vector<Point> zero{agl_point(p, 0)}, h, rest;
      for (std::uint64_t e = 1; e < p; ++e) (inH[e] ? h : rest).push_back(agl_point(p, e));
      const SetPartition P(p, {zero, h, rest});
      const KSet triple{agl_point(p, 0), agl_point(p, 1), agl_point(p, c)};
      CHECK(verify_witness(G, orbit_of_set(G, triple).representative, P));
    }
  }
}

TEST_CASE("AGL labelling") {
  // Translation by 1 moves the point of x to the point of x + 1.
  const auto G = resolve_group("catalog:AGL(1,11)");
  for (std::uint64_t x = 0; x < 11; ++x)
    CHECK(agl_point(11, x) >= 1);
  const GaloisField F(11);
  CHECK(agl_point(11, F.primitive()) == 3);
  CHECK(agl_point(11, 1) == 2);
  // x -> x + 1 lies in the group.
  std::vector<Point> img(11);
  for (std::uint64_t x = 0; x < 11; ++x) img[agl_point(11, x) - 1] = agl_point(11, (x + 1) % 11);
  CHECK(G.contains(Permutation::from_images(img)));
}

TEST_CASE("sieve") {
  CHECK(sieve_problem1(10).empty());
  const auto t11 = sieve_problem1(11);
  REQUIRE(t11.size() == 1);
  CHECK(t11[0].p == 11);
  CHECK(t11[0].verdict == agl_criterion(11).verdict);
  const auto rows = sieve_problem1(1000);
  CHECK(rows == sieve_problem1_serial(1000));
  for (const auto& r : rows) {
    CHECK(r.p % 12 == 11);
    CHECK(r.verdict == !r.min_witness.has_value());
    if (r.min_witness) CHECK(r.order < r.p - 1);
  }
}
