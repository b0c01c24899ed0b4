#include <doctest.h>

#include "oracles.hpp"
#include "utlab/catalog.hpp"
#include "utlab/ut_deciders.hpp"

using namespace utlab;

namespace {

const char* kSmall[] = {"C5",       "D(2*5)",   "AGL(1,5)", "PSL(2,5)", "PGL(2,5)", "7:3",
                        "AGL(1,7)", "PSL(3,2)", "PSL(2,7)", "AGL(1,8)", "3^2:4",    "M9",
                        "C6",       "D(2*8)",   "S5",       "A6"};

PermGroup cat(const std::string& name) { return resolve_group("catalog:" + name); }

UtBudget with_method(const char* m) {
  UtBudget b;
  b.method = m;
  return b;
}

void check_witness(const PermGroup& G, const UtVerdict& v) {
  REQUIRE(v.orbit_rep);
  REQUIRE(v.partition);
  CHECK(verify_witness(G, *v.orbit_rep, *v.partition));
  CHECK(orbit_of_set(G, *v.orbit_rep).representative == *v.orbit_rep);
}

}  // namespace

TEST_CASE("naive decider agrees with brute force") {
  for (const char* name : kSmall) {
    const auto G = cat(name);
    for (std::size_t k = 2; k < G.degree(); ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto v = has_kut_naive(G, k);
      CHECK(v.holds() == oracle::kut(G, k));
      if (v.fails()) check_witness(G, v);
      const auto s = has_kut_naive_serial(G, k);
      CHECK(s.status == v.status);
      CHECK(s.orbit_rep == v.orbit_rep);
      CHECK(s.partition == v.partition);
    }
  }
}

TEST_CASE("pipeline agrees with the naive decider under both search methods") {
  for (const char* name : kSmall) {
    const auto G = cat(name);
    for (std::size_t k = 2; k < G.degree(); ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const bool want = has_kut_naive(G, k).holds();
      for (const char* m : {"naive", "extend"}) {
        CAPTURE(m);
        const auto v = has_kut(G, k, with_method(m));
        REQUIRE(v.status != UtStatus::Undecided);
        CHECK(v.holds() == want);
        if (v.fails()) check_witness(G, v);
      }
    }
  }
}

TEST_CASE("weak k-ut: extension and naive agree") {
  for (const char* name : {"7:3", "PSL(3,2)", "AGL(1,8)", "PSL(2,7)", "M9", "D(2*8)"}) {
    const auto G = cat(name);
    for (std::size_t k = 2; k < G.degree(); ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto a = has_weak_kut(G, k, with_method("naive"));
      const auto b = has_weak_kut(G, k, with_method("extend"));
      CHECK(a.status == b.status);
      CHECK(a.orbit_rep == b.orbit_rep);
      if (has_kut_naive(G, k).holds()) CHECK(a.holds());
    }
  }
}

TEST_CASE("2-ut is primitivity") {
  for (const char* name : kSmall) {
    const auto G = cat(name);
    CAPTURE(name);
    const auto v = has_kut(G, 2);
    CHECK(v.holds() == (G.is_transitive() && G.is_primitive()));
    if (v.fails()) check_witness(G, v);
  }
  const PermGroup intransitive(6, {Permutation::from_cycles("(1,2,3)(4,5)", 6)});
  const auto v = has_kut(intransitive, 2);
  CHECK(v.fails());
  check_witness(intransitive, v);
  const PermGroup trivial(5, {});
  CHECK(has_kut(trivial, 2).fails());
  check_witness(trivial, has_kut(trivial, 2));
}

TEST_CASE("k-ut descends for k at most n/2") {
  for (const char* name : kSmall) {
    const auto G = cat(name);
    const std::size_t n = G.degree();
    for (std::size_t k = 3; k <= n / 2; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      if (has_kut(G, k).holds()) CHECK(has_kut(G, k - 1).holds());
    }
  }
}

TEST_CASE("symmetric groups have every k-ut") {
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto G = cat("S" + std::to_string(n));
    for (std::size_t k = 2; k < n; ++k) CHECK(has_kut_naive(G, k).holds());
  }
}

TEST_CASE("paper witnesses re-check under the catalog labelling") {
  struct W {
    const char* group;
    KSet rep;
    const char* partition;
  };
  const W cases[] = {
      {"7:3", {1, 2, 7}, "1|2,7|3,4,5,6"},
      {"PSL(2,7)", {1, 2, 3, 5}, "1,5,7,8|2,6|3|4"},
      {"M9", {1, 2, 3}, "1|2,3|4,5,6,7,8,9"},
      {"ASL(2,3)", {1, 2, 3}, "1|2,3|4,5,6,7,8,9"},
      {"AGL(2,3)", {1, 2, 3}, "1|2,3|4,5,6,7,8,9"},
      {"PGL(2,9)", {1, 2, 3, 10}, "1|2|3,10|4,5,6,7,8,9"},
      {"M10", {1, 2, 3, 10}, "1|2|3,10|4,5,6,7,8,9"},
      {"PGammaL(2,9)", {1, 2, 3, 10}, "1|2|3,10|4,5,6,7,8,9"},
      {"AGL(1,17)", {1, 2, 4}, "1,2,3,4,6,9,10,15|5,7,8,11,12,13,14,16|17"},
  };
  for (const auto& w : cases) {
    CAPTURE(w.group);
    const auto G = cat(w.group);
    CHECK(verify_witness(G, w.rep, SetPartition::parse(w.partition, G.degree())));
  }
  // A partition with a section is rejected.
  CHECK_FALSE(verify_witness(cat("7:3"), KSet{1, 2, 7}, SetPartition::parse("1|2|3,4,5,6,7", 7)));
}

TEST_CASE("auxiliary graphs") {
  const auto agl17 = cat("AGL(1,17)");
  const auto g = aux_graph(agl17, KSet{17}, 4);
  const auto comps = g.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 8);
  CHECK(comps[1].size() == 8);
  // The catalog labelling reproduces the published components exactly.
  CHECK(comps[0] == std::vector<Point>{1, 2, 3, 4, 6, 9, 10, 15});
  CHECK(comps[1] == std::vector<Point>{5, 7, 8, 11, 12, 13, 14, 16});

  const auto s6 = cat("S6");
  const auto complete = aux_graph(s6, KSet{6}, 3);
  CHECK(complete.num_edges() == 10);
  CHECK_FALSE(complete.vertex[6]);

  CHECK(aux_graph(cat("AGL(1,7)"), KSet{7}, 3).connected());

  // Definition check on every pair.
  const auto psl = cat("PSL(2,7)");
  const auto h = aux_graph(psl, KSet{7, 8}, 5);
  const auto orbit = orbit_of_set(psl, KSet{1, 2, 3, 5});
  for (Point x = 1; x <= 6; ++x)
    for (Point y = x + 1; y <= 6; ++y) CHECK(h.has_edge(x, y) == orbit.contains(KSet{x, y, 7, 8}));

  CHECK_THROWS_AS(aux_graph(s6, KSet{6}, 2), InvalidArgument);
}

TEST_CASE("gamma graphs") {
  const auto G = cat("AGL(1,11)");
  for (Point c = 3; c <= 11; ++c) {
    const auto a = gamma_graph(G, KSet{11}, c);
    const auto b = aux_graph(G, KSet{11}, c);
    CHECK(a.adj == b.adj);
  }
  const auto s5 = gamma_graph(cat("S5"), KSet{4, 5}, 3);
  CHECK(s5.num_edges() == 3);
  CHECK(s5.has_edge(1, 2));
  CHECK(s5.has_edge(2, 3));
  CHECK(s5.has_edge(1, 3));

  // Union property: every edge comes from some b in C.
  const KSet C{9, 10, 11};
  const auto u = gamma_graph(G, C, 4);
  const auto o = orbit_of_set(G, KSet{1, 2, 4});
  for (Point x = 1; x <= 8; ++x)
    for (Point y = x + 1; y <= 8; ++y) {
      bool any = false;
      for (Point b : C) any = any || o.contains(KSet{x, y, b});
      CHECK(u.has_edge(x, y) == any);
    }
}

TEST_CASE("connectivity pruner") {
  for (const char* name : {"AGL(1,13)", "AGL(1,17)"}) {
    CAPTURE(name);
    const auto G = cat(name);
    const auto v = connectivity_prune(G, 3);
    REQUIRE(v);
    CHECK(v->fails());
    CHECK(v->graphs_connected == false);
    check_witness(G, *v);
    CHECK(v->partition->num_blocks() == 3);
  }
  const auto agl17 = connectivity_prune(cat("AGL(1,17)"), 3);
  CHECK(*agl17->orbit_rep == KSet{1, 2, 4});
  CHECK(agl17->partition->to_string() == "1,2,3,4,6,9,10,15|5,7,8,11,12,13,14,16|17");

  CHECK_FALSE(connectivity_prune(cat("S6"), 3));
  CHECK_FALSE(connectivity_prune(cat("PSL(2,13)"), 3));
  // Not 2-homogeneous: inconclusive.
  CHECK_FALSE(connectivity_prune(cat("D(2*8)"), 3));
}

TEST_CASE("extension decider") {
  const auto s4 = cat("S4");
  const auto one = orbit_of_set(s4, KSet{1, 2});
  const auto r = subpartition_extension_decider(s4, one, SubPartition(4, {{1}, {2}}));
  CHECK(r.status == UtStatus::Holds);
  CHECK(r.profile.empty());

  // A bad orbit of AGL(1,13): some seed from another orbit's representative
  // leaves a surviving partition, and every survivor is a genuine witness.
  const auto G = cat("AGL(1,13)");
  const OrbitLabelling lab(G, 3);
  const auto bad = orbit_of_set(G, KSet{1, 2, 4});
  bool found = false;
  for (std::size_t o = 0; o < lab.num_orbits(); ++o) {
    const auto& rep = lab.representative(o);
    if (bad.contains(rep)) continue;
    const SubPartition seed(13, {{rep[0]}, {rep[1]}, {rep[2]}});
    const auto par = subpartition_extension_decider(G, bad, seed);
    const auto ser = subpartition_extension_decider_serial(G, bad, seed);
    CHECK(par.status == ser.status);
    CHECK(par.profile == ser.profile);
    CHECK(par.witness == ser.witness);
    if (par.status == UtStatus::Fails) {
      found = true;
      CHECK(verify_witness(G, KSet{1, 2, 4}, *par.witness));
    }
  }
  CHECK(found);

  const auto cap = subpartition_extension_decider(G, bad, SubPartition(13, {{1}, {2}, {3}}), 1);
  CHECK(cap.status == UtStatus::Undecided);
  CHECK_THROWS_AS(subpartition_extension_decider(G, bad, SubPartition(13, {{1}, {2}})),
                  InvalidArgument);
}

TEST_CASE("published verdicts") {
  CHECK(has_kut(cat("C5"), 2).holds());
  CHECK(has_kut(cat("M11@12"), 4).holds());
  CHECK(has_kut(cat("PGL(2,7)"), 4).holds());
  CHECK(has_kut(cat("S6@10"), 3).holds());
  CHECK(has_kut(cat("A6@10"), 3).holds());
  CHECK(has_kut(cat("AGL(1,7)"), 3).holds());
  for (const auto& [name, k] : std::vector<std::pair<std::string, std::size_t>>{
           {"PSL(2,7)", 4}, {"AGL(1,8)", 4}, {"7:3", 3}, {"PSL(3,2)", 3}, {"AGL(1,13)", 3},
           {"AGL(1,17)", 3}, {"M9", 3}, {"ASL(2,3)", 3}, {"M10", 4}, {"PGL(2,9)", 4}}) {
    CAPTURE(name);
    const auto G = cat(name);
    const auto v = has_kut(G, k);
    CHECK(v.fails());
    check_witness(G, v);
  }
}

TEST_CASE("large k reduces to k-homogeneity") {
  const auto G = cat("PSL(2,7)");
  const auto v = has_kut(G, 6);
  CHECK(v.holds() == is_k_homogeneous(G, 6));
  CHECK_THROWS_AS(has_kut(G, 8), InvalidArgument);
  CHECK_THROWS_AS(has_kut(G, 1), InvalidArgument);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  UtBudget b;
  b.naive_checks = 10;
  const auto v = has_kut_naive(cat("PGL(2,7)"), 4, b);
  CHECK(v.status == UtStatus::Undecided);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("two-graph certificates") {
  for (std::size_t q : {13, 17}) {
    const auto G = cat("PSL(2," + std::to_string(q) + ")");
    const auto orbits = orbits_on_ksets(G, 3);
    CHECK(orbits.size() == 2);
    for (const auto& o : orbits) {
      const auto c = two_graph_check(G, o);
      REQUIRE(c);
      CHECK(c->lambda == (q - 1) / 2);
      CHECK(c->certifies);
      CHECK(has_kut(G, 3).holds());
    }
  }
  const auto agl = cat("AGL(1,13)");
  for (const auto& o : orbits_on_ksets(agl, 3)) CHECK_FALSE(two_graph_check(agl, o));
}

TEST_CASE("bad partition search") {
  // Complete G(n,c): no point at distance 2, so nothing to search.
  const auto s6 = bad_partition_search_3ut(cat("S6"), 3, 2);
  CHECK(s6.graph_connected);
  CHECK(s6.eccentricity == 1);
  CHECK(s6.seeds.empty());

  const auto disc = bad_partition_search_3ut(cat("AGL(1,17)"), 4, 2);
  CHECK_FALSE(disc.graph_connected);

  // Groups with the 3-ut property never yield a bad partition; groups
  // without it only yield verified ones.
  for (const char* name : {"AGL(1,11)", "PSL(2,13)", "AGL(1,13)", "M9"}) {
    const auto G = cat(name);
    const bool kut = has_kut(G, 3).holds();
    for (Point c = 3; c <= G.degree(); ++c) {
      const auto r0 = bad_partition_search_3ut(G, c, 1);
      if (!r0.graph_connected) continue;
      for (std::size_t d = 1; d <= r0.eccentricity; ++d)
        for (const auto& s : bad_partition_search_3ut(G, c, d).seeds) {
          CAPTURE(name);
          CAPTURE(c);
          CAPTURE(d);
          if (kut) CHECK(s.outcome != SearchOutcome::BadPartition);
          if (s.outcome == SearchOutcome::BadPartition)
            CHECK(verify_witness(G, orbit_of_set(G, KSet{1, 2, c}).representative, *s.partition));
        }
    }
  }
  CHECK_THROWS_AS(bad_partition_search_3ut(cat("D(2*8)"), 3, 2), InvalidArgument);
}

TEST_CASE("bad partition search with case splits decides each orbit") {
  // For 2-transitive groups every bad partition can be moved to one with
  // 1 in A, n in C and y a nearest point of A', so unlimited splitting
  // finds one exactly when the orbit misses some 3-partition.
  std::size_t refuted = 0;
  for (const char* name : {"AGL(1,11)", "M9", "AGL(1,9)", "PSL(2,8)", "PSL(2,7)", "AGL(1,13)"}) {
    const auto G = cat(name);
    const std::size_t n = G.degree();
    const OrbitLabelling lab(G, 3);
    for (std::size_t o = 0; o < lab.num_orbits(); ++o) {
      const Point c = lab.representative(o)[2];
      if (lab.label_of(KSet{1, 2, c}.points()) != o) continue;
      bool universal = true;
      KPartitionStream stream(n, 3);
      while (universal && stream.next()) universal = orbit_has_section(lab, o, stream.partition());

      const auto first = bad_partition_search_3ut(G, c, 1, 0, 1'000'000);
      bool bad = !first.graph_connected;
      for (std::size_t d = 1; !bad && d <= first.eccentricity; ++d)
        for (const auto& s : bad_partition_search_3ut(G, c, d, 0, 1'000'000).seeds) {
          CHECK(s.outcome != SearchOutcome::Exhausted);
          if (s.outcome == SearchOutcome::BadPartition) {
            CHECK(verify_witness(G, lab.representative(o), *s.partition));
            bad = true;
          }
        }
      CAPTURE(name);
      CAPTURE(c);
      CHECK(bad == !universal);
      refuted += bad;
    }
  }
  CHECK(refuted >= 3);
}
