#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "utlab/partitions.hpp"
#include "utlab/perm.hpp"
#include "utlab/set_orbits.hpp"

namespace utlab {

enum class UtStatus { Holds, Fails, Undecided };

std::string to_string(UtStatus s);

/// Outcome of a k-ut decision. A failure names an orbit (by its least
/// member) and a k-partition with no section in that orbit.
struct UtVerdict {
  UtStatus status = UtStatus::Undecided;
  std::string method;
  std::optional<KSet> orbit_rep;
  std::optional<SetPartition> partition;
  /// Whether every auxiliary graph G(B,c) was connected, when examined.
  std::optional<bool> graphs_connected;
  /// Frontier sizes after each placed point (extension decider only).
  std::vector<std::size_t> profile;
  std::string note;

  bool holds() const { return status == UtStatus::Holds; }
  bool fails() const { return status == UtStatus::Fails; }
};

struct UtBudget {
  /// The naive decider runs when S(n,k) times the number of orbits is at most this.
  std::uint64_t naive_checks = 100'000'000;
  std::size_t frontier_cap = 10'000'000;
  std::size_t set_cap = kDefaultSetCap;
  /// "auto", "naive" or "extend".
  std::string method = "auto";
  bool parallel = true;
};

/// Independent re-check: no member of the orbit of rep is a section of p.
bool verify_witness(const PermGroup& G, const KSet& rep, const SetPartition& p);

/// True iff some member of the given orbit is a section of p.
bool orbit_has_section(const OrbitLabelling& lab, std::size_t orbit, const SetPartition& p);

/// Every k-partition against every orbit, partition by partition. Undecided
/// when the budget is too small. The first failure in stream order is
/// reported, so both versions return the same witness.
UtVerdict has_kut_naive(const PermGroup& G, std::size_t k, const UtBudget& budget = {});
UtVerdict has_kut_naive_serial(const PermGroup& G, std::size_t k, const UtBudget& budget = {});

/// Graph G(B,c) on {1..n} \ B: {x,y} is an edge iff {x,y} u B lies in the
/// orbit of {1,...,t,c}, t = |B| + 1. Also used for the union graphs.
struct AuxGraph {
  std::size_t degree = 0;
  KSet base;
  Point apex = 0;
  std::vector<char> vertex;               // vertex[p] for p = 1..n
  std::vector<std::vector<Point>> adj;    // sorted neighbour lists

  std::size_t num_edges() const;
  bool has_edge(Point x, Point y) const;
  /// Components as sorted point lists, ordered by least point.
  std::vector<std::vector<Point>> components() const;
  bool connected() const { return components().size() <= 1; }
  /// BFS distances from a vertex; -1 when unreachable or not a vertex.
  std::vector<int> distances_from(Point p) const;
};

AuxGraph aux_graph(const PermGroup& G, const KSet& B, Point c, std::size_t cap = kDefaultSetCap);

/// Union over b in C of G(b,c), restricted to points outside C.
AuxGraph gamma_graph(const PermGroup& G, const KSet& C, Point c, std::size_t cap = kDefaultSetCap);

/// For (k-1)-homogeneous G: looks for a disconnected G(B,c). On success the
/// verdict fails with the partition ({b1},...,{b_{k-2}}, D, rest). Returns
/// nullopt when every graph is connected or G is not (k-1)-homogeneous.
std::optional<UtVerdict> connectivity_prune(const PermGroup& G, std::size_t k,
                                            std::size_t cap = kDefaultSetCap);

enum class SearchOutcome {
  Connected,      // A and A' joined in Gamma(C,c): no bad partition from this seed
  BadPartition,   // a complete, verified bad partition (A, C, A')
  Contradiction,  // a point was forced into two parts: no bad partition from this seed
  Exhausted,      // fixpoint or iteration cap without a conclusion
};

std::string to_string(SearchOutcome o);

struct SeedReport {
  Point y = 0;
  SearchOutcome outcome = SearchOutcome::Exhausted;
  std::size_t iterations = 0;
  std::size_t splits = 0;  // case splits taken after a fixpoint
  std::optional<SetPartition> partition;
};

struct BadPartitionReport {
  Point apex = 0;
  std::size_t distance = 0;
  bool graph_connected = true;
  std::size_t eccentricity = 0;  // largest distance from point 1 in G(n,c)
  std::vector<SeedReport> seeds;
};

/// The fixpoint search for a bad 3-partition (A, C, A') with 1 in A, n in C
/// and A' seeded by points at distance d from 1 in G(n,c). A diagnostic:
/// only BadPartition results certify anything. With a split budget, a seed
/// stuck at a fixpoint is split on an undetermined point (A, A' or C) and
/// each branch is propagated again; the seed closes when every branch does.
BadPartitionReport bad_partition_search_3ut(const PermGroup& G, Point c, std::size_t d,
                                            std::size_t max_iterations = 0,
                                            std::size_t split_budget = 0);

struct ExtensionResult {
  UtStatus status = UtStatus::Undecided;
  std::optional<SetPartition> witness;
  std::vector<std::size_t> profile;
};

/// Breadth-first extension of a k-block seed, placing the smallest unplaced
/// point into each block in turn and dropping subpartitions for which the
/// orbit already holds a section. Holds when the frontier dies: every
/// partition refining the seed has a section in the orbit.
ExtensionResult subpartition_extension_decider(const PermGroup& G, const KSetOrbit& orbit,
                                               const SubPartition& seed,
                                               std::size_t frontier_cap = 10'000'000);
ExtensionResult subpartition_extension_decider_serial(const PermGroup& G, const KSetOrbit& orbit,
                                                      const SubPartition& seed,
                                                      std::size_t frontier_cap = 10'000'000);

/// Full decision pipeline.
UtVerdict has_kut(const PermGroup& G, std::size_t k, const UtBudget& budget = {});

/// Some orbit contains a section of every k-partition; the verdict's
/// orbit_rep is then the least such orbit's representative.
UtVerdict has_weak_kut(const PermGroup& G, std::size_t k, const UtBudget& budget = {});

struct TwoGraphCertificate {
  std::size_t lambda = 0;
  /// The counting window holds and every link graph is connected, so every
  /// 3-partition has a section in the orbit.
  bool certifies = false;
  bool links_connected = false;
};

/// Checks that a 3-set orbit is a regular two-graph (constant lambda, even
/// count in every 4-set; sampled with the seed above 30 points). Returns
/// nullopt when it is not.
std::optional<TwoGraphCertificate> two_graph_check(const PermGroup& G, const KSetOrbit& orbit,
                                                   std::uint64_t seed = 1);

}  // namespace utlab
