#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "utlab/perm.hpp"

namespace utlab {

enum class Family {
  Cyclic,
  Dihedral,
  Symmetric,
  Alternating,
  Affine1,       // AGL(1,q), AGammaL(1,q), Frobenius p:m, on field elements
  Affine,        // ASL(d,p), AGL(d,p) on vectors
  AffineMatrix,  // p^d:H for a fixed matrix group H
  Projective,    // PSL, PGL, PSigmaL, PGammaL(2,q) and M10
  Linear,        // PSL(3,2) on nonzero vectors
  PairAction,    // A5, S5 on 2-subsets
  Stored,
};

/// A named group together with what it must satisfy once built.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  Family family = Family::Stored;
  std::uint32_t q = 0;  // field order or natural degree
  std::uint32_t d = 1;  // dimension
  std::uint32_t m = 0;  // multiplier order (Frobenius groups) or matrix set id
  int level = 0;        // 0 special/simple, 1 general, 2 with field automorphisms (S), 3 (Gamma)
  BigInt order;         // expected order
  std::size_t transitivity = 1;  // expected minimum transitivity
  std::string file;     // stored generator file name
};

/// Parses names such as "AGL(1,7)", "PGammaL(2,32)", "M11", "7:3", "D(2*5)",
/// "D10", "3^2:D(2*4)". The degree is needed only when a name has several
/// actions (M11 at 11 or 12); zero picks the default one. Greek letters are
/// accepted for Gamma and Sigma.
GroupSpec parse_group_name(const std::string& name, std::size_t degree = 0);

/// Realizes a spec. Throws InvalidArgument on bad parameters and Error when
/// stored data is missing or has the wrong order.
PermGroup build(const GroupSpec& spec);

/// "catalog:NAME@DEGREE", "catalog:NAME" or "file:PATH".
PermGroup resolve_group(const std::string& address);

/// The standard list of named groups used by the verification suites.
std::vector<GroupSpec> catalog_manifest();

/// Directory holding stored generator files: $UT_LAB_DATA if set, else the
/// build-time default.
std::filesystem::path data_directory();

/// Loads a group file: "name X", "degree N", optional "order N", and lines
/// "gen 2,3,1" (images) or "gen (1,2,3)" (cycles). '#' starts a comment.
/// A stated order is checked.
PermGroup load_group_file(const std::filesystem::path& path);
void save_group_file(const PermGroup& g, const std::filesystem::path& path);

}  // namespace utlab
