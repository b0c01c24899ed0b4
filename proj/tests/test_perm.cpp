#include <doctest.h>

#include "utlab/perm.hpp"

using namespace utlab;

namespace {

Permutation cyc(const char* s, std::size_t n) { return Permutation::from_cycles(s, n); }

}  // namespace

TEST_CASE("permutations compose left to right") {
  const auto p = cyc("(1,2,3)", 4);
  const auto q = cyc("(1,2)", 4);
  CHECK((p * q)(1) == q(p(1)));
  CHECK((p * q).to_cycle_string() == "(2,3)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 3);
  CHECK(cyc("(1,2)(3,4,5)", 5).order() == 6);
  CHECK(Permutation(3).to_cycle_string() == "()");
  CHECK(cyc("(1,4)(2,3)", 4).to_image_string() == "4,3,2,1");
  CHECK_THROWS_AS(cyc("(1,2)(2,3)", 3), InvalidArgument);
  const Point bad[] = {1, 1, 2};
  CHECK_THROWS_AS(Permutation::from_images(bad), InvalidArgument);
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), InvalidArgument);
}

TEST_CASE("stabilizer chain order matches element closure") {
  const std::vector<PermGroup> groups{
      PermGroup(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(1,2)", 6)}),
      PermGroup(6, {cyc("(1,2,3)", 6), cyc("(2,3,4,5,6)", 6)}),
      PermGroup(8, {cyc("(1,2,3,4,5,6,7,8)", 8), cyc("(2,8)(3,7)(4,6)", 8)}),
      PermGroup(7, {cyc("(1,2,3,4,5,6,7)", 7), cyc("(2,3,5)(4,7,6)", 7)}),
      PermGroup(6, {cyc("(1,2)", 6), cyc("(3,4)", 6), cyc("(5,6)", 6)}),
      PermGroup(5, {cyc("(2,3)", 5), cyc("(3,4)", 5)}),
  };
  for (const auto& g : groups) {
    const auto els = g.elements();
    CHECK(g.order() == els.size());
    for (const auto& e : els) CHECK(g.contains(e));
  }
  CHECK_FALSE(groups[3].contains(cyc("(1,2)", 7)));
}

TEST_CASE("chain handles generators fixing the first points") {
  // Generators fixing point 1 must still act on the level-1 orbit.
  const PermGroup g(4, {cyc("(1,2)", 4), cyc("(2,3)", 4), cyc("(3,4)", 4)});
  CHECK(g.order() == 24);
  CHECK(g.transitivity() == 4);
}

TEST_CASE("large groups by order") {
  const PermGroup m11(11, {cyc("(1,2,3,4,5,6,7,8,9,10,11)", 11), cyc("(3,7,11,8)(4,10,5,6)", 11)});
  CHECK(m11.order() == 7920);
  CHECK(m11.transitivity() == 4);
  const PermGroup m12(12, {cyc("(1,2,3,4,5,6,7,8,9,10,11)", 12), cyc("(3,7,11,8)(4,10,5,6)", 12),
                           cyc("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)});
  CHECK(m12.order() == 95040);
  CHECK(m12.transitivity() == 5);
  const PermGroup a9(9, {cyc("(1,2,3)", 9), cyc("(1,2,3,4,5,6,7,8,9)", 9)});
  CHECK(a9.order() == 181440);
  CHECK(a9.transitivity() == 7);
}

TEST_CASE("orbits and block systems") {
  const PermGroup d8(8, {cyc("(1,2,3,4,5,6,7,8)", 8), cyc("(2,8)(3,7)(4,6)", 8)});
  CHECK(d8.is_transitive());
  const auto bs = d8.find_block_system();
  REQUIRE(bs.has_value());
  CHECK(bs->block_size() == 2);
  CHECK(d8.minimal_block(5).to_string() == "1,5|2,6|3,7|4,8");
  const PermGroup c7(7, {cyc("(1,2,3,4,5,6,7)", 7)});
  CHECK(c7.is_primitive());
  const PermGroup split(5, {cyc("(1,2)", 5), cyc("(3,4,5)", 5)});
  CHECK(split.orbits() == std::vector<std::vector<Point>>{{1, 2}, {3, 4, 5}});
  CHECK_THROWS_AS(split.find_block_system(), InvalidArgument);
  CHECK_THROWS_AS(split.elements(3), CapExceeded);
}
