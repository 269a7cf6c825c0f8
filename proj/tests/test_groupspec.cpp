#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedderkit/errors.hpp"
#include "wedderkit/groupspec.hpp"

using namespace wedderkit;

TEST_CASE("named families") {
  CHECK(group_from_spec("cyclic:6")->order() == 6);
  CHECK(group_from_spec("cyclic:6")->name() == "C6");
  CHECK(group_from_spec("cyclic:1")->order() == 1);
  CHECK(group_from_spec("dihedral:8")->order() == 8);
  CHECK(group_from_spec("sym:4")->order() == 24);
  CHECK(group_from_spec("alt:4")->order() == 12);
  CHECK(is_isomorphic(group_from_spec("quaternion:8"), FiniteGroup::dicyclic(8)));
  CHECK(group_from_spec("quaternion:16")->order() == 16);
}

TEST_CASE("permutation generators in cycle notation") {
  GroupPtr d4 = group_from_spec("perm:(1,2,3,4);(1,3)");
  CHECK(d4->order() == 8);
  CHECK(is_isomorphic(d4, FiniteGroup::dihedral(8)));

  GroupPtr g = group_from_spec("perm:(1,2,3)(4,5);(1,2)");
  CHECK(g->order() == 12);

  CHECK(group_from_spec("perm:(1)")->order() == 1);
  CHECK(group_from_spec("perm:( 1 , 2 )")->order() == 2);
  CHECK(group_from_spec("perm:(1,2);(3,4)")->order() == 4);
}

TEST_CASE("combinators") {
  CHECK(is_isomorphic(group_from_spec("product:cyclic:2|cyclic:3"), FiniteGroup::cyclic(6)));
  CHECK(group_from_spec("product:sym:3|cyclic:4")->order() == 24);
  CHECK(group_from_spec("product:product:cyclic:2|cyclic:2|cyclic:2")->order() == 8);

  GroupPtr w = group_from_spec("wreath:cyclic:2~cyclic:2");
  CHECK(is_isomorphic(w, FiniteGroup::dihedral(8)));
  CHECK(group_from_spec("wreath:sym:3~cyclic:2")->order() == 72);
  CHECK(group_from_spec("wreath:wreath:cyclic:2~cyclic:2~cyclic:2")->order() == 128);
  CHECK(group_from_spec("product:cyclic:2|wreath:cyclic:3~cyclic:3")->order() == 162);
}

TEST_CASE("parse errors name a position") {
  auto position_of = [](const std::string& spec) -> std::string {
    try {
      group_from_spec(spec);
    } catch (const ParseError& e) {
      std::string what = e.what();
      auto at = what.find("position ");
      REQUIRE(at != std::string::npos);
      auto end = what.find(':', at);
      return what.substr(at + 9, end - at - 9);
    }
    REQUIRE(false);
    return "";
  };

  CHECK(position_of("") == "0");
  CHECK(position_of("bogus:3") == "0");
  CHECK(position_of("cyclic:") == "7");
  CHECK(position_of("cyclic:x") == "7");
  CHECK(position_of("cyclic") == "0");
  CHECK(position_of("perm:(1,2") == "5");
  CHECK(position_of("perm:(0,1)") == "6");
  CHECK(position_of("perm:x") == "5");
  CHECK(position_of("perm:(1,2);") == "11");
  CHECK(position_of("product:cyclic:2") == "8");
  CHECK(position_of("wreath:cyclic:2") == "7");
  CHECK(position_of("wreath:cyclic:2~sym:3") == "16");
  CHECK(position_of("quaternion:6") == "11");
}

TEST_CASE("points may not repeat within a generator") {
  CHECK_THROWS_AS(group_from_spec("perm:(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(group_from_spec("perm:(1,1)"), ParseError);
  // the same point in different generators is fine
  CHECK(group_from_spec("perm:(1,2);(2,3)")->order() == 6);
}

TEST_CASE("bounds and actor validation") {
  CHECK_THROWS_AS(group_from_spec("sym:5", 100), GroupTooLarge);
  CHECK_THROWS_AS(group_from_spec("product:sym:4|sym:4", 500), GroupTooLarge);
  CHECK_THROWS_AS(group_from_spec("wreath:cyclic:2~cyclic:4"), InvalidArgument);
  CHECK(group_from_spec("sym:5", 120)->order() == 120);
}
