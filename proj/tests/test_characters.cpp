#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "wedderkit/characters.hpp"
#include "wedderkit/errors.hpp"

using namespace wedderkit;

namespace {
Subgroup unique_subgroup_of_order(const GroupPtr& g, int n) {
  const Subgroup* found = nullptr;
  for (const auto& s : g->all_subgroups()) {
    if (s.order() == n) {
      REQUIRE(found == nullptr);
      found = &s;
    }
  }
  REQUIRE(found != nullptr);
  return *found;
}

GroupPtr sl23() {
  // degree-8 action on the nonzero vectors of a 2-dim space over F3
  std::vector<Permutation> gens{{2, 5, 1, 4, 7, 0, 3, 6}, {0, 1, 3, 4, 2, 7, 5, 6}};
  return FiniteGroup::from_permutation_generators(gens, "sl23");
}
}  // namespace

TEST_CASE("table of the trivial group") {
  auto t = character_table(FiniteGroup::cyclic(1));
  CHECK(t.degrees == std::vector<int>{1});
  CHECK(t.rows.size() == 1);
  CHECK(t.rows[0][0] == Cyclotomic::one(1));
}

TEST_CASE("table of a cyclic group") {
  auto c4 = FiniteGroup::cyclic(4);
  auto t = character_table(c4);
  CHECK(t.degrees == std::vector<int>(4, 1));
  CHECK(t.conductor == 4);
  // every value is a fourth root of unity and rows are distinct
  for (const auto& row : t.rows)
    for (const auto& v : row) CHECK((v * v * v * v) == Cyclotomic::one(4));
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = i + 1; j < t.rows.size(); ++j) CHECK(t.rows[i] != t.rows[j]);
}

TEST_CASE("table of the symmetric group on three points") {
  auto s3 = FiniteGroup::symmetric(3);
  auto t = character_table(s3);
  std::vector<int> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 1, 2});
  // classes are ordered identity, 3-cycles, transpositions
  CHECK(s3->classes().classes[1].size() == 2);
  // the degree-2 row takes values 2, -1, 0
  const auto& std_row = t.rows[2];
  CHECK(std_row[0].as_rational() == Rational(2));
  CHECK(std_row[1].as_rational() == Rational(-1));
  CHECK(std_row[2].as_rational() == Rational(0));
}

TEST_CASE("tables are reproducible") {
  auto d4 = FiniteGroup::dihedral(8);
  auto t1 = character_table(d4);
  auto t2 = character_table(d4);
  CHECK(t1.degrees == t2.degrees);
  CHECK(t1.rows == t2.rows);
}

TEST_CASE("quaternion and dihedral tables") {
  for (auto g : {FiniteGroup::dihedral(8), FiniteGroup::dicyclic(8)}) {
    auto t = character_table(g);
    std::vector<int> degs = t.degrees;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 1, 1, 2});
  }
}

TEST_CASE("frobenius group of order 21") {
  auto f21 = FiniteGroup::semidirect_cyclic(7, 2, 3);
  auto t = character_table(f21);
  std::vector<int> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 1, 1, 3, 3});
}

TEST_CASE("special linear group degrees") {
  auto t = character_table(sl23());
  std::vector<int> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("linear characters with a fixed kernel") {
  auto s3 = FiniteGroup::symmetric(3);
  Subgroup whole = s3->full_subgroup();
  Subgroup c3 = unique_subgroup_of_order(s3, 3);
  // kernel C3: the sign character only
  auto chis = linear_characters_with_kernel(whole, c3, 6);
  CHECK(chis.size() == 1);
  CHECK(chis[0].degree() == Rational(1));
  // kernel 1 inside C3: the two faithful characters of C3
  auto faithful = linear_characters_with_kernel(c3, s3->trivial_subgroup(), 6);
  CHECK(faithful.size() == 2);
  // non-cyclic quotient gives nothing
  CHECK(linear_characters_with_kernel(whole, s3->trivial_subgroup(), 6).empty());
  // all linear characters of S3: trivial and sign
  CHECK(all_linear_characters(whole, 6).size() == 2);
  // of C3: three
  CHECK(all_linear_characters(c3, 6).size() == 3);
}

TEST_CASE("kernels are exact") {
  auto c12 = FiniteGroup::cyclic(12);
  for (const auto& k : c12->all_subgroups()) {
    for (const auto& chi : linear_characters_with_kernel(c12->full_subgroup(), k, 12)) {
      for (Elt x = 0; x < 12; ++x) {
        bool in_kernel = chi.value_at(x) == Cyclotomic::one(12);
        CHECK(in_kernel == k.contains(x));
      }
    }
  }
}

TEST_CASE("induction from the rotation subgroup") {
  auto s3 = FiniteGroup::symmetric(3);
  Subgroup c3 = unique_subgroup_of_order(s3, 3);
  auto faithful = linear_characters_with_kernel(c3, s3->trivial_subgroup(), 6);
  SubgroupCharacter ind = induce(faithful[0], s3->full_subgroup());
  CHECK(ind.degree() == Rational(2));
  CHECK(is_irreducible_character(ind));
  // induced value vanishes off the source subgroup's conjugates
  for (Elt x = 0; x < 6; ++x)
    if (!c3.contains(x)) CHECK(ind.value_at(x).is_zero());
}

TEST_CASE("induction is transitive") {
  auto d6 = FiniteGroup::dihedral(12);
  Subgroup c6;
  for (const auto& s : d6->all_subgroups())
    if (s.order() == 6 && subgroup_is_cyclic(s)) c6 = s;
  REQUIRE(c6.order() == 6);
  // chain C2 < C6 < D6 through the rotation subgroup
  Subgroup c2;
  bool got = false;
  for (const auto& s : d6->all_subgroups()) {
    if (s.order() == 2 && is_subset(s, c6) && !got) {
      c2 = s;
      got = true;
    }
  }
  REQUIRE(got);
  auto chis = linear_characters_with_kernel(c2, d6->trivial_subgroup(), 12);
  REQUIRE(chis.size() == 1);
  SubgroupCharacter once = induce(chis[0], d6->full_subgroup());
  SubgroupCharacter twice = induce(induce(chis[0], c6), d6->full_subgroup());
  CHECK(once.values == twice.values);
}

TEST_CASE("inner products count multiplicities") {
  auto s3 = FiniteGroup::symmetric(3);
  auto t = character_table(s3);
  for (size_t i = 0; i < t.rows.size(); ++i) {
    SubgroupCharacter a = character_from_row(t, static_cast<int>(i));
    CHECK(is_irreducible_character(a));
    for (size_t j = i + 1; j < t.rows.size(); ++j) {
      SubgroupCharacter b = character_from_row(t, static_cast<int>(j));
      CHECK(inner_product(a, b).is_zero());
    }
  }
  // regular character decomposes with multiplicity = degree
  SubgroupCharacter reg;
  reg.domain = s3->full_subgroup();
  reg.conductor = 6;
  reg.values.assign(6, Cyclotomic(6));
  reg.values[0] = Cyclotomic::from_rational(6, Rational(6));
  for (size_t i = 0; i < t.rows.size(); ++i) {
    SubgroupCharacter a = character_from_row(t, static_cast<int>(i));
    Cyclotomic m = inner_product(reg, a);
    CHECK(m.as_rational() == Rational(t.degrees[i]));
  }
}

TEST_CASE("character idempotents for the rotation subgroup") {
  auto s3 = FiniteGroup::symmetric(3);
  Subgroup c3 = unique_subgroup_of_order(s3, 3);
  auto faithful = linear_characters_with_kernel(c3, s3->trivial_subgroup(), 6);
  // the rational span of one faithful character equals epsilon(C3, 1)
  RationalElement eq = eQ_of_char(faithful[0]);
  CHECK(eq == epsilon_idempotent(c3, s3->trivial_subgroup()));
  CHECK(eq == eQ_of_char(faithful[1]));
  // trivial character of H gives hat(H)
  auto triv = linear_characters_with_kernel(c3, c3, 6);
  CHECK(eQ_of_char(triv[0]) == hat(c3));
}

TEST_CASE("rational idempotent of an irreducible row") {
  auto s3 = FiniteGroup::symmetric(3);
  auto t = character_table(s3);
  Subgroup c3 = unique_subgroup_of_order(s3, 3);
  // the degree-2 row is rational, so its rational idempotent is e(chi)
  RationalElement eq = eQ_of_char(character_from_row(t, 2));
  CHECK(eq == e_idempotent(s3, c3, s3->trivial_subgroup()));
  CHECK(is_idempotent(eq));
  CHECK(is_central(eq));
  CHECK(ideal_dimension(eq) == 4);
}

TEST_CASE("monomial witnesses cover solvable groups") {
  for (auto g : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(8),
                 FiniteGroup::dicyclic(8), FiniteGroup::alternating(4),
                 FiniteGroup::semidirect_cyclic(7, 2, 3)}) {
    CharacterOracle oracle(g);
    CHECK(oracle.all_rows_monomial());
    for (const auto& w : oracle.monomial_rows()) {
      REQUIRE(w.monomial);
      REQUIRE(w.inducing.has_value());
      // re-induce the witness and confirm it reproduces the row
      SubgroupCharacter ind = induce(*w.inducing, g->full_subgroup());
      CHECK(is_irreducible_character(ind));
    }
  }
}

TEST_CASE("special linear group is not monomial") {
  CharacterOracle oracle(sl23());
  CHECK(!oracle.all_rows_monomial());
  const auto& t = oracle.table();
  const auto& wit = oracle.monomial_rows();
  for (size_t i = 0; i < wit.size(); ++i) {
    // exactly the degree-2 rows fail
    CHECK(wit[i].monomial == (t.degrees[i] != 2));
  }
}

TEST_CASE("supermonomial rows") {
  CharacterOracle s3o(FiniteGroup::symmetric(3));
  CHECK(s3o.group_is_supermonomial());
  CharacterOracle slo(sl23());
  CHECK(!slo.group_is_supermonomial());
}

TEST_CASE("oracle respects its bound") {
  CharacterOracle oracle(FiniteGroup::symmetric(4), 10);
  CHECK_THROWS_AS(oracle.table(), BoundExceeded);
}
