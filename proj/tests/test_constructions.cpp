#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "wedderkit/constructions.hpp"
#include "wedderkit/errors.hpp"

using namespace wedderkit;

namespace {

GroupPtr find_catalog(const std::string& name) {
  for (const CatalogEntry& e : small_group_catalog())
    if (e.name == name) return e.group;
  REQUIRE(false);
  return nullptr;
}

void check_wreath_shape(const WreathProduct& w, int base_order, int p) {
  long long expected = p;
  for (int i = 0; i < p; ++i) expected *= base_order;
  CHECK(w.group->order() == expected);
  CHECK(w.block_count == p);
  CHECK(w.base.order() == expected / p);
  CHECK(is_normal_in(w.base, w.group->full_subgroup()));
  Quotient q = quotient(w.group, w.base);
  CHECK(q.group->order() == p);
  CHECK(q.group->exponent() == p);
}

}  // namespace

TEST_CASE("wreath of C2 by C2 is the order-8 dihedral group") {
  WreathProduct w = wreath_by_cyclic(FiniteGroup::cyclic(2), 2);
  check_wreath_shape(w, 2, 2);
  CHECK(is_isomorphic(w.group, FiniteGroup::dihedral(8)));
  CHECK_FALSE(w.group->is_abelian());
}

TEST_CASE("wreath of C3 by C2 splits as C3 times S3, not the inverting form") {
  WreathProduct w = wreath_by_cyclic(FiniteGroup::cyclic(3), 2);
  check_wreath_shape(w, 3, 2);
  GroupPtr swap_form = direct_product(FiniteGroup::cyclic(3), FiniteGroup::dihedral(6)).group;
  CHECK(is_isomorphic(w.group, swap_form));
  CHECK_FALSE(is_isomorphic(w.group, find_catalog("gd3x3")));
}

TEST_CASE("wreath shapes for assorted bases") {
  check_wreath_shape(wreath_by_cyclic(FiniteGroup::cyclic(2), 3), 2, 3);
  check_wreath_shape(wreath_by_cyclic(FiniteGroup::symmetric(3), 2), 6, 2);
  // no stored permutation action: falls back to the regular one
  check_wreath_shape(wreath_by_cyclic(FiniteGroup::dicyclic(8), 2), 8, 2);

  WreathProduct tiny = wreath_by_cyclic(FiniteGroup::cyclic(1), 3);
  CHECK(tiny.group->order() == 3);
  CHECK(tiny.group->name() == "C3");
  CHECK(is_isomorphic(tiny.group, FiniteGroup::cyclic(3)));
}

TEST_CASE("wreath rejects composite actors and oversized results") {
  CHECK_THROWS_AS(wreath_by_cyclic(FiniteGroup::cyclic(2), 4), InvalidArgument);
  CHECK_THROWS_AS(wreath_by_cyclic(FiniteGroup::cyclic(2), 1), InvalidArgument);
  CHECK_THROWS_AS(wreath_by_cyclic(FiniteGroup::cyclic(2), 2, 4), GroupTooLarge);
  CHECK_THROWS_AS(wreath_by_cyclic(FiniteGroup::symmetric(3), 5), GroupTooLarge);
}

TEST_CASE("prime-factor series of small solvable groups") {
  auto primes_of = [](const GroupPtr& g) {
    SeriesWithPrimeFactors s = composition_series_prime_factors(g);
    REQUIRE(s.terms.size() == s.factor_primes.size() + 1);
    CHECK(s.terms.front().order() == 1);
    CHECK(s.terms.back().order() == g->order());
    for (size_t i = 0; i + 1 < s.terms.size(); ++i) {
      CHECK(s.terms[i + 1].order() == s.terms[i].order() * s.factor_primes[i]);
      CHECK(is_subset(s.terms[i], s.terms[i + 1]));
      CHECK(is_normal_in(s.terms[i], s.terms[i + 1]));
    }
    return s.factor_primes;
  };

  CHECK(primes_of(FiniteGroup::symmetric(3)) == std::vector<int>{3, 2});
  CHECK(primes_of(FiniteGroup::cyclic(6)) == std::vector<int>{2, 3});
  CHECK(primes_of(FiniteGroup::alternating(4)) == std::vector<int>{2, 2, 3});
  CHECK(primes_of(FiniteGroup::dihedral(8)) == std::vector<int>{2, 2, 2});
  CHECK(primes_of(FiniteGroup::dicyclic(8)) == std::vector<int>{2, 2, 2});
  CHECK(primes_of(FiniteGroup::cyclic(1)).empty());

  CHECK_THROWS_AS(composition_series_prime_factors(FiniteGroup::alternating(5)), NotSolvable);
}

TEST_CASE("iterated wreath towers embed their source groups") {
  struct Row {
    GroupPtr g;
    int tower_order;
  };
  std::vector<Row> rows = {{FiniteGroup::symmetric(3), 18},
                           {FiniteGroup::cyclic(6), 24},
                           {FiniteGroup::dihedral(8), 128},
                           {FiniteGroup::dicyclic(8), 128}};
  for (const Row& row : rows) {
    CAPTURE(row.g->name());
    DadeEmbedding emb = dade_embedding(row.g);
    CHECK(emb.tower->order() == row.tower_order);
    CHECK(emb.map[0] == 0);

    std::set<Elt> seen;
    for (Elt x = 0; x < row.g->order(); ++x) {
      CHECK(emb.map[x] >= 0);
      seen.insert(emb.map[x]);
    }
    CHECK(static_cast<int>(seen.size()) == row.g->order());

    for (Elt x = 0; x < row.g->order(); ++x)
      for (Elt y = 0; y < row.g->order(); ++y)
        REQUIRE(emb.tower->mul(emb.map[x], emb.map[y]) == emb.map[row.g->mul(x, y)]);

    CHECK(emb.image.order() == row.g->order());
    EmbeddedGroup img = subgroup_as_group(emb.image);
    CHECK(is_isomorphic(img.group, row.g));
  }
}

TEST_CASE("tower of the smallest symmetric group is the C3 by C2 wreath") {
  DadeEmbedding emb = dade_embedding(FiniteGroup::symmetric(3));
  CHECK(emb.tower->name() == "C3~C2");
  GroupPtr expected = wreath_by_cyclic(FiniteGroup::cyclic(3), 2).group;
  CHECK(is_isomorphic(emb.tower, expected));
}

TEST_CASE("towers of degenerate groups collapse") {
  DadeEmbedding one = dade_embedding(FiniteGroup::cyclic(1));
  CHECK(one.tower->order() == 1);
  CHECK(one.image.order() == 1);

  DadeEmbedding five = dade_embedding(FiniteGroup::cyclic(5));
  CHECK(five.tower->order() == 5);
  CHECK(is_isomorphic(five.tower, FiniteGroup::cyclic(5)));
}

TEST_CASE("embedding bound is enforced") {
  // order-12 alternating group needs a tower of order 1536
  CHECK_THROWS_AS(dade_embedding(FiniteGroup::alternating(4), 1000), GroupTooLarge);
  CHECK_THROWS_AS(dade_embedding(FiniteGroup::alternating(5)), NotSolvable);
}

TEST_CASE("catalog covers every order up to 23 with the right multiplicity") {
  const auto& cat = small_group_catalog();
  CHECK(cat.size() == 59);

  std::map<int, int> counts;
  std::set<std::string> names;
  for (const CatalogEntry& e : cat) {
    counts[e.group->order()] += 1;
    CHECK(names.insert(e.name).second);
  }
  std::map<int, int> expected = {{1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
                                 {7, 1},  {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
                                 {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5},
                                 {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}};
  CHECK(counts == expected);
}

TEST_CASE("catalog entries of equal order are pairwise non-isomorphic") {
  const auto& cat = small_group_catalog();
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].group->order() != cat[j].group->order()) continue;
      CAPTURE(cat[i].name);
      CAPTURE(cat[j].name);
      CHECK_FALSE(is_isomorphic(cat[i].group, cat[j].group));
    }
}

TEST_CASE("catalog spot identities") {
  CHECK(is_isomorphic(find_catalog("d3"), FiniteGroup::symmetric(3)));
  CHECK(find_catalog("pauli16")->order() == 16);
  CHECK(center(find_catalog("pauli16")).order() == 4);
  CHECK(center(find_catalog("v4sc4")).order() == 4);
  CHECK_FALSE(find_catalog("v4sc4")->is_abelian());
  CHECK(find_catalog("gd3x3")->order() == 18);
  CHECK(center(find_catalog("gd3x3")).order() == 1);
}

TEST_CASE("direct product suite certifies its listed instances") {
  SuiteOptions opt;
  opt.classify.jobs = 4;
  SuiteReport rep = verify_theorem_suite("lemma2", opt);
  CHECK(rep.name == "lemma2");
  REQUIRE(rep.instances.size() == 2);
  CHECK(rep.passed == 2);
  CHECK(rep.failed == 0);
  CHECK(rep.unknown == 0);
  CHECK(rep.instances[0].construction == "S3xC4");
  CHECK(rep.instances[0].orders == std::vector<int>{6, 4, 24});
  CHECK(rep.instances[1].orders == std::vector<int>{8, 3, 24});
  for (const SuiteInstance& inst : rep.instances) {
    CHECK(inst.outcome == SuiteOutcome::pass);
    CHECK(inst.budget_status == "within");
    CHECK(inst.flags.find("generalized_strongly_monomial=true") != std::string::npos);
  }
}

TEST_CASE("tower suite verifies embeddings and classifies the small towers") {
  SuiteOptions opt;
  opt.classify.jobs = 4;
  SuiteReport rep = verify_theorem_suite("theorem1", opt);
  REQUIRE(rep.instances.size() == 4);
  CHECK(rep.passed == 4);
  CHECK(rep.failed == 0);

  CHECK(rep.instances[0].construction == "tower(S3)");
  CHECK(rep.instances[0].orders == std::vector<int>{6, 18});
  CHECK(rep.instances[0].flags.find("generalized_strongly_monomial=true") != std::string::npos);

  CHECK(rep.instances[1].orders == std::vector<int>{6, 24});
  CHECK(rep.instances[1].flags.find("generalized_strongly_monomial=true") != std::string::npos);

  // the two order-128 towers stay above the classification limit
  for (size_t i : {size_t(2), size_t(3)}) {
    CHECK(rep.instances[i].orders[1] == 128);
    CHECK(rep.instances[i].budget_status == "skipped");
    CHECK(rep.instances[i].outcome == SuiteOutcome::pass);
  }
}

TEST_CASE("supermonomial sample suite holds on the whole catalog") {
  SuiteOptions opt;
  opt.classify.jobs = 4;
  SuiteReport rep = verify_theorem_suite("theorem3_sample", opt);
  REQUIRE(rep.instances.size() == 63);
  CHECK(rep.failed == 0);
  CHECK(rep.unknown == 0);
  CHECK(rep.passed == 63);

  int vacuous = 0;
  for (const SuiteInstance& inst : rep.instances)
    if (inst.flags == "supermonomial=false") ++vacuous;
  // the special linear group over three elements is the one non-monomial entry
  CHECK(vacuous == 1);
  CHECK(rep.instances[59].construction == "S4");
  CHECK(rep.instances[59].flags.find("supermonomial=true") != std::string::npos);
  CHECK(rep.instances[60].flags == "supermonomial=false");
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(verify_theorem_suite("theorem9"), InvalidArgument);
}
