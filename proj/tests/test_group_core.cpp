#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "wedderkit/errors.hpp"
#include "wedderkit/group.hpp"

using namespace wedderkit;

TEST_CASE("permutation composition applies left factor first") {
  Permutation a{1, 0, 2};  // swap 0,1
  Permutation b{0, 2, 1};  // swap 1,2
  Permutation ab = perm_compose(a, b);
  CHECK(ab == Permutation{2, 0, 1});
}

TEST_CASE("builtin families have the right structure") {
  auto c6 = FiniteGroup::cyclic(6);
  CHECK(c6->order() == 6);
  CHECK(c6->is_abelian());
  CHECK(c6->exponent() == 6);

  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(!s3->is_abelian());
  CHECK(s3->exponent() == 6);
  CHECK(s3->classes().classes.size() == 3);

  auto d4 = FiniteGroup::dihedral(8);
  CHECK(d4->order() == 8);
  CHECK(d4->exponent() == 4);
  CHECK(d4->classes().classes.size() == 5);

  auto q8 = FiniteGroup::dicyclic(8);
  CHECK(q8->order() == 8);
  CHECK(q8->exponent() == 4);
  CHECK(q8->classes().classes.size() == 5);
  // exactly one element of order 2
  int invol = 0;
  for (Elt x = 0; x < 8; ++x)
    if (q8->element_order(x) == 2) ++invol;
  CHECK(invol == 1);

  auto a4 = FiniteGroup::alternating(4);
  CHECK(a4->order() == 12);
  CHECK(a4->classes().classes.size() == 4);

  auto a5 = FiniteGroup::alternating(5);
  CHECK(a5->order() == 60);
  CHECK(!is_solvable(a5));
}

TEST_CASE("element orders and inverses") {
  auto s4 = FiniteGroup::symmetric(4);
  for (Elt x = 0; x < s4->order(); ++x) {
    CHECK(s4->mul(x, s4->inv(x)) == 0);
    CHECK(s4->power(x, s4->element_order(x)) == 0);
  }
  CHECK(s4->exponent() == 12);
}

TEST_CASE("subgroup lattice of S3") {
  auto s3 = FiniteGroup::symmetric(3);
  const auto& subs = s3->all_subgroups();
  CHECK(subs.size() == 6);  // 1, three C2, C3, S3
  int by_order[7] = {0, 0, 0, 0, 0, 0, 0};
  for (const auto& s : subs) by_order[s.order()]++;
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 3);
  CHECK(by_order[3] == 1);
  CHECK(by_order[6] == 1);
}

TEST_CASE("subgroup lattice sizes for known groups") {
  CHECK(FiniteGroup::dihedral(8)->all_subgroups().size() == 10);
  CHECK(FiniteGroup::dicyclic(8)->all_subgroups().size() == 6);
  CHECK(FiniteGroup::symmetric(4)->all_subgroups().size() == 30);
  CHECK(FiniteGroup::cyclic(12)->all_subgroups().size() == 6);
}

TEST_CASE("normality, normalizer, center") {
  auto s3 = FiniteGroup::symmetric(3);
  const auto& subs = s3->all_subgroups();
  for (const auto& s : subs) {
    bool n = is_normal_in(s, s3->full_subgroup());
    if (s.order() == 2) CHECK(!n);
    else CHECK(n);
    if (s.order() == 2) {
      Subgroup nz = normalizer(s, s3->full_subgroup());
      CHECK(nz.order() == 2);
    }
  }
  CHECK(center(FiniteGroup::dihedral(8)).order() == 2);
  CHECK(center(FiniteGroup::symmetric(3)).order() == 1);
  CHECK(center(FiniteGroup::dicyclic(8)).order() == 2);
}

TEST_CASE("derived series and solvability") {
  auto s4 = FiniteGroup::symmetric(4);
  auto series = derived_series(s4);
  CHECK(series.size() == 4);  // S4 > A4 > V4 > 1
  CHECK(series[0].order() == 24);
  CHECK(series[1].order() == 12);
  CHECK(series[2].order() == 4);
  CHECK(series[3].order() == 1);
  CHECK(is_solvable(s4));
}

TEST_CASE("quotient by the derived subgroup is abelian") {
  auto s4 = FiniteGroup::symmetric(4);
  Subgroup d = derived_subgroup(s4->full_subgroup());
  Quotient q = quotient(s4, d);
  CHECK(q.group->order() == 2);
  CHECK(q.group->is_abelian());
  CHECK(q.projection[0] == 0);
  // section picks the least representative of each coset
  CHECK(q.section[0] == 0);
}

TEST_CASE("quotient projection is a homomorphism") {
  auto d4 = FiniteGroup::dihedral(8);
  Subgroup z = center(d4);
  Quotient q = quotient(d4, z);
  CHECK(q.group->order() == 4);
  for (Elt a = 0; a < 8; ++a)
    for (Elt b = 0; b < 8; ++b)
      CHECK(q.projection[d4->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
}

TEST_CASE("minimal subgroups over a normal subgroup") {
  auto c12 = FiniteGroup::cyclic(12);
  auto mins = minimal_normal_over(c12->full_subgroup(), c12->trivial_subgroup());
  // C12/1: minimal subgroups have order 2 and 3
  CHECK(mins.size() == 2);
  std::vector<int> orders;
  for (const auto& m : mins) orders.push_back(m.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{2, 3});

  auto v4 = FiniteGroup::dihedral(4);
  auto mins2 = minimal_normal_over(v4->full_subgroup(), v4->trivial_subgroup());
  CHECK(mins2.size() == 3);
}

TEST_CASE("semidirect product construction") {
  // C7 : C3 with k = 2 (2^3 = 8 = 1 mod 7)
  auto f21 = FiniteGroup::semidirect_cyclic(7, 2, 3);
  CHECK(f21->order() == 21);
  CHECK(!f21->is_abelian());
  CHECK(f21->classes().classes.size() == 5);
  CHECK_THROWS_AS(FiniteGroup::semidirect_cyclic(7, 3, 3), InvalidArgument);
}

TEST_CASE("direct product carries injections") {
  auto s3 = FiniteGroup::symmetric(3);
  auto c4 = FiniteGroup::cyclic(4);
  DirectProduct p = direct_product(s3, c4);
  CHECK(p.group->order() == 24);
  CHECK(p.group->exponent() == 12);
  for (Elt a = 0; a < 6; ++a)
    for (Elt b = 0; b < 4; ++b)
      CHECK(p.group->mul(p.inject_a[a], p.inject_b[b]) ==
            p.group->mul(p.inject_b[b], p.inject_a[a]));
}

TEST_CASE("generated subgroups and cyclic checks") {
  auto d6 = FiniteGroup::dihedral(12);
  Subgroup whole = d6->full_subgroup();
  CHECK(subgroup_is_cyclic(d6->trivial_subgroup()));
  CHECK(!subgroup_is_cyclic(whole));
  // rotations form the unique cyclic subgroup of order 6
  int cyclic6 = 0;
  for (const auto& s : d6->all_subgroups())
    if (s.order() == 6 && subgroup_is_cyclic(s)) ++cyclic6;
  CHECK(cyclic6 == 1);
}

TEST_CASE("isomorphism testing separates same-order groups") {
  CHECK(is_isomorphic(FiniteGroup::symmetric(3), FiniteGroup::dihedral(6)));
  CHECK(!is_isomorphic(FiniteGroup::cyclic(6), FiniteGroup::symmetric(3)));
  CHECK(!is_isomorphic(FiniteGroup::dihedral(8), FiniteGroup::dicyclic(8)));
  auto c2c2 = direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)).group;
  CHECK(is_isomorphic(c2c2, FiniteGroup::dihedral(4)));
  CHECK(!is_isomorphic(c2c2, FiniteGroup::cyclic(4)));
  auto c3c3 = direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3)).group;
  CHECK(!is_isomorphic(c3c3, FiniteGroup::cyclic(9)));
  CHECK(is_isomorphic(FiniteGroup::dicyclic(12),
                      FiniteGroup::semidirect_cyclic(3, 2, 4)));
}

TEST_CASE("permutation generator closure") {
  std::vector<Permutation> gens{{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}};  // C5 : C4
  auto g = FiniteGroup::from_permutation_generators(gens, "f20");
  CHECK(g->order() == 20);
  CHECK(g->perm_degree() == 5);
  CHECK(g->element_of_perm(gens[0]).has_value());
  CHECK(!g->element_of_perm(Permutation{1, 0, 2, 3, 4}).has_value());
}

TEST_CASE("cayley table round trip") {
  auto q8 = FiniteGroup::dicyclic(8);
  std::string path = "/tmp/wedderkit_q8_table.txt";
  write_cayley_table(q8, path);
  auto back = read_cayley_table(path);
  CHECK(back->order() == 8);
  CHECK(is_isomorphic(back, q8));
}

TEST_CASE("bad tables are rejected") {
  CHECK_THROWS_AS(read_cayley_table("/tmp/wedderkit_missing_file.txt"), IOError);
  {
    FILE* f = fopen("/tmp/wedderkit_bad_table.txt", "w");
    fputs("2\n0 1\n1 1\n", f);
    fclose(f);
  }
  CHECK_THROWS(read_cayley_table("/tmp/wedderkit_bad_table.txt"));
}
