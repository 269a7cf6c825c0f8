#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wedderkit/algebra.hpp"
#include "wedderkit/cyclotomic.hpp"
#include "wedderkit/group.hpp"

namespace wedderkit {

// class-constant function on a subgroup, stored per element
struct SubgroupCharacter {
  Subgroup domain;
  int conductor = 1;
  std::vector<Cyclotomic> values;  // parallel to domain.members

  const Cyclotomic& value_at(Elt x) const;
  Rational degree() const;  // value at the identity
  bool operator==(const SubgroupCharacter& o) const {
    return domain.members == o.domain.members && values == o.values;
  }
};

// subgroups of H, returned as subgroups of H's parent, ascending
std::vector<Subgroup> subgroups_of(const Subgroup& h);

// linear characters of H whose kernel is exactly K. Empty unless K is normal
// in H with cyclic quotient. Order: faithful characters of H/K through the
// generator coset with least representative, exponents ascending.
std::vector<SubgroupCharacter> linear_characters_with_kernel(const Subgroup& h,
                                                             const Subgroup& k,
                                                             int conductor);

// every linear character of H, grouped by kernel, kernels ascending
std::vector<SubgroupCharacter> all_linear_characters(const Subgroup& h, int conductor);

// induced value at u: |H|^{-1} * sum of f over the H-hits of {x u x^{-1} : x in U}
std::vector<Cyclotomic> induce_values(const SubgroupCharacter& f, const Subgroup& to,
                                      const std::vector<Elt>& at);
SubgroupCharacter induce(const SubgroupCharacter& f, const Subgroup& to);

Cyclotomic inner_product(const SubgroupCharacter& a, const SubgroupCharacter& b);
bool is_irreducible_character(const SubgroupCharacter& a);

// e(chi) = chi(1)/|H| * sum over H of chi(h) h^{-1}
CyclotomicElement e_of_char(const SubgroupCharacter& chi);
// sum of e over the distinct Galois twists of chi; coefficients are rational
RationalElement eQ_of_char(const SubgroupCharacter& chi);

struct CharacterTable {
  GroupPtr group;
  int conductor = 1;
  std::vector<int> degrees;                   // per row
  std::vector<std::vector<Cyclotomic>> rows;  // rows[i][j]: value on class j
};

// exact table computed by separating eigenvectors of the class-sum matrices
// over a prime field and lifting eigenvalue multiplicities; rows are sorted
// by degree then value order, so equal groups give identical tables
CharacterTable character_table(const GroupPtr& g);

// expand row values from classes to elements; domain is the whole group
SubgroupCharacter character_from_row(const CharacterTable& t, int row);

// restrict a character of the standalone copy back to the embedded subgroup
SubgroupCharacter embed_character(const EmbeddedGroup& emb, const SubgroupCharacter& inner,
                                  const Subgroup& as, int conductor);

// cached character data for one group: table, monomial witnesses per row,
// and the same data for standalone copies of its subgroups
class CharacterOracle {
public:
  explicit CharacterOracle(GroupPtr g, int bound = 200);

  const GroupPtr& group() const { return g_; }
  const CharacterTable& table();

  struct MonomialWitness {
    bool monomial = false;
    Subgroup from;
    std::optional<SubgroupCharacter> inducing;
  };
  // row i is monomial iff some linear character of a subgroup induces it
  const std::vector<MonomialWitness>& monomial_rows();
  bool all_rows_monomial();

  // row is supermonomial when every irreducible of every subgroup that
  // induces it is itself monomial inside its subgroup
  bool row_is_supermonomial(int row);
  bool group_is_supermonomial();

  // index of the row with these class values, -1 if none
  int row_index_of(const std::vector<Cyclotomic>& by_class);

  // distinct subgroups up to conjugacy: first representative of each class
  // in the (order, members) ordering
  const std::vector<Subgroup>& subgroup_reps();

private:
  struct Standalone {
    EmbeddedGroup emb;
    std::unique_ptr<CharacterOracle> oracle;
  };
  Standalone& standalone(const Subgroup& s);
  void compute_supermonomial();

  GroupPtr g_;
  int bound_;
  std::optional<CharacterTable> table_;
  std::optional<std::vector<MonomialWitness>> witnesses_;
  std::optional<std::vector<char>> supermono_;
  std::optional<std::vector<Subgroup>> reps_;
  std::map<std::string, Standalone> standalone_;
};

}  // namespace wedderkit
