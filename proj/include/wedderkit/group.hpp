#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wedderkit/errors.hpp"

namespace wedderkit {

using Elt = int32_t;
using Permutation = std::vector<int>;  // images, 0-based points

inline Permutation perm_identity(int degree) {
  Permutation p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}
// apply a, then b
inline Permutation perm_compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}
std::string perm_to_cycles(const Permutation& p);

constexpr int kDefaultConstructionBound = 2000;
constexpr int kDefaultSubgroupBound = 512;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup is identified by its sorted member list inside a fixed parent.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> members;  // ascending, members[0] == 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elt x) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
  }
};

struct ConjugacyClasses {
  std::vector<std::vector<Elt>> classes;  // each ascending; sorted by (size, least)
  std::vector<int> class_of;              // element -> class index
  std::vector<Elt> reps;                  // least member per class
};

// Finite group as a complete multiplication table over indices 0..n-1,
// index 0 the identity. Instances are immutable after construction and
// safe to share across threads; expensive derived data is cached lazily.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
  // table is row-major n*n; throws unless index 0 is a two-sided identity
  // and every element has an inverse. Associativity is checked exhaustively
  // when validate_associativity is set (required for untrusted input).
  static GroupPtr from_mul_table(std::vector<Elt> table, std::vector<std::string> labels,
                                 std::string name, bool validate_associativity);

  // Breadth-first closure from the identity, multiplying on the right by
  // generators in input order; this fixes the element indexing.
  static GroupPtr from_permutation_generators(const std::vector<Permutation>& gens,
                                              std::string name,
                                              int max_order = kDefaultConstructionBound);

  static GroupPtr cyclic(int n, int max_order = kDefaultConstructionBound);
  static GroupPtr dihedral(int order, int max_order = kDefaultConstructionBound);
  static GroupPtr symmetric(int n, int max_order = kDefaultConstructionBound);
  static GroupPtr alternating(int n, int max_order = kDefaultConstructionBound);
  // order 4n: <a, b | a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1}>
  static GroupPtr dicyclic(int order, int max_order = kDefaultConstructionBound);
  // C_m x| C_n with b a b^{-1} = a^k; requires k^n = 1 mod m, gcd(k, m) = 1
  static GroupPtr semidirect_cyclic(int m, int k, int n,
                                    int max_order = kDefaultConstructionBound);

  int order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  // x^g = g^{-1} x g
  Elt conj(Elt x, Elt g) const { return mul(mul(inv(g), x), g); }
  Elt commutator(Elt a, Elt b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elt power(Elt a, long long e) const;

  const std::string& label(Elt a) const { return labels_[a]; }
  const std::string& name() const { return name_; }
  int element_order(Elt a) const { return elt_order_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  // permutation action kept from construction (degree 0 when absent)
  int perm_degree() const { return perm_degree_; }
  const Permutation& perm_of(Elt a) const { return perms_[a]; }
  const std::vector<Elt>& generator_elements() const { return generators_; }
  std::optional<Elt> element_of_perm(const Permutation& p) const;

  const ConjugacyClasses& classes() const;

  Subgroup full_subgroup() const;
  Subgroup trivial_subgroup() const;

  // every subgroup, sorted by (order, members); throws BoundExceeded when
  // order() exceeds the bound
  const std::vector<Subgroup>& all_subgroups(int bound = kDefaultSubgroupBound) const;

private:
  FiniteGroup() = default;
  void finalize();  // inv_, elt_order_, exponent_, abelian_

  int n_ = 0;
  std::vector<Elt> table_;
  std::vector<Elt> inv_;
  std::vector<int> elt_order_;
  std::vector<std::string> labels_;
  std::string name_;
  int exponent_ = 1;
  bool abelian_ = true;
  int perm_degree_ = 0;
  std::vector<Permutation> perms_;
  std::vector<Elt> generators_;

  mutable std::mutex cache_mutex_;
  mutable std::unique_ptr<ConjugacyClasses> classes_cache_;
  mutable std::unique_ptr<std::vector<Subgroup>> subgroups_cache_;
};

// ---- subgroup machinery (all deterministic) ----

Subgroup generated_subgroup(const GroupPtr& g, std::vector<Elt> gens);
Subgroup conjugate_subgroup(const Subgroup& s, Elt g);
bool is_subset(const Subgroup& inner, const Subgroup& outer);
// whether k is normal in u; requires k's members to be a subset of u's
bool is_normal_in(const Subgroup& k, const Subgroup& u);
Subgroup normalizer(const Subgroup& of, const Subgroup& in);
Subgroup centralizer_of_element(const GroupPtr& g, Elt x);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const Subgroup& u);
std::vector<Subgroup> derived_series(const GroupPtr& g);
bool is_solvable(const GroupPtr& g);
bool subgroup_is_cyclic(const Subgroup& s);
// least-index generator of a cyclic subgroup
Elt cyclic_generator(const Subgroup& s);

// raw commutator set {[h, g] : h in H} and the subgroup it generates
std::vector<Elt> relative_commutator_set(const Subgroup& h, Elt g);
Subgroup relative_commutator(const Subgroup& h, Elt g);

// intersection of member sets (a subgroup whenever both inputs are)
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// canonical conjugacy-class key: lexicographically least member list
// among all conjugates of s
std::vector<Elt> canonical_conjugate_key(const Subgroup& s);

struct Quotient {
  GroupPtr group;
  std::vector<Elt> projection;  // parent element -> quotient index, -1 outside
  std::vector<Elt> section;     // quotient index -> least parent representative
};
// quotient u / k; throws NotNormal unless k is normal in u.
// Coset indices are ordered by least representative, so the image of the
// identity is index 0.
Quotient quotient_of_subgroup(const Subgroup& u, const Subgroup& k);
Quotient quotient(const GroupPtr& g, const Subgroup& k);

// subgroups normal in u that contain k strictly and are minimal with that
// property; computed through minimal normal subgroups of u/k
std::vector<Subgroup> minimal_normal_over(const Subgroup& u, const Subgroup& k);

struct EmbeddedGroup {
  GroupPtr group;
  std::vector<Elt> to_parent;    // new index -> parent element
  std::vector<Elt> from_parent;  // parent element -> new index, -1 outside
};
EmbeddedGroup subgroup_as_group(const Subgroup& s);

// explicit isomorphism search; returns an element map a -> b or nothing
std::optional<std::vector<Elt>> find_isomorphism(const GroupPtr& a, const GroupPtr& b);
bool is_isomorphic(const GroupPtr& a, const GroupPtr& b);

// small deterministic generating sequence (greedy, least index first)
std::vector<Elt> small_generating_set(const GroupPtr& g);

struct DirectProduct {
  GroupPtr group;
  std::vector<Elt> inject_a;  // a -> (a, 0)
  std::vector<Elt> inject_b;  // b -> (0, b)
};
DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b,
                             int max_order = kDefaultConstructionBound);

// Cayley table file: first line the order, then n rows of n indices.
GroupPtr read_cayley_table(const std::string& path, int max_order = kDefaultConstructionBound);
void write_cayley_table(const GroupPtr& g, const std::string& path);

}  // namespace wedderkit
