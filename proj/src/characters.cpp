#include "wedderkit/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wedderkit/errors.hpp"

namespace wedderkit {

const Cyclotomic& SubgroupCharacter::value_at(Elt x) const {
  auto it = std::lower_bound(domain.members.begin(), domain.members.end(), x);
  if (it == domain.members.end() || *it != x)
    throw InvalidArgument("character evaluated outside its domain");
  return values[static_cast<size_t>(it - domain.members.begin())];
}

Rational SubgroupCharacter::degree() const {
  const Cyclotomic& v = value_at(0);
  if (!v.is_rational()) throw InternalError("character degree not rational");
  return v.as_rational();
}

std::vector<Subgroup> subgroups_of(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  if (h.order() == g->order()) return g->all_subgroups();
  EmbeddedGroup emb = subgroup_as_group(h);
  std::vector<Subgroup> out;
  for (const Subgroup& s : emb.group->all_subgroups()) {
    Subgroup lifted;
    lifted.parent = g;
    for (Elt x : s.members) lifted.members.push_back(emb.to_parent[x]);
    std::sort(lifted.members.begin(), lifted.members.end());
    out.push_back(std::move(lifted));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupCharacter> linear_characters_with_kernel(const Subgroup& h,
                                                             const Subgroup& k,
                                                             int conductor) {
  if (!is_subset(k, h)) throw InvalidArgument("kernel must lie inside the domain");
  if (!is_normal_in(k, h)) return {};
  Quotient q = quotient_of_subgroup(h, k);
  if (!subgroup_is_cyclic(q.group->full_subgroup())) return {};
  int m = q.group->order();
  if (conductor % m != 0)
    throw InvalidArgument("conductor does not admit the quotient order");

  Elt gen = 0;
  for (Elt x = 0; x < m; ++x)
    if (q.group->element_order(x) == m) {
      gen = x;
      break;
    }
  std::vector<int> dlog(static_cast<size_t>(m), -1);
  Elt cur = 0;
  for (int a = 0; a < m; ++a) {
    dlog[cur] = a;
    cur = q.group->mul(cur, gen);
  }

  std::vector<SubgroupCharacter> out;
  for (int e = 1; e <= m; ++e) {
    if (std::gcd(e, m) != 1) continue;
    SubgroupCharacter chi;
    chi.domain = h;
    chi.conductor = conductor;
    chi.values.reserve(h.members.size());
    for (Elt x : h.members) {
      int a = dlog[q.projection[x]];
      chi.values.push_back(
          Cyclotomic::root_of_unity(m, static_cast<long long>(e) * a).to_conductor(conductor));
    }
    out.push_back(std::move(chi));
    if (m == 1) break;
  }
  return out;
}

std::vector<SubgroupCharacter> all_linear_characters(const Subgroup& h, int conductor) {
  std::vector<SubgroupCharacter> out;
  for (const Subgroup& k : subgroups_of(h)) {
    auto chis = linear_characters_with_kernel(h, k, conductor);
    for (auto& c : chis) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cyclotomic> induce_values(const SubgroupCharacter& f, const Subgroup& to,
                                      const std::vector<Elt>& at) {
  if (!is_subset(f.domain, to)) throw InvalidArgument("induction needs a containing subgroup");
  const GroupPtr& g = to.parent;
  Rational scale(1, static_cast<long>(f.domain.order()));
  std::vector<Cyclotomic> out;
  out.reserve(at.size());
  for (Elt u : at) {
    Cyclotomic acc(f.conductor);
    for (Elt x : to.members) {
      Elt t = g->conj(u, g->inv(x));  // x u x^{-1}
      if (f.domain.contains(t)) acc += f.value_at(t);
    }
    out.push_back(acc * scale);
  }
  return out;
}

SubgroupCharacter induce(const SubgroupCharacter& f, const Subgroup& to) {
  SubgroupCharacter out;
  out.domain = to;
  out.conductor = f.conductor;
  out.values = induce_values(f, to, to.members);
  return out;
}

Cyclotomic inner_product(const SubgroupCharacter& a, const SubgroupCharacter& b) {
  if (a.domain.members != b.domain.members)
    throw InvalidArgument("inner product needs a common domain");
  Cyclotomic acc(a.conductor);
  for (size_t i = 0; i < a.values.size(); ++i) acc += a.values[i] * b.values[i].conj();
  return acc * Rational(1, static_cast<long>(a.domain.order()));
}

bool is_irreducible_character(const SubgroupCharacter& a) {
  Cyclotomic ip = inner_product(a, a);
  return ip.is_rational() && ip.as_rational() == Rational(1);
}

CyclotomicElement e_of_char(const SubgroupCharacter& chi) {
  const GroupPtr& g = chi.domain.parent;
  CyclotomicElement out = cyclotomic_element(g, chi.conductor);
  Rational scale = chi.degree() / Rational(chi.domain.order());
  for (Elt h : chi.domain.members) out.add_term(g->inv(h), chi.value_at(h) * scale);
  out.normalize();
  return out;
}

RationalElement eQ_of_char(const SubgroupCharacter& chi) {
  int c = chi.conductor;
  std::set<std::string> seen;
  CyclotomicElement acc = cyclotomic_element(chi.domain.parent, c);
  for (int t = 1; t <= c; ++t) {
    if (std::gcd(t, c) != 1) continue;
    SubgroupCharacter twist;
    twist.domain = chi.domain;
    twist.conductor = c;
    twist.values.reserve(chi.values.size());
    std::ostringstream key;
    for (const Cyclotomic& v : chi.values) {
      Cyclotomic w = v.galois(t);
      key << w.to_string() << "|";
      twist.values.push_back(std::move(w));
    }
    if (!seen.insert(key.str()).second) continue;
    acc = acc + e_of_char(twist);
  }
  RationalElement out = rational_element(chi.domain.parent);
  for (const auto& [x, v] : acc.terms()) {
    if (!v.is_rational())
      throw InternalError("Galois-summed idempotent has an irrational coefficient");
    out.add_term(x, v.as_rational());
  }
  out.normalize();
  return out;
}

SubgroupCharacter character_from_row(const CharacterTable& t, int row) {
  SubgroupCharacter chi;
  chi.domain = t.group->full_subgroup();
  chi.conductor = t.conductor;
  const ConjugacyClasses& cls = t.group->classes();
  chi.values.reserve(chi.domain.members.size());
  for (Elt x : chi.domain.members) chi.values.push_back(t.rows[row][cls.class_of[x]]);
  return chi;
}

SubgroupCharacter embed_character(const EmbeddedGroup& emb, const SubgroupCharacter& inner,
                                  const Subgroup& as, int conductor) {
  SubgroupCharacter chi;
  chi.domain = as;
  chi.conductor = conductor;
  chi.values.reserve(as.members.size());
  for (Elt x : as.members)
    chi.values.push_back(inner.value_at(emb.from_parent[x]).to_conductor(conductor));
  return chi;
}

CharacterOracle::CharacterOracle(GroupPtr g, int bound) : g_(std::move(g)), bound_(bound) {}

const CharacterTable& CharacterOracle::table() {
  if (!table_) {
    if (g_->order() > bound_)
      throw BoundExceeded("group order exceeds the character oracle bound");
    table_ = character_table(g_);
  }
  return *table_;
}

const std::vector<Subgroup>& CharacterOracle::subgroup_reps() {
  if (!reps_) {
    std::vector<Subgroup> reps;
    std::set<std::vector<Elt>> seen;
    for (const Subgroup& s : g_->all_subgroups())
      if (seen.insert(canonical_conjugate_key(s)).second) reps.push_back(s);
    reps_ = std::move(reps);
  }
  return *reps_;
}

int CharacterOracle::row_index_of(const std::vector<Cyclotomic>& by_class) {
  const CharacterTable& t = table();
  for (size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i] == by_class) return static_cast<int>(i);
  return -1;
}

const std::vector<CharacterOracle::MonomialWitness>& CharacterOracle::monomial_rows() {
  if (witnesses_) return *witnesses_;
  const CharacterTable& t = table();
  const int k = static_cast<int>(t.rows.size());
  std::vector<MonomialWitness> wit(static_cast<size_t>(k));
  int remaining = k;
  std::vector<Elt> at = g_->classes().reps;
  for (const Subgroup& h : subgroup_reps()) {
    if (remaining == 0) break;
    int index = g_->order() / h.order();
    bool degree_open = false;
    for (int i = 0; i < k; ++i)
      if (!wit[i].monomial && t.degrees[i] == index) degree_open = true;
    if (!degree_open) continue;
    for (SubgroupCharacter& lambda : all_linear_characters(h, t.conductor)) {
      std::vector<Cyclotomic> induced = induce_values(lambda, g_->full_subgroup(), at);
      int row = row_index_of(induced);
      if (row < 0 || wit[row].monomial) continue;
      wit[row].monomial = true;
      wit[row].from = h;
      wit[row].inducing = std::move(lambda);
      if (--remaining == 0) break;
    }
  }
  witnesses_ = std::move(wit);
  return *witnesses_;
}

bool CharacterOracle::all_rows_monomial() {
  for (const auto& w : monomial_rows())
    if (!w.monomial) return false;
  return true;
}

CharacterOracle::Standalone& CharacterOracle::standalone(const Subgroup& s) {
  std::ostringstream key;
  for (Elt x : s.members) key << x << ",";
  auto it = standalone_.find(key.str());
  if (it != standalone_.end()) return it->second;
  Standalone data{subgroup_as_group(s), nullptr};
  data.oracle = std::make_unique<CharacterOracle>(data.emb.group, bound_);
  return standalone_.emplace(key.str(), std::move(data)).first->second;
}

void CharacterOracle::compute_supermonomial() {
  if (supermono_) return;
  const CharacterTable& t = table();
  const int k = static_cast<int>(t.rows.size());
  std::vector<char> super(static_cast<size_t>(k), 1);
  std::vector<Elt> at = g_->classes().reps;
  for (const Subgroup& u : subgroup_reps()) {
    Standalone& sd = standalone(u);
    const CharacterTable& ut = sd.oracle->table();
    const auto& umono = sd.oracle->monomial_rows();
    for (size_t i = 0; i < ut.rows.size(); ++i) {
      SubgroupCharacter psi =
          embed_character(sd.emb, character_from_row(ut, static_cast<int>(i)), u, t.conductor);
      int row = row_index_of(induce_values(psi, g_->full_subgroup(), at));
      if (row < 0) continue;
      if (!umono[i].monomial) super[row] = 0;
    }
  }
  supermono_ = std::move(super);
}

bool CharacterOracle::row_is_supermonomial(int row) {
  compute_supermonomial();
  return (*supermono_)[static_cast<size_t>(row)] != 0;
}

bool CharacterOracle::group_is_supermonomial() {
  compute_supermonomial();
  for (char c : *supermono_)
    if (!c) return false;
  return true;
}

}  // namespace wedderkit
