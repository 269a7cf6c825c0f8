#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wedderkit/group.hpp"

namespace wedderkit {

namespace {

std::vector<Elt> close_members(const FiniteGroup& g, const std::vector<Elt>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elt> members;
  auto add = [&](Elt x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (Elt s : seed) add(s);
  for (size_t qi = 0; qi < members.size(); ++qi) {
    Elt x = members[qi];
    size_t cur = members.size();
    for (size_t mi = 0; mi < cur; ++mi) {
      Elt y = members[mi];
      add(g.mul(x, y));
      add(g.mul(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup make_subgroup(const GroupPtr& parent, std::vector<Elt> members) {
  Subgroup s;
  s.parent = parent;
  s.members = std::move(members);
  return s;
}

}  // namespace

Subgroup generated_subgroup(const GroupPtr& g, std::vector<Elt> gens) {
  for (Elt x : gens)
    if (x < 0 || x >= g->order()) throw InvalidArgument("generator index out of range");
  return make_subgroup(g, close_members(*g, gens));
}

Subgroup conjugate_subgroup(const Subgroup& s, Elt g) {
  std::vector<Elt> m;
  m.reserve(s.members.size());
  for (Elt x : s.members) m.push_back(s.parent->conj(x, g));
  std::sort(m.begin(), m.end());
  return make_subgroup(s.parent, std::move(m));
}

bool is_subset(const Subgroup& inner, const Subgroup& outer) {
  return std::includes(outer.members.begin(), outer.members.end(), inner.members.begin(),
                       inner.members.end());
}

bool is_normal_in(const Subgroup& k, const Subgroup& u) {
  const auto& g = *k.parent;
  for (Elt h : u.members)
    for (Elt x : k.members)
      if (!k.contains(g.conj(x, h))) return false;
  return true;
}

Subgroup normalizer(const Subgroup& of, const Subgroup& in) {
  const auto& g = *of.parent;
  std::vector<Elt> m;
  for (Elt u : in.members) {
    bool ok = true;
    for (Elt x : of.members) {
      if (!of.contains(g.conj(x, u))) {
        ok = false;
        break;
      }
    }
    if (ok) m.push_back(u);
  }
  return make_subgroup(of.parent, std::move(m));
}

Subgroup centralizer_of_element(const GroupPtr& g, Elt x) {
  std::vector<Elt> m;
  for (Elt u = 0; u < g->order(); ++u)
    if (g->mul(u, x) == g->mul(x, u)) m.push_back(u);
  return make_subgroup(g, std::move(m));
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elt> m;
  for (Elt u = 0; u < g->order(); ++u) {
    bool central = true;
    for (Elt x = 0; x < g->order(); ++x)
      if (g->mul(u, x) != g->mul(x, u)) {
        central = false;
        break;
      }
    if (central) m.push_back(u);
  }
  return make_subgroup(g, std::move(m));
}

Subgroup derived_subgroup(const Subgroup& u) {
  const auto& g = *u.parent;
  std::set<Elt> comms;
  for (Elt a : u.members)
    for (Elt b : u.members) comms.insert(g.commutator(a, b));
  return make_subgroup(u.parent, close_members(g, std::vector<Elt>(comms.begin(), comms.end())));
}

std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{g->full_subgroup()};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next.members == series.back().members) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const GroupPtr& g) { return derived_series(g).back().order() == 1; }

bool subgroup_is_cyclic(const Subgroup& s) {
  for (Elt x : s.members)
    if (s.parent->element_order(x) == s.order()) return true;
  return false;
}

Elt cyclic_generator(const Subgroup& s) {
  for (Elt x : s.members)
    if (s.parent->element_order(x) == s.order()) return x;
  throw InvalidArgument("subgroup is not cyclic");
}

std::vector<Elt> relative_commutator_set(const Subgroup& h, Elt g) {
  const auto& grp = *h.parent;
  std::set<Elt> out;
  for (Elt x : h.members) out.insert(grp.commutator(x, g));
  return std::vector<Elt>(out.begin(), out.end());
}

Subgroup relative_commutator(const Subgroup& h, Elt g) {
  return make_subgroup(h.parent, close_members(*h.parent, relative_commutator_set(h, g)));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elt> m;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(m));
  return make_subgroup(a.parent, std::move(m));
}

std::vector<Elt> canonical_conjugate_key(const Subgroup& s) {
  const auto& g = *s.parent;
  std::vector<Elt> best;
  for (Elt x = 0; x < g.order(); ++x) {
    std::vector<Elt> m;
    m.reserve(s.members.size());
    for (Elt h : s.members) m.push_back(g.conj(h, x));
    std::sort(m.begin(), m.end());
    if (best.empty() || m < best) best = std::move(m);
  }
  return best;
}

Quotient quotient_of_subgroup(const Subgroup& u, const Subgroup& k) {
  if (!is_subset(k, u)) throw InvalidArgument("quotient needs the kernel inside the subgroup");
  if (!is_normal_in(k, u)) throw NotNormal("kernel is not normal in the subgroup");
  const auto& g = *u.parent;
  Quotient q;
  q.projection.assign(g.order(), -1);
  // ascending scan assigns each coset the least representative first
  for (Elt m : u.members) {
    if (q.projection[m] >= 0) continue;
    Elt c = static_cast<Elt>(q.section.size());
    q.section.push_back(m);
    for (Elt x : k.members) q.projection[g.mul(m, x)] = c;
  }
  int qn = static_cast<int>(q.section.size());
  std::vector<Elt> table(static_cast<size_t>(qn) * qn);
  for (Elt c1 = 0; c1 < qn; ++c1)
    for (Elt c2 = 0; c2 < qn; ++c2)
      table[static_cast<size_t>(c1) * qn + c2] = q.projection[g.mul(q.section[c1], q.section[c2])];
  std::vector<std::string> labels(qn);
  for (Elt c = 0; c < qn; ++c) labels[c] = "[" + g.label(q.section[c]) + "]";
  std::string name = g.name() + "/N" + std::to_string(k.order());
  q.group = FiniteGroup::from_mul_table(std::move(table), std::move(labels), std::move(name), false);
  return q;
}

Quotient quotient(const GroupPtr& g, const Subgroup& k) {
  return quotient_of_subgroup(g->full_subgroup(), k);
}

std::vector<Subgroup> minimal_normal_over(const Subgroup& u, const Subgroup& k) {
  // minimal normal subgroups of u/k, lifted back through the projection
  Quotient q = quotient_of_subgroup(u, k);
  const auto& qg = *q.group;
  std::set<std::vector<Elt>> closures;
  for (Elt x = 1; x < qg.order(); ++x) {
    // normal closure of x in the quotient
    std::vector<Elt> orbit;
    for (Elt g = 0; g < qg.order(); ++g) orbit.push_back(qg.conj(x, g));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    closures.insert(close_members(qg, orbit));
  }
  std::vector<std::vector<Elt>> minimal;
  for (const auto& c : closures) {
    bool is_min = true;
    for (const auto& other : closures) {
      if (other.size() < c.size() &&
          std::includes(c.begin(), c.end(), other.begin(), other.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  std::vector<Subgroup> out;
  for (const auto& qmembers : minimal) {
    std::vector<Elt> lifted;
    for (Elt m : u.members)
      if (std::binary_search(qmembers.begin(), qmembers.end(), q.projection[m]))
        lifted.push_back(m);
    out.push_back(make_subgroup(u.parent, std::move(lifted)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EmbeddedGroup subgroup_as_group(const Subgroup& s) {
  const auto& g = *s.parent;
  EmbeddedGroup e;
  e.to_parent = s.members;
  e.from_parent.assign(g.order(), -1);
  for (size_t i = 0; i < s.members.size(); ++i)
    e.from_parent[s.members[i]] = static_cast<Elt>(i);
  int n = s.order();
  std::vector<Elt> table(static_cast<size_t>(n) * n);
  for (Elt i = 0; i < n; ++i)
    for (Elt j = 0; j < n; ++j) {
      Elt prod = g.mul(s.members[i], s.members[j]);
      Elt pi = e.from_parent[prod];
      if (pi < 0) throw InvalidArgument("member list is not closed under products");
      table[static_cast<size_t>(i) * n + j] = pi;
    }
  std::vector<std::string> labels(n);
  for (Elt i = 0; i < n; ++i) labels[i] = g.label(s.members[i]);
  std::string name = g.name() + ".sub" + std::to_string(n);
  e.group = FiniteGroup::from_mul_table(std::move(table), std::move(labels), std::move(name), false);
  return e;
}

std::vector<Elt> small_generating_set(const GroupPtr& g) {
  std::vector<Elt> gens;
  std::vector<Elt> current{0};
  while (static_cast<int>(current.size()) < g->order()) {
    Elt pick = -1;
    for (Elt x = 0; x < g->order(); ++x) {
      if (!std::binary_search(current.begin(), current.end(), x)) {
        pick = x;
        break;
      }
    }
    gens.push_back(pick);
    current = close_members(*g, gens);
  }
  if (gens.empty()) gens.push_back(0);
  return gens;
}

namespace {

std::vector<int> sorted_element_orders(const FiniteGroup& g) {
  std::vector<int> v(g.order());
  for (Elt x = 0; x < g.order(); ++x) v[x] = g.element_order(x);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> sorted_class_sizes(const FiniteGroup& g) {
  std::vector<int> v;
  for (const auto& c : g.classes().classes) v.push_back(static_cast<int>(c.size()));
  std::sort(v.begin(), v.end());
  return v;
}

// attempt to extend generator images to a full embedding by walking the
// Cayley graph; every edge is checked, so a conflict-free total map is a
// homomorphism on the generated subgroup
bool consistent_extension(const FiniteGroup& a, const FiniteGroup& b,
                          const std::vector<Elt>& gens, const std::vector<Elt>& images,
                          size_t assigned, bool require_onto) {
  std::vector<Elt> map(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  std::vector<Elt> work{0};
  map[0] = 0;
  used[0] = 1;
  for (size_t qi = 0; qi < work.size(); ++qi) {
    Elt x = work[qi];
    for (size_t j = 0; j < assigned; ++j) {
      Elt xa = a.mul(x, gens[j]);
      Elt xb = b.mul(map[x], images[j]);
      if (map[xa] < 0) {
        if (used[xb]) return false;  // not injective
        map[xa] = xb;
        used[xb] = 1;
        work.push_back(xa);
      } else if (map[xa] != xb) {
        return false;
      }
    }
  }
  if (require_onto && static_cast<int>(work.size()) != a.order()) return false;
  return true;
}

bool search_images(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Elt>& gens,
                   std::vector<Elt>& images, size_t depth, std::vector<Elt>* result) {
  if (depth == gens.size()) {
    if (!consistent_extension(a, b, gens, images, depth, true)) return false;
    if (result) {
      std::vector<Elt> map(a.order(), -1);
      std::vector<Elt> work{0};
      map[0] = 0;
      for (size_t qi = 0; qi < work.size(); ++qi) {
        Elt x = work[qi];
        for (size_t j = 0; j < gens.size(); ++j) {
          Elt xa = a.mul(x, gens[j]);
          if (map[xa] < 0) {
            map[xa] = b.mul(map[x], images[j]);
            work.push_back(xa);
          }
        }
      }
      *result = std::move(map);
    }
    return true;
  }
  int want = a.element_order(gens[depth]);
  for (Elt y = 0; y < b.order(); ++y) {
    if (b.element_order(y) != want) continue;
    images[depth] = y;
    if (!consistent_extension(a, b, gens, images, depth + 1, false)) continue;
    if (search_images(a, b, gens, images, depth + 1, result)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elt>> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  if (a->is_abelian() != b->is_abelian()) return std::nullopt;
  if (a->exponent() != b->exponent()) return std::nullopt;
  if (sorted_element_orders(*a) != sorted_element_orders(*b)) return std::nullopt;
  if (sorted_class_sizes(*a) != sorted_class_sizes(*b)) return std::nullopt;
  if (center(a).order() != center(b).order()) return std::nullopt;
  if (derived_subgroup(a->full_subgroup()).order() != derived_subgroup(b->full_subgroup()).order())
    return std::nullopt;
  std::vector<Elt> gens = small_generating_set(a);
  std::vector<Elt> images(gens.size(), -1);
  std::vector<Elt> result;
  if (search_images(*a, *b, gens, images, 0, &result)) return result;
  return std::nullopt;
}

bool is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace wedderkit
