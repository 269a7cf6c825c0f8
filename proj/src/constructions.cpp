#include "wedderkit/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "wedderkit/characters.hpp"
#include "wedderkit/errors.hpp"
#include "wedderkit/parallel.hpp"

namespace wedderkit {

namespace {

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// generators of a as permutations: the stored action when present, the
// right-regular action otherwise (right multiplication composes left to
// right, matching perm_compose)
std::pair<int, std::vector<Permutation>> acting_generators(const GroupPtr& a) {
  std::vector<Elt> gens = small_generating_set(a);
  if (a->perm_degree() > 0) {
    std::vector<Permutation> ps;
    for (Elt g : gens) ps.push_back(a->perm_of(g));
    return {a->perm_degree(), ps};
  }
  int m = a->order();
  std::vector<Permutation> ps;
  for (Elt g : gens) {
    Permutation p(m);
    for (Elt x = 0; x < m; ++x) p[x] = a->mul(x, g);
    ps.push_back(std::move(p));
  }
  return {m, ps};
}

}  // namespace

WreathProduct wreath_by_cyclic(const GroupPtr& a, int p, int max_order) {
  if (!is_prime_int(p)) throw InvalidArgument("the acting cyclic group must have prime order");
  long long expected = p;
  for (int i = 0; i < p; ++i) {
    expected *= a->order();
    if (expected > max_order)
      throw GroupTooLarge("wreath product order exceeds bound " + std::to_string(max_order));
  }

  auto [m, gens] = acting_generators(a);
  std::vector<Permutation> wgens;
  for (const Permutation& q : gens)
    for (int b = 0; b < p; ++b) {
      Permutation w = perm_identity(m * p);
      for (int u = 0; u < m; ++u) w[b * m + u] = b * m + q[u];
      wgens.push_back(std::move(w));
    }
  Permutation rot(m * p);
  for (int b = 0; b < p; ++b)
    for (int u = 0; u < m; ++u) rot[b * m + u] = ((b + 1) % p) * m + u;
  wgens.push_back(std::move(rot));

  std::string name = a->order() == 1 ? "C" + std::to_string(p)
                                     : a->name() + "~C" + std::to_string(p);
  WreathProduct out;
  out.group = FiniteGroup::from_permutation_generators(wgens, name, max_order);
  out.block_size = m;
  out.block_count = p;
  if (out.group->order() != expected)
    throw InternalError("wreath product closed at the wrong order");

  // base subgroup: the elements preserving every block
  std::vector<Elt> base;
  for (Elt x = 0; x < out.group->order(); ++x) {
    const Permutation& q = out.group->perm_of(x);
    bool keeps = true;
    for (int pt = 0; pt < m * p && keeps; ++pt)
      if (q[pt] / m != pt / m) keeps = false;
    if (keeps) base.push_back(x);
  }
  out.base = Subgroup{out.group, std::move(base)};
  if (static_cast<long long>(out.base.order()) * p != expected)
    throw InternalError("wreath base subgroup has the wrong order");
  if (!is_normal_in(out.base, out.group->full_subgroup()))
    throw InternalError("wreath base subgroup is not normal");
  return out;
}

SeriesWithPrimeFactors composition_series_prime_factors(const GroupPtr& g) {
  if (!is_solvable(g)) throw NotSolvable("prime-factor series needs a solvable group");

  SeriesWithPrimeFactors out;
  out.group = g;
  out.terms.push_back(g->trivial_subgroup());

  std::vector<Subgroup> derived = derived_series(g);  // descending, ends trivial
  // walk the abelian segments bottom-up, splitting each into prime steps
  for (auto it = derived.rbegin(); it != derived.rend(); ++it) {
    const Subgroup& top = *it;
    Subgroup cur = out.terms.back();
    while (cur.order() < top.order()) {
      Elt x = -1;
      for (Elt e : top.members)
        if (!cur.contains(e)) {
          x = e;
          break;
        }
      int q = 1;
      Elt acc = x;
      while (!cur.contains(acc)) {
        acc = g->mul(acc, x);
        ++q;
      }
      int p = 2;
      while (q % p) ++p;
      Elt y = g->power(x, q / p);
      std::vector<Elt> gens = cur.members;
      gens.push_back(y);
      Subgroup ext = generated_subgroup(g, std::move(gens));
      if (ext.order() != cur.order() * p)
        throw InternalError("prime refinement step produced the wrong index");
      out.terms.push_back(ext);
      out.factor_primes.push_back(p);
      cur = out.terms.back();
    }
  }

  long long product = 1;
  for (size_t i = 0; i + 1 < out.terms.size(); ++i) {
    if (!is_normal_in(out.terms[i], out.terms[i + 1]))
      throw InternalError("series term is not normal in its successor");
    product *= out.factor_primes[i];
  }
  if (product != g->order() || out.terms.back().members != g->full_subgroup().members)
    throw InternalError("prime-factor series does not reach the whole group");
  return out;
}

DadeEmbedding dade_embedding(const GroupPtr& g, const SeriesWithPrimeFactors& series,
                             int max_order) {
  if (series.group != g) throw InvalidArgument("series was built for a different group");
  if (series.terms.empty() || series.terms.front().order() != 1 ||
      series.terms.back().members != g->full_subgroup().members ||
      series.terms.size() != series.factor_primes.size() + 1)
    throw InvalidArgument("malformed subnormal series");

  GroupPtr w = FiniteGroup::from_permutation_generators({perm_identity(1)}, "W0");
  std::vector<Elt> phi(static_cast<size_t>(g->order()), -1);
  phi[0] = 0;
  Subgroup cur = series.terms.front();

  for (size_t s = 0; s + 1 < series.terms.size(); ++s) {
    const Subgroup& next = series.terms[s + 1];
    int p = series.factor_primes[s];
    if (next.order() != cur.order() * p)
      throw InvalidArgument("series factor does not match its prime");

    WreathProduct wreath = wreath_by_cyclic(w, p, max_order);
    GroupPtr wn = wreath.group;
    int m = w->perm_degree();

    // transversal of cur in next along powers of the least new element;
    // right cosets cur·c^j, representatives chosen least
    Elt c = -1;
    for (Elt e : next.members)
      if (!cur.contains(e)) {
        c = e;
        break;
      }
    std::vector<Elt> cpow(static_cast<size_t>(p));
    cpow[0] = 0;
    for (int j = 1; j < p; ++j) cpow[j] = g->mul(cpow[j - 1], c);
    std::vector<Elt> t(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) {
      Elt best = -1;
      for (Elt nme : cur.members) {
        Elt e = g->mul(nme, cpow[j]);
        if (best < 0 || e < best) best = e;
      }
      t[j] = best;
    }
    auto coset_of = [&](Elt x) {
      for (int j = 0; j < p; ++j)
        if (cur.contains(g->mul(x, g->inv(cpow[j])))) return j;
      throw InternalError("element escapes the coset decomposition");
    };

    std::vector<Elt> nphi(static_cast<size_t>(g->order()), -1);
    for (Elt x : next.members) {
      int d = coset_of(x);
      Permutation q(static_cast<size_t>(m) * p);
      for (int j = 0; j < p; ++j) {
        int jd = (j + d) % p;
        Elt nj = g->mul(g->mul(t[j], x), g->inv(t[jd]));
        if (!cur.contains(nj)) throw InternalError("cocycle value left the base subgroup");
        const Permutation& pw = w->perm_of(phi[nj]);
        for (int u = 0; u < m; ++u) q[j * m + u] = jd * m + pw[u];
      }
      auto elt = wn->element_of_perm(q);
      if (!elt) throw InternalError("embedded element is not in the tower");
      nphi[x] = *elt;
    }

    // full verification at this level: homomorphism, trivial kernel
    for (Elt x : next.members)
      for (Elt y : next.members)
        if (wn->mul(nphi[x], nphi[y]) != nphi[g->mul(x, y)])
          throw InternalError("tower map is not a homomorphism");
    for (Elt x : next.members)
      if (x != 0 && nphi[x] == 0) throw InternalError("tower map has a nontrivial kernel");

    w = wn;
    cur = next;
    phi = std::move(nphi);
  }

  DadeEmbedding out;
  out.source = g;
  out.tower = w;
  out.map = std::move(phi);
  std::vector<Elt> image;
  for (Elt x = 0; x < g->order(); ++x) image.push_back(out.map[x]);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    throw InternalError("tower map is not injective");
  out.image = Subgroup{w, std::move(image)};
  return out;
}

DadeEmbedding dade_embedding(const GroupPtr& g, int max_order) {
  return dade_embedding(g, composition_series_prime_factors(g), max_order);
}

namespace {

GroupPtr perm_group(std::vector<Permutation> gens, const std::string& name) {
  return FiniteGroup::from_permutation_generators(std::move(gens), name);
}

// central product of the order-8 dihedral group with C4 over the shared
// central involution
GroupPtr pauli_group() {
  auto d4 = FiniteGroup::dihedral(8);
  auto c4 = FiniteGroup::cyclic(4);
  DirectProduct pr = direct_product(d4, c4);
  Elt zd = center(d4).members[1];
  Elt zc = -1;
  for (Elt x = 0; x < 4; ++x)
    if (c4->element_order(x) == 2) zc = x;
  Elt diag = pr.group->mul(pr.inject_a[zd], pr.inject_b[zc]);
  Subgroup n = generated_subgroup(pr.group, {diag});
  return quotient(pr.group, n).group;
}

std::vector<CatalogEntry> build_catalog() {
  auto c = [](int n) { return FiniteGroup::cyclic(n); };
  auto d = [](int order) { return FiniteGroup::dihedral(order); };
  auto dic = [](int order) { return FiniteGroup::dicyclic(order); };
  auto prod = [](const GroupPtr& a, const GroupPtr& b) { return direct_product(a, b).group; };

  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& name, GroupPtr g) { out.push_back({name, std::move(g)}); };

  add("c1", c(1));
  add("c2", c(2));
  add("c3", c(3));
  add("c4", c(4));
  add("c2x2", prod(c(2), c(2)));
  add("c5", c(5));
  add("c6", c(6));
  add("d3", d(6));
  add("c7", c(7));
  add("c8", c(8));
  add("c2x4", prod(c(2), c(4)));
  add("c2x2x2", prod(c(2), prod(c(2), c(2))));
  add("d4", d(8));
  add("q8", dic(8));
  add("c9", c(9));
  add("c3x3", prod(c(3), c(3)));
  add("c10", c(10));
  add("d5", d(10));
  add("c11", c(11));
  add("c12", c(12));
  add("c2x6", prod(c(2), c(6)));
  add("d6", d(12));
  add("a4", FiniteGroup::alternating(4));
  add("dic3", dic(12));
  add("c13", c(13));
  add("c14", c(14));
  add("d7", d(14));
  add("c15", c(15));
  add("c16", c(16));
  add("c2x8", prod(c(2), c(8)));
  add("c4x4", prod(c(4), c(4)));
  add("c2x2x4", prod(c(2), prod(c(2), c(4))));
  add("c2x2x2x2", prod(c(2), prod(c(2), prod(c(2), c(2)))));
  add("d8", d(16));
  add("q16", dic(16));
  add("sd16", FiniteGroup::semidirect_cyclic(8, 3, 2));
  add("m16", FiniteGroup::semidirect_cyclic(8, 5, 2));
  add("c2xd4", prod(c(2), d(8)));
  add("c2xq8", prod(c(2), dic(8)));
  add("c4sc4", FiniteGroup::semidirect_cyclic(4, 3, 4));
  // elementary abelian four-group with a four-cycle swapping its factors
  add("v4sc4", perm_group({{1, 0, 2, 3, 4, 5, 6, 7},
                           {0, 1, 3, 2, 4, 5, 6, 7},
                           {2, 3, 0, 1, 5, 6, 7, 4}},
                          "V4sC4"));
  add("pauli16", pauli_group());
  add("c17", c(17));
  add("c18", c(18));
  add("c3x6", prod(c(3), c(6)));
  add("d9", d(18));
  add("c3xd3", prod(c(3), d(6)));
  // both C3 factors inverted by the involution
  add("gd3x3", perm_group({{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {0, 2, 1, 3, 5, 4}},
                          "GD3x3"));
  add("c19", c(19));
  add("c20", c(20));
  add("c2x10", prod(c(2), c(10)));
  add("d10", d(20));
  add("dic5", dic(20));
  add("f20", FiniteGroup::semidirect_cyclic(5, 2, 4));
  add("c21", c(21));
  add("f21", FiniteGroup::semidirect_cyclic(7, 2, 3));
  add("c22", c(22));
  add("d11", d(22));
  add("c23", c(23));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& small_group_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::string suite_outcome_name(SuiteOutcome o) {
  switch (o) {
    case SuiteOutcome::pass: return "pass";
    case SuiteOutcome::fail: return "fail";
    case SuiteOutcome::unknown: return "unknown";
  }
  return "?";
}

namespace {

GroupPtr sl_2_3() {
  std::vector<Permutation> gens = {{2, 5, 1, 4, 7, 0, 3, 6}, {0, 1, 3, 4, 2, 7, 5, 6}};
  return FiniteGroup::from_permutation_generators(gens, "SL23");
}

struct FlagSummary {
  std::string text;
  Flag3 generalized = Flag3::unknown;
  bool exhausted = false;
};

FlagSummary classify_flags(const GroupPtr& g, const ClassifyOptions& copt) {
  CoverageReport r = classify_group(g, copt);
  FlagSummary f;
  f.generalized = r.generalized_strongly_monomial;
  f.exhausted = r.has_undetermined;
  std::ostringstream os;
  os << "monomial=" << (r.monomial ? "true" : "false")
     << " strongly_monomial=" << (r.strongly_monomial ? "true" : "false")
     << " generalized_strongly_monomial=" << flag3_name(r.generalized_strongly_monomial);
  f.text = os.str();
  return f;
}

void expect_generalized(SuiteInstance& inst, const FlagSummary& f) {
  inst.flags = inst.flags.empty() ? f.text : inst.flags + " " + f.text;
  inst.budget_status = f.exhausted ? "exhausted" : "within";
  switch (f.generalized) {
    case Flag3::yes: inst.outcome = SuiteOutcome::pass; break;
    case Flag3::unknown:
      inst.outcome = SuiteOutcome::unknown;
      inst.note = "chain budget exhausted before a verdict";
      break;
    case Flag3::no:
      inst.outcome = SuiteOutcome::fail;
      inst.note = "predicted flag came back false";
      break;
  }
}

SuiteReport run_suite(const std::string& name,
                      const std::vector<std::function<void(SuiteInstance&)>>& tasks, int jobs) {
  SuiteReport rep;
  rep.name = name;
  rep.instances.resize(tasks.size());
  run_indexed_tasks(jobs, static_cast<int>(tasks.size()), [&](int i) {
    SuiteInstance& inst = rep.instances[static_cast<size_t>(i)];
    auto start = std::chrono::steady_clock::now();
    try {
      tasks[static_cast<size_t>(i)](inst);
    } catch (const SearchBudgetExceeded& e) {
      inst.outcome = SuiteOutcome::unknown;
      inst.budget_status = "exhausted";
      inst.note = e.what();
    } catch (const GroupTooLarge& e) {
      inst.outcome = SuiteOutcome::unknown;
      inst.budget_status = "skipped";
      inst.note = e.what();
    }
    inst.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  for (const SuiteInstance& inst : rep.instances) {
    if (inst.outcome == SuiteOutcome::pass) ++rep.passed;
    else if (inst.outcome == SuiteOutcome::fail) ++rep.failed;
    else ++rep.unknown;
  }
  return rep;
}

}  // namespace

SuiteReport verify_theorem_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<std::function<void(SuiteInstance&)>> tasks;

  if (name == "theorem1") {
    std::vector<GroupPtr> groups = {FiniteGroup::symmetric(3), FiniteGroup::cyclic(6),
                                    FiniteGroup::dihedral(8), FiniteGroup::dicyclic(8)};
    for (const auto& g : groups)
      tasks.push_back([g, &opt](SuiteInstance& inst) {
        DadeEmbedding emb = dade_embedding(g, opt.embed_order_limit);
        inst.construction = "tower(" + g->name() + ")";
        inst.orders = {g->order(), emb.tower->order()};
        if (emb.tower->order() <= opt.classify_order_limit) {
          expect_generalized(inst, classify_flags(emb.tower, opt.classify));
        } else {
          inst.flags = "embedding=verified";
          inst.outcome = SuiteOutcome::pass;
          inst.budget_status = "skipped";
          inst.note = "tower order " + std::to_string(emb.tower->order()) +
                      " exceeds the classification limit";
        }
      });
  } else if (name == "proposition1") {
    std::vector<std::pair<GroupPtr, int>> inputs = {{FiniteGroup::cyclic(2), 2},
                                                    {FiniteGroup::cyclic(3), 2},
                                                    {FiniteGroup::symmetric(3), 2}};
    for (const auto& [a, p] : inputs)
      tasks.push_back([a, p = p, &opt](SuiteInstance& inst) {
        WreathProduct w = wreath_by_cyclic(a, p);
        inst.construction = w.group->name();
        inst.orders = {a->order(), w.group->order()};
        expect_generalized(inst, classify_flags(w.group, opt.classify));
      });
  } else if (name == "lemma2") {
    std::vector<std::pair<GroupPtr, GroupPtr>> inputs = {
        {FiniteGroup::symmetric(3), FiniteGroup::cyclic(4)},
        {FiniteGroup::dihedral(8), FiniteGroup::cyclic(3)}};
    for (const auto& [a, b] : inputs)
      tasks.push_back([a, b, &opt](SuiteInstance& inst) {
        DirectProduct pr = direct_product(a, b);
        inst.construction = a->name() + "x" + b->name();
        inst.orders = {a->order(), b->order(), pr.group->order()};
        FlagSummary fa = classify_flags(a, opt.classify);
        FlagSummary fb = classify_flags(b, opt.classify);
        if (fa.generalized != Flag3::yes || fb.generalized != Flag3::yes) {
          inst.outcome = SuiteOutcome::unknown;
          inst.budget_status = "within";
          inst.note = "a factor did not certify, premise unavailable";
          return;
        }
        expect_generalized(inst, classify_flags(pr.group, opt.classify));
      });
  } else if (name == "theorem3_sample") {
    std::vector<GroupPtr> groups;
    for (const CatalogEntry& entry : small_group_catalog()) groups.push_back(entry.group);
    groups.push_back(FiniteGroup::symmetric(4));
    groups.push_back(sl_2_3());
    groups.push_back(direct_product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(4)).group);
    groups.push_back(direct_product(FiniteGroup::dihedral(8), FiniteGroup::cyclic(3)).group);
    for (const auto& g : groups)
      tasks.push_back([g, &opt](SuiteInstance& inst) {
        inst.construction = g->name();
        inst.orders = {g->order()};
        CharacterOracle oracle(g);
        if (!oracle.group_is_supermonomial()) {
          inst.flags = "supermonomial=false";
          inst.outcome = SuiteOutcome::pass;
          inst.budget_status = "skipped";
          inst.note = "premise fails, nothing to check";
          return;
        }
        inst.flags = "supermonomial=true";
        expect_generalized(inst, classify_flags(g, opt.classify));
      });
  } else {
    throw InvalidArgument("unknown suite: " + name);
  }

  return run_suite(name, tasks, opt.classify.jobs);
}

}  // namespace wedderkit
