#include "wedderkit/shoda.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wedderkit/errors.hpp"
#include "wedderkit/parallel.hpp"

namespace wedderkit {

std::string pair_level_name(PairLevel level) {
  switch (level) {
    case PairLevel::not_shoda: return "not_shoda";
    case PairLevel::shoda: return "shoda";
    case PairLevel::generalized_strong_shoda: return "generalized_strong_shoda";
    case PairLevel::strong_shoda: return "strong_shoda";
  }
  return "?";
}

std::string flag3_name(Flag3 f) {
  switch (f) {
    case Flag3::no: return "false";
    case Flag3::yes: return "true";
    case Flag3::unknown: return "unknown";
  }
  return "?";
}

namespace {

bool quotient_is_cyclic(const Subgroup& h, const Subgroup& k) {
  Quotient q = quotient_of_subgroup(h, k);
  for (Elt x = 0; x < q.group->order(); ++x)
    if (q.group->element_order(x) == q.group->order()) return true;
  return false;
}

}  // namespace

bool is_shoda_pair(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
  if (!is_subset(k, h) || !is_normal_in(k, h)) return false;
  if (!quotient_is_cyclic(h, k)) return false;
  // the membership test must use the plain commutator set, not the subgroup
  // it generates: the latter admits pairs whose induced character splits
  for (Elt x = 0; x < g->order(); ++x) {
    if (h.contains(x)) continue;
    bool inside = true;
    for (Elt c : relative_commutator_set(h, x)) {
      if (h.contains(c) && !k.contains(c)) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

bool is_strong_shoda_pair(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
  if (!is_shoda_pair(g, h, k)) return false;
  Subgroup n = normalizer(k, g->full_subgroup());
  if (!is_subset(h, n) || !is_normal_in(h, n)) return false;
  RationalElement eps = epsilon_idempotent(h, k);
  for (Elt x = 0; x < g->order(); ++x) {
    if (n.contains(x)) continue;
    if (!(eps * eps.conjugate_by(x)).is_zero()) return false;
  }
  return true;
}

namespace {

// distinct conjugates of e under members of u, keyed canonically
std::vector<RationalElement> distinct_conjugates(const RationalElement& e, const Subgroup& u) {
  std::map<std::string, RationalElement> seen;
  for (Elt x : u.members) {
    RationalElement c = e.conjugate_by(x);
    std::string key = element_key(c);
    seen.emplace(std::move(key), std::move(c));
  }
  std::vector<RationalElement> out;
  out.reserve(seen.size());
  for (auto& [key, val] : seen) out.push_back(std::move(val));
  return out;
}

bool pairwise_orthogonal(const std::vector<RationalElement>& es) {
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (!are_orthogonal(es[i], es[j])) return false;
  return true;
}

// conditions for one chain step from t (with idempotent e_t) up to u
std::optional<ChainStep> check_step(const Subgroup& t, const RationalElement& e_t,
                                    const Subgroup& u) {
  ChainStep step;
  step.centralizer = centralizing_subgroup(e_t, u);
  if (!is_subset(t, step.centralizer)) return std::nullopt;
  if (!is_normal_in(t, step.centralizer)) return std::nullopt;
  step.conjugates = distinct_conjugates(e_t, u);
  if (!pairwise_orthogonal(step.conjugates)) return std::nullopt;
  return step;
}

struct ChainSearch {
  const GroupPtr& g;
  const SubgroupCharacter& lambda;
  long long budget;
  // induced idempotent per intermediate subgroup, fixed source character
  std::map<std::vector<Elt>, std::pair<RationalElement, std::string>> idem;
  // chain-from-state result per (top, current, idempotent key);
  // only states whose subtree was fully explored are stored
  std::map<std::string, std::optional<ChainCertificate>> memo;

  const std::pair<RationalElement, std::string>& idempotent_at(const Subgroup& t) {
    auto it = idem.find(t.members);
    if (it != idem.end()) return it->second;
    SubgroupCharacter ind = induce(lambda, t);
    RationalElement e = eQ_of_char(ind);
    std::string key = element_key(e);
    return idem.emplace(t.members, std::make_pair(std::move(e), std::move(key))).first->second;
  }

  void spend() {
    if (--budget < 0) throw SearchBudgetExceeded("chain search budget exhausted");
  }

  static std::string state_key(const Subgroup& top, const Subgroup& t, const std::string& ekey) {
    std::ostringstream os;
    for (Elt x : top.members) os << x << ",";
    os << "/";
    for (Elt x : t.members) os << x << ",";
    os << "/" << ekey;
    return os.str();
  }

  // depth-first chain search from t up to top; nullopt only after the whole
  // subtree is exhausted
  std::optional<ChainCertificate> search(const Subgroup& t, const Subgroup& top) {
    if (t.members == top.members) {
      ChainCertificate cert;
      cert.chain = {t};
      return cert;
    }
    const auto& [e_t, e_key] = idempotent_at(t);
    std::string key = state_key(top, t, e_key);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    // candidates: supersets of t inside top, centralizer members first,
    // then by order, then by members
    Subgroup cen_top = centralizing_subgroup(e_t, top);
    std::vector<const Subgroup*> candidates;
    for (const Subgroup& u : g->all_subgroups()) {
      if (u.order() <= t.order()) continue;
      if (!is_subset(t, u) || !is_subset(u, top)) continue;
      candidates.push_back(&u);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Subgroup* a, const Subgroup* b) {
                       bool ca = is_subset(*a, cen_top), cb = is_subset(*b, cen_top);
                       if (ca != cb) return ca;
                       if (a->order() != b->order()) return a->order() < b->order();
                       return a->members < b->members;
                     });

    for (const Subgroup* u : candidates) {
      spend();
      std::optional<ChainStep> step = check_step(t, e_t, *u);
      if (!step) continue;
      std::optional<ChainCertificate> rest = search(*u, top);
      if (!rest) continue;
      ChainCertificate cert;
      cert.chain.push_back(t);
      cert.chain.insert(cert.chain.end(), rest->chain.begin(), rest->chain.end());
      cert.steps.push_back(std::move(*step));
      cert.steps.insert(cert.steps.end(), rest->steps.begin(), rest->steps.end());
      memo.emplace(std::move(key), cert);
      return cert;
    }
    memo.emplace(std::move(key), std::nullopt);
    return std::nullopt;
  }
};

}  // namespace

bool validate_chain(const GroupPtr& g, const Subgroup& h, const SubgroupCharacter& lambda,
                    const ChainCertificate& cert) {
  if (cert.chain.empty()) return false;
  if (cert.chain.front().members != h.members) return false;
  if (cert.chain.back().members != g->full_subgroup().members) return false;
  if (cert.steps.size() + 1 != cert.chain.size()) return false;
  for (size_t i = 0; i + 1 < cert.chain.size(); ++i) {
    const Subgroup& t = cert.chain[i];
    const Subgroup& u = cert.chain[i + 1];
    if (t.order() >= u.order() || !is_subset(t, u)) return false;
    RationalElement e_t = eQ_of_char(induce(lambda, t));
    std::optional<ChainStep> step = check_step(t, e_t, u);
    if (!step) return false;
    // stored evidence must match the recomputation
    if (step->centralizer.members != cert.steps[i].centralizer.members) return false;
    if (step->conjugates.size() != cert.steps[i].conjugates.size()) return false;
    for (size_t c = 0; c < step->conjugates.size(); ++c)
      if (!(step->conjugates[c] == cert.steps[i].conjugates[c])) return false;
  }
  return true;
}

std::optional<ChainCertificate> find_strong_inductive_chain(const GroupPtr& g, const Subgroup& h,
                                                            const Subgroup& k,
                                                            const SubgroupCharacter& lambda,
                                                            const ChainSearchOptions& opt) {
  if (!is_shoda_pair(g, h, k)) return std::nullopt;
  ChainSearch srch{g, lambda, opt.budget, {}, {}};
  Subgroup whole = g->full_subgroup();

  auto finish = [&](ChainCertificate cert) -> std::optional<ChainCertificate> {
    if (!validate_chain(g, h, lambda, cert))
      throw InternalError("found chain failed revalidation");
    return cert;
  };

  if (h.members == whole.members) {
    ChainCertificate cert;
    cert.chain = {h};
    return finish(std::move(cert));
  }

  // one-step chain: always what a strong pair certifies with
  {
    srch.spend();
    const auto& [e_h, ekey] = srch.idempotent_at(h);
    (void)ekey;
    std::optional<ChainStep> step = check_step(h, e_h, whole);
    if (step) {
      ChainCertificate cert;
      cert.chain = {h, whole};
      cert.steps.push_back(std::move(*step));
      return finish(std::move(cert));
    }
  }

  // chains through a proper normal subgroup containing h; the final step to
  // the whole group then only needs the conjugate orthogonality check
  for (const Subgroup& n : g->all_subgroups()) {
    if (n.order() <= h.order() || n.order() == g->order()) continue;
    if (!is_subset(h, n) || !is_normal_in(n, whole)) continue;
    std::optional<ChainCertificate> inner = srch.search(h, n);
    if (!inner) continue;
    srch.spend();
    const auto& [e_n, ekey] = srch.idempotent_at(n);
    (void)ekey;
    std::optional<ChainStep> last = check_step(n, e_n, whole);
    if (!last) continue;
    ChainCertificate cert = std::move(*inner);
    cert.chain.push_back(whole);
    cert.steps.push_back(std::move(*last));
    return finish(std::move(cert));
  }

  // full search
  std::optional<ChainCertificate> found = srch.search(h, whole);
  if (!found) return std::nullopt;
  return finish(std::move(*found));
}

Rational rational_multiple(const GroupPtr& g, const Subgroup& h, const Subgroup& k,
                           const SubgroupCharacter& lambda) {
  RationalElement eq = eQ_of_char(induce(lambda, g->full_subgroup()));
  RationalElement egh = e_idempotent(g, h, k);
  if (egh.is_zero()) throw InconsistentMultiple("conjugate sum vanishes");
  const auto& [x0, c0] = egh.terms().front();
  Rational q = eq.coeff(x0) / c0;
  if (!(egh.scaled(q) == eq))
    throw InconsistentMultiple("induced idempotent is not a multiple of the conjugate sum");
  return q;
}

PairVerdict pair_verdict(const GroupPtr& g, const Subgroup& h, const Subgroup& k,
                         const ChainSearchOptions& opt) {
  PairVerdict v;
  v.h = h;
  v.k = k;
  auto lambdas = linear_characters_with_kernel(h, k, g->exponent());
  if (lambdas.empty()) {
    v.level = PairLevel::not_shoda;
    return v;
  }
  const SubgroupCharacter& lambda = lambdas.front();
  v.idempotent = eQ_of_char(induce(lambda, g->full_subgroup()));

  if (!is_shoda_pair(g, h, k)) {
    v.level = PairLevel::not_shoda;
    return v;
  }
  v.multiple = rational_multiple(g, h, k, lambda);
  if (!is_idempotent(*v.idempotent) || !is_central(*v.idempotent))
    throw InternalError("pair idempotent is not a central idempotent");

  if (is_strong_shoda_pair(g, h, k)) {
    // the one-step chain always certifies a strong pair, no search needed
    v.level = PairLevel::strong_shoda;
    ChainCertificate cert;
    Subgroup whole = g->full_subgroup();
    if (h.members == whole.members) {
      cert.chain = {h};
    } else {
      RationalElement e_h = eQ_of_char(lambda);
      std::optional<ChainStep> step = check_step(h, e_h, whole);
      if (!step) throw InternalError("strong pair did not certify with the one-step chain");
      cert.chain = {h, whole};
      cert.steps.push_back(std::move(*step));
    }
    if (!validate_chain(g, h, lambda, cert))
      throw InternalError("strong pair one-step chain failed revalidation");
    v.chain = std::move(cert);
    return v;
  }
  try {
    v.chain = find_strong_inductive_chain(g, h, k, lambda, opt);
    v.level = v.chain ? PairLevel::generalized_strong_shoda : PairLevel::shoda;
  } catch (const SearchBudgetExceeded&) {
    v.level = PairLevel::shoda;
    v.chain_search_exhausted = true;
  }
  return v;
}

namespace {

// least conjugate of (H, K) as one joint key
std::pair<std::vector<Elt>, std::vector<Elt>> canonical_pair_key(const GroupPtr& g,
                                                                 const Subgroup& h,
                                                                 const Subgroup& k) {
  std::pair<std::vector<Elt>, std::vector<Elt>> best;
  bool first = true;
  for (Elt x = 0; x < g->order(); ++x) {
    std::pair<std::vector<Elt>, std::vector<Elt>> cur{conjugate_subgroup(h, x).members,
                                                      conjugate_subgroup(k, x).members};
    if (first || cur < best) {
      best = std::move(cur);
      first = false;
    }
  }
  return best;
}

}  // namespace

CoverageReport classify_group(const GroupPtr& g, const ClassifyOptions& opt) {
  if (g->order() > opt.max_order)
    throw GroupTooLarge("group order exceeds the classification bound");

  // pair classes: H over all subgroups, K normal in H with cyclic quotient,
  // deduplicated by joint conjugacy
  std::vector<std::pair<Subgroup, Subgroup>> pairs;
  std::set<std::pair<std::vector<Elt>, std::vector<Elt>>> seen;
  for (const Subgroup& h : g->all_subgroups()) {
    for (const Subgroup& k : subgroups_of(h)) {
      if (!is_normal_in(k, h) || !quotient_is_cyclic(h, k)) continue;
      if (seen.insert(canonical_pair_key(g, h, k)).second) pairs.emplace_back(h, k);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.first.order() != b.first.order()) return a.first.order() < b.first.order();
    if (a.first.members != b.first.members) return a.first.members < b.first.members;
    if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
    return a.second.members < b.second.members;
  });

  CoverageReport report;
  report.group = g;
  report.verdicts.resize(pairs.size());
  ChainSearchOptions copt{opt.chain_budget};
  run_indexed_tasks(opt.jobs, static_cast<int>(pairs.size()), [&](int i) {
    report.verdicts[static_cast<size_t>(i)] =
        pair_verdict(g, pairs[static_cast<size_t>(i)].first, pairs[static_cast<size_t>(i)].second,
                     copt);
  });

  // pool distinct idempotents over all levels, canonically ordered
  std::map<std::string, int> pool_index;
  for (const PairVerdict& v : report.verdicts) {
    if (v.level == PairLevel::not_shoda) continue;
    pool_index.emplace(element_key(*v.idempotent), 0);
  }
  {
    int next = 0;
    for (auto& [key, idx] : pool_index) idx = next++;
  }
  report.distinct_idempotents.resize(pool_index.size(), rational_element(g));
  for (const PairVerdict& v : report.verdicts) {
    if (v.level == PairLevel::not_shoda) continue;
    report.distinct_idempotents[static_cast<size_t>(pool_index.at(element_key(*v.idempotent)))] =
        *v.idempotent;
  }
  for (const RationalElement& e : report.distinct_idempotents)
    report.ideal_dimensions.push_back(ideal_dimension(e));

  auto build_level = [&](PairLevel floor) {
    LevelSet set;
    set.level = floor;
    std::set<int> idems;
    for (size_t i = 0; i < report.verdicts.size(); ++i) {
      const PairVerdict& v = report.verdicts[i];
      bool in;
      if (floor == PairLevel::shoda) in = v.level != PairLevel::not_shoda;
      else if (floor == PairLevel::generalized_strong_shoda)
        in = v.level == PairLevel::generalized_strong_shoda || v.level == PairLevel::strong_shoda;
      else in = v.level == PairLevel::strong_shoda;
      if (!in) continue;
      set.pair_indices.push_back(static_cast<int>(i));
      idems.insert(pool_index.at(element_key(*v.idempotent)));
    }
    set.idempotent_indices.assign(idems.begin(), idems.end());
    RationalElement sum = rational_element(g);
    for (int idx : set.idempotent_indices)
      sum = sum + report.distinct_idempotents[static_cast<size_t>(idx)];
    set.sum_is_one = sum == algebra_unit(g);
    return set;
  };
  report.shoda_set = build_level(PairLevel::shoda);
  report.generalized_set = build_level(PairLevel::generalized_strong_shoda);
  report.strong_set = build_level(PairLevel::strong_shoda);

  // distinct idempotents at the outermost level must be pairwise orthogonal
  {
    std::vector<RationalElement> all;
    for (int idx : report.shoda_set.idempotent_indices)
      all.push_back(report.distinct_idempotents[static_cast<size_t>(idx)]);
    if (!pairwise_orthogonal(all))
      throw InternalError("distinct pair idempotents are not pairwise orthogonal");
  }

  report.monomial = report.shoda_set.sum_is_one;
  report.strongly_monomial = report.strong_set.sum_is_one;
  for (const PairVerdict& v : report.verdicts)
    if (v.chain_search_exhausted) report.has_undetermined = true;

  if (report.generalized_set.sum_is_one) {
    report.generalized_strongly_monomial = Flag3::yes;
  } else {
    // an exhausted pair whose idempotent is not already certified could
    // still complete the sum, so the verdict stays open
    std::set<int> covered(report.generalized_set.idempotent_indices.begin(),
                          report.generalized_set.idempotent_indices.end());
    bool open = false;
    for (const PairVerdict& v : report.verdicts) {
      if (!v.chain_search_exhausted) continue;
      int idx = pool_index.at(element_key(*v.idempotent));
      if (!covered.count(idx)) open = true;
    }
    report.generalized_strongly_monomial = open ? Flag3::unknown : Flag3::no;
  }

  for (int idx : report.shoda_set.idempotent_indices)
    report.covered_dimension += report.ideal_dimensions[static_cast<size_t>(idx)];
  report.uncovered_dimension = g->order() - report.covered_dimension;
  return report;
}

CrossValidation cross_validate(const GroupPtr& g, const ClassifyOptions& opt) {
  CoverageReport report = classify_group(g, opt);
  CharacterOracle oracle(g);
  const CharacterTable& t = oracle.table();

  CrossValidation cv;
  cv.class_count = static_cast<int>(g->classes().classes.size());
  cv.row_count = static_cast<int>(t.rows.size());
  if (cv.class_count != cv.row_count)
    throw OracleMismatch("class count differs from character row count");

  cv.monomial_flag = report.monomial;
  cv.all_rows_monomial = oracle.all_rows_monomial();
  if (cv.monomial_flag != cv.all_rows_monomial)
    throw OracleMismatch("monomial flag disagrees with the table sweep");

  std::set<std::string> pair_side;
  for (int idx : report.shoda_set.idempotent_indices)
    pair_side.insert(element_key(report.distinct_idempotents[static_cast<size_t>(idx)]));
  std::set<std::string> char_side;
  const auto& wits = oracle.monomial_rows();
  for (size_t i = 0; i < wits.size(); ++i) {
    if (!wits[i].monomial) continue;
    char_side.insert(element_key(eQ_of_char(character_from_row(t, static_cast<int>(i)))));
  }
  cv.pair_side_idempotents = static_cast<int>(pair_side.size());
  cv.character_side_idempotents = static_cast<int>(char_side.size());
  if (pair_side != char_side)
    throw OracleMismatch("pair idempotents differ from monomial-row idempotents");
  return cv;
}

}  // namespace wedderkit
