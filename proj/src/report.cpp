#include "report.hpp"

#include <map>
#include <sstream>

#include "wedderkit/characters.hpp"
#include "wedderkit/errors.hpp"

namespace wedderkit {

namespace {

Json group_header(const GroupPtr& g) {
  Json j;
  j["name"] = g->name();
  j["order"] = g->order();
  return j;
}

Json chain_json(const ChainCertificate& cert) {
  Json j;
  j["subgroups"] = Json::array();
  for (const Subgroup& s : cert.chain) j["subgroups"].push_back(subgroup_json(s));
  j["steps"] = Json::array();
  for (const ChainStep& st : cert.steps) {
    Json step;
    step["centralizer"] = subgroup_json(st.centralizer);
    step["conjugates"] = st.conjugates.size();
    j["steps"].push_back(std::move(step));
  }
  return j;
}

Json verdict_json(const PairVerdict& v, const std::map<std::string, int>* pool_index) {
  Json j;
  j["h"] = subgroup_json(v.h);
  j["k"] = subgroup_json(v.k);
  j["level"] = pair_level_name(v.level);
  if (v.multiple) j["multiple"] = rational_to_string(*v.multiple);
  if (v.idempotent) {
    bool inlined = true;
    if (pool_index) {
      auto it = pool_index->find(element_key(*v.idempotent));
      if (it != pool_index->end()) {
        j["idempotent_index"] = it->second;
        inlined = false;
      }
    }
    if (inlined) j["idempotent"] = element_json(*v.idempotent);
  }
  if (v.chain) j["chain"] = chain_json(*v.chain);
  j["chain_search_exhausted"] = v.chain_search_exhausted;
  return j;
}

Json level_json(const LevelSet& set) {
  Json j;
  j["level"] = pair_level_name(set.level);
  j["pairs"] = set.pair_indices;
  j["idempotents"] = set.idempotent_indices;
  j["sum_is_one"] = set.sum_is_one;
  return j;
}

Json flags_json(const CoverageReport& r) {
  Json j;
  j["monomial"] = r.monomial;
  j["strongly_monomial"] = r.strongly_monomial;
  j["generalized_strongly_monomial"] = flag3_name(r.generalized_strongly_monomial);
  return j;
}

}  // namespace

Json subgroup_json(const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["members"] = s.members;
  return j;
}

Json element_json(const RationalElement& e) {
  Json j;
  j["terms"] = Json::array();
  for (const auto& [x, c] : e.terms()) j["terms"].push_back({x, rational_to_string(c)});
  j["display"] = e.to_string();
  return j;
}

Json coverage_json(const CoverageReport& r) {
  std::map<std::string, int> pool_index;
  for (size_t i = 0; i < r.distinct_idempotents.size(); ++i)
    pool_index[element_key(r.distinct_idempotents[i])] = static_cast<int>(i);

  Json j;
  j["report"] = "classify";
  j["group"] = group_header(r.group);
  j["flags"] = flags_json(r);
  j["pairs"] = Json::array();
  for (const PairVerdict& v : r.verdicts) j["pairs"].push_back(verdict_json(v, &pool_index));
  j["idempotents"] = Json::array();
  for (size_t i = 0; i < r.distinct_idempotents.size(); ++i) {
    Json e = element_json(r.distinct_idempotents[i]);
    e["dimension"] = r.ideal_dimensions[i];
    j["idempotents"].push_back(std::move(e));
  }
  j["levels"] = Json::array();
  j["levels"].push_back(level_json(r.strong_set));
  j["levels"].push_back(level_json(r.generalized_set));
  j["levels"].push_back(level_json(r.shoda_set));
  j["covered_dimension"] = r.covered_dimension;
  j["uncovered_dimension"] = r.uncovered_dimension;
  j["has_undetermined"] = r.has_undetermined;
  return j;
}

Json pairs_json(const CoverageReport& r) {
  Json j;
  j["report"] = "pairs";
  j["group"] = group_header(r.group);
  j["pairs"] = Json::array();
  for (const PairVerdict& v : r.verdicts) j["pairs"].push_back(verdict_json(v, nullptr));
  j["has_undetermined"] = r.has_undetermined;
  return j;
}

Json idempotents_json(const CoverageReport& r) {
  Json j;
  j["report"] = "idempotents";
  j["group"] = group_header(r.group);
  j["pairs"] = Json::array();
  for (const PairVerdict& v : r.verdicts) {
    if (v.level == PairLevel::not_shoda) continue;
    Json p;
    p["h"] = subgroup_json(v.h);
    p["k"] = subgroup_json(v.k);
    p["level"] = pair_level_name(v.level);
    p["epsilon"] = element_json(epsilon_idempotent(v.h, v.k));
    p["conjugate_sum"] = element_json(e_idempotent(r.group, v.h, v.k));
    if (v.idempotent) p["e_q"] = element_json(*v.idempotent);
    if (v.multiple) p["multiple"] = rational_to_string(*v.multiple);
    j["pairs"].push_back(std::move(p));
  }
  j["distinct"] = Json::array();
  for (size_t i = 0; i < r.distinct_idempotents.size(); ++i) {
    Json e = element_json(r.distinct_idempotents[i]);
    e["dimension"] = r.ideal_dimensions[i];
    j["distinct"].push_back(std::move(e));
  }
  return j;
}

Json chars_json(const GroupPtr& g) {
  CharacterOracle oracle(g);
  const CharacterTable& t = oracle.table();
  const auto& witnesses = oracle.monomial_rows();
  const ConjugacyClasses& cls = g->classes();

  Json j;
  j["report"] = "chars";
  j["group"] = group_header(g);
  j["conductor"] = t.conductor;
  j["classes"] = Json::array();
  for (size_t c = 0; c < cls.classes.size(); ++c) {
    Json e;
    e["representative"] = cls.reps[c];
    e["size"] = cls.classes[c].size();
    j["classes"].push_back(std::move(e));
  }
  j["rows"] = Json::array();
  for (size_t i = 0; i < t.rows.size(); ++i) {
    Json row;
    row["degree"] = t.degrees[i];
    row["values"] = Json::array();
    for (const Cyclotomic& v : t.rows[i]) row["values"].push_back(v.to_string());
    row["monomial"] = witnesses[i].monomial;
    if (witnesses[i].monomial) row["witness_subgroup"] = subgroup_json(witnesses[i].from);
    j["rows"].push_back(std::move(row));
  }
  bool all = true;
  for (const auto& w : witnesses) all = all && w.monomial;
  j["all_rows_monomial"] = all;
  return j;
}

Json embed_json(const DadeEmbedding& emb, const SeriesWithPrimeFactors& series,
                const std::optional<CoverageReport>& tower_classification,
                const std::string& notice) {
  Json j;
  j["report"] = "embed";
  j["source"] = group_header(emb.source);
  Json ser;
  ser["orders"] = Json::array();
  for (const Subgroup& s : series.terms) ser["orders"].push_back(s.order());
  ser["primes"] = series.factor_primes;
  j["series"] = std::move(ser);
  j["tower"] = group_header(emb.tower);
  j["map"] = Json::array();
  for (Elt x = 0; x < emb.source->order(); ++x) j["map"].push_back({x, emb.map[x]});
  j["image"] = subgroup_json(emb.image);
  j["injective"] = true;  // construction verifies or throws
  if (tower_classification) j["classification"] = coverage_json(*tower_classification);
  if (!notice.empty()) j["notice"] = notice;
  return j;
}

Json suite_json(const SuiteReport& rep, bool timings) {
  Json j;
  j["report"] = "verify";
  j["suite"] = rep.name;
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["unknown"] = rep.unknown;
  j["instances"] = Json::array();
  for (const SuiteInstance& inst : rep.instances) {
    Json e;
    e["construction"] = inst.construction;
    e["orders"] = inst.orders;
    e["flags"] = inst.flags;
    e["outcome"] = suite_outcome_name(inst.outcome);
    e["budget_status"] = inst.budget_status;
    if (!inst.note.empty()) e["note"] = inst.note;
    if (timings) e["elapsed_seconds"] = inst.elapsed_seconds;
    j["instances"].push_back(std::move(e));
  }
  return j;
}

namespace {

std::string group_line(const Json& j) {
  return j["group"]["name"].get<std::string>() + " (order " +
         std::to_string(j["group"]["order"].get<int>()) + ")";
}

std::string flags_line(const Json& f) {
  std::ostringstream os;
  os << "monomial=" << (f["monomial"].get<bool>() ? "true" : "false")
     << " strongly_monomial=" << (f["strongly_monomial"].get<bool>() ? "true" : "false")
     << " generalized_strongly_monomial="
     << f["generalized_strongly_monomial"].get<std::string>();
  return os.str();
}

std::string members_brief(const Json& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& m : s["members"]) {
    if (!first) os << " ";
    os << m.get<int>();
    first = false;
  }
  os << "}";
  return os.str();
}

std::string pair_line(const Json& p) {
  std::ostringstream os;
  os << "H" << members_brief(p["h"]) << " K" << members_brief(p["k"]) << ": "
     << p["level"].get<std::string>();
  if (p.contains("multiple")) os << ", multiple " << p["multiple"].get<std::string>();
  if (p.contains("chain"))
    os << ", chain of " << p["chain"]["subgroups"].size() << " subgroups";
  if (p["chain_search_exhausted"].get<bool>()) os << ", search budget exhausted";
  return os.str();
}

std::string render_classify(const Json& j) {
  std::ostringstream os;
  os << group_line(j) << ": " << flags_line(j["flags"]) << "\n";
  std::map<std::string, int> counts;
  for (const auto& p : j["pairs"]) counts[p["level"].get<std::string>()] += 1;
  os << "pair classes: " << j["pairs"].size();
  for (const char* level :
       {"strong_shoda", "generalized_strong_shoda", "shoda", "not_shoda"})
    if (counts.count(level)) os << ", " << level << " " << counts[level];
  os << "\n";
  os << "idempotents: " << j["idempotents"].size() << ", dimensions";
  for (const auto& e : j["idempotents"]) os << " " << e["dimension"].get<int>();
  os << "\n";
  os << "covered dimension " << j["covered_dimension"].get<int>() << ", uncovered "
     << j["uncovered_dimension"].get<int>() << "\n";
  if (j["has_undetermined"].get<bool>()) os << "some verdicts hit the search budget\n";
  return os.str();
}

std::string render_pairs(const Json& j) {
  std::ostringstream os;
  os << group_line(j) << ": " << j["pairs"].size() << " pair classes\n";
  for (const auto& p : j["pairs"]) os << "  " << pair_line(p) << "\n";
  return os.str();
}

std::string render_idempotents(const Json& j) {
  std::ostringstream os;
  os << group_line(j) << ": " << j["pairs"].size() << " certified pairs, "
     << j["distinct"].size() << " distinct idempotents\n";
  for (const auto& p : j["pairs"]) {
    os << "  H" << members_brief(p["h"]) << " K" << members_brief(p["k"]) << " ["
       << p["level"].get<std::string>() << "]\n";
    os << "    epsilon = " << p["epsilon"]["display"].get<std::string>() << "\n";
    os << "    conjugate sum = " << p["conjugate_sum"]["display"].get<std::string>() << "\n";
    if (p.contains("e_q"))
      os << "    e_q = " << p["e_q"]["display"].get<std::string>() << "\n";
    if (p.contains("multiple")) os << "    multiple = " << p["multiple"].get<std::string>() << "\n";
  }
  os << "distinct dimensions:";
  for (const auto& e : j["distinct"]) os << " " << e["dimension"].get<int>();
  os << "\n";
  return os.str();
}

std::string render_chars(const Json& j) {
  std::ostringstream os;
  os << group_line(j) << ": " << j["rows"].size() << " irreducible characters, conductor "
     << j["conductor"].get<int>() << "\n";
  for (const auto& row : j["rows"]) {
    os << "  degree " << row["degree"].get<int>();
    if (row["monomial"].get<bool>())
      os << ", monomial from a subgroup of order "
         << row["witness_subgroup"]["order"].get<int>();
    else
      os << ", not monomial";
    os << ": ";
    bool first = true;
    for (const auto& v : row["values"]) {
      if (!first) os << " ";
      os << v.get<std::string>();
      first = false;
    }
    os << "\n";
  }
  os << "all rows monomial: " << (j["all_rows_monomial"].get<bool>() ? "true" : "false")
     << "\n";
  return os.str();
}

std::string render_embed(const Json& j) {
  std::ostringstream os;
  os << j["source"]["name"].get<std::string>() << " (order "
     << j["source"]["order"].get<int>() << ") -> tower "
     << j["tower"]["name"].get<std::string>() << " (order " << j["tower"]["order"].get<int>()
     << "), injective: " << (j["injective"].get<bool>() ? "true" : "false") << "\n";
  os << "series orders:";
  for (const auto& o : j["series"]["orders"]) os << " " << o.get<int>();
  os << ", primes:";
  for (const auto& p : j["series"]["primes"]) os << " " << p.get<int>();
  os << "\n";
  if (j.contains("classification"))
    os << "tower flags: " << flags_line(j["classification"]["flags"]) << "\n";
  if (j.contains("notice")) os << "notice: " << j["notice"].get<std::string>() << "\n";
  return os.str();
}

std::string render_verify(const Json& j) {
  std::ostringstream os;
  os << "suite " << j["suite"].get<std::string>() << ": " << j["passed"].get<int>()
     << " pass, " << j["failed"].get<int>() << " fail, " << j["unknown"].get<int>()
     << " unknown\n";
  for (const auto& inst : j["instances"]) {
    os << "  " << inst["outcome"].get<std::string>() << " "
       << inst["construction"].get<std::string>() << " (orders";
    for (const auto& o : inst["orders"]) os << " " << o.get<int>();
    os << ")";
    std::string flags = inst["flags"].get<std::string>();
    if (!flags.empty()) os << " " << flags;
    if (inst.contains("note")) os << " [" << inst["note"].get<std::string>() << "]";
    os << "\n";
  }
  return os.str();
}

std::string render_corpus(const Json& j) {
  std::ostringstream os;
  const Json& s = j["summary"];
  os << "corpus: " << s["entries"].get<int>() << " entries, " << s["ok"].get<int>()
     << " ok, " << s["errors"].get<int>() << " errors\n";
  for (const auto& e : j["entries"]) {
    os << "  " << e["source"].get<std::string>();
    if (e.contains("error")) {
      os << ": error: " << e["error"].get<std::string>() << "\n";
      continue;
    }
    os << " (order " << e["order"].get<int>() << "): " << flags_line(e["flags"]);
    if (e.contains("oracle")) os << " oracle=ok";
    os << "\n";
  }
  os << "monomial " << s["monomial"].get<int>() << "/" << s["ok"].get<int>()
     << ", strongly_monomial " << s["strongly_monomial"].get<int>() << "/"
     << s["ok"].get<int>() << ", generalized yes " << s["generalized_yes"].get<int>()
     << " unknown " << s["generalized_unknown"].get<int>() << " no "
     << s["generalized_no"].get<int>() << "\n";
  return os.str();
}

}  // namespace

std::string render_text(const Json& report) {
  if (!report.contains("report")) throw InvalidArgument("report JSON lacks a 'report' field");
  std::string kind = report["report"].get<std::string>();
  if (kind == "classify") return render_classify(report);
  if (kind == "pairs") return render_pairs(report);
  if (kind == "idempotents") return render_idempotents(report);
  if (kind == "chars") return render_chars(report);
  if (kind == "embed") return render_embed(report);
  if (kind == "verify") return render_verify(report);
  if (kind == "corpus") return render_corpus(report);
  throw InvalidArgument("unknown report kind: " + kind);
}

}  // namespace wedderkit
