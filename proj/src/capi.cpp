#include "wedderkit.h"

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "report.hpp"
#include "wedderkit/characters.hpp"
#include "wedderkit/constructions.hpp"
#include "wedderkit/errors.hpp"
#include "wedderkit/groupspec.hpp"
#include "wedderkit/parallel.hpp"
#include "wedderkit/shoda.hpp"

using namespace wedderkit;

extern "C" struct wk_group {
  GroupPtr g;
};

namespace {

thread_local std::string t_error_message;
thread_local int t_error_code = WK_OK;

void clear_error() {
  t_error_message.clear();
  t_error_code = WK_OK;
}

void set_error(int code, const std::string& msg) {
  t_error_code = code;
  t_error_message = msg;
}

// every boundary function funnels through here so exceptions never cross
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  clear_error();
  try {
    return f();
  } catch (const Error& e) {
    set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::exception& e) {
    set_error(WK_ERR_INTERNAL, e.what());
  }
  return nullptr;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) {
    set_error(WK_ERR_INTERNAL, "out of memory");
    return nullptr;
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump_report(const Json& j) { return copy_string(j.dump(2) + "\n"); }

struct ApiConfig {
  ClassifyOptions classify;
  bool oracle = false;
  bool timings = false;
  int tower_bound = 1536;
  int classify_limit = 72;
};

ApiConfig parse_config(const char* config_json) {
  ApiConfig c;
  if (!config_json || !*config_json) return c;
  Json j;
  try {
    j = Json::parse(config_json);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "max_order") c.classify.max_order = value.get<int>();
    else if (key == "chain_budget") c.classify.chain_budget = value.get<long long>();
    else if (key == "jobs") c.classify.jobs = value.get<int>();
    else if (key == "oracle") c.oracle = value.get<bool>();
    else if (key == "timings") c.timings = value.get<bool>();
    else if (key == "tower_bound") c.tower_bound = value.get<int>();
    else if (key == "classify_limit") c.classify_limit = value.get<int>();
    else throw ParseError("unknown config field '" + key + "'");
  }
  if (c.classify.max_order < 1 || c.classify.jobs < 1 || c.classify.chain_budget < 0 ||
      c.tower_bound < 1 || c.classify_limit < 0)
    throw ParseError("config bounds must be positive");
  return c;
}

Json oracle_json(const CrossValidation& cv) {
  Json j;
  j["classes"] = cv.class_count;
  j["rows"] = cv.row_count;
  j["pair_side_idempotents"] = cv.pair_side_idempotents;
  j["character_side_idempotents"] = cv.character_side_idempotents;
  j["monomial_flag"] = cv.monomial_flag;
  j["all_rows_monomial"] = cv.all_rows_monomial;
  return j;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// corpus sources: directory of .cayley files, or a file of spec lines
struct CorpusSource {
  std::string label;
  std::string cayley_path;  // empty when spec is set
  std::string spec;
};

std::vector<CorpusSource> corpus_sources(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<CorpusSource> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".cayley")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    for (const auto& f : files) out.push_back({f.filename().string(), f.string(), ""});
    return out;
  }
  std::ifstream in(path);
  if (!in) throw IOError("cannot open corpus path " + path);
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    size_t stop = line.find_last_not_of(" \t\r");
    std::string spec = line.substr(start, stop - start + 1);
    if (spec[0] == '#') continue;
    out.push_back({spec, "", spec});
  }
  return out;
}

Json corpus_entry(const GroupPtr& g, const std::string& label, const ApiConfig& cfg) {
  ClassifyOptions copt = cfg.classify;
  copt.jobs = 1;  // the batch parallelizes across entries
  CoverageReport r = classify_group(g, copt);
  Json e;
  e["source"] = label;
  e["group"] = g->name();
  e["order"] = g->order();
  Json flags;
  flags["monomial"] = r.monomial;
  flags["strongly_monomial"] = r.strongly_monomial;
  flags["generalized_strongly_monomial"] = flag3_name(r.generalized_strongly_monomial);
  e["flags"] = std::move(flags);
  e["pair_classes"] = r.verdicts.size();
  e["idempotents"] = r.distinct_idempotents.size();
  e["covered_dimension"] = r.covered_dimension;
  e["uncovered_dimension"] = r.uncovered_dimension;
  e["has_undetermined"] = r.has_undetermined;
  if (cfg.oracle) e["oracle"] = oracle_json(cross_validate(g, copt));
  return e;
}

SuiteReport oracle_suite(const ApiConfig& cfg) {
  std::vector<std::pair<std::string, GroupPtr>> groups;
  for (const CatalogEntry& entry : small_group_catalog())
    groups.emplace_back(entry.name, entry.group);
  groups.emplace_back("s4", FiniteGroup::symmetric(4));
  groups.emplace_back("sl23", FiniteGroup::from_permutation_generators(
                                  {{2, 5, 1, 4, 7, 0, 3, 6}, {0, 1, 3, 4, 2, 7, 5, 6}},
                                  "SL23"));
  groups.emplace_back(
      "s3xc4", direct_product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(4)).group);
  groups.emplace_back(
      "d4xc3", direct_product(FiniteGroup::dihedral(8), FiniteGroup::cyclic(3)).group);

  SuiteReport rep;
  rep.name = "oracle";
  rep.instances.resize(groups.size());
  run_indexed_tasks(cfg.classify.jobs, static_cast<int>(groups.size()), [&](int i) {
    SuiteInstance& inst = rep.instances[static_cast<size_t>(i)];
    const auto& [label, g] = groups[static_cast<size_t>(i)];
    inst.construction = label;
    inst.orders = {g->order()};
    auto t0 = std::chrono::steady_clock::now();
    ClassifyOptions copt = cfg.classify;
    copt.jobs = 1;
    try {
      CrossValidation cv = cross_validate(g, copt);
      inst.flags = "classes=" + std::to_string(cv.class_count) +
                   " rows=" + std::to_string(cv.row_count) +
                   " idempotents=" + std::to_string(cv.pair_side_idempotents);
      inst.outcome = SuiteOutcome::pass;
      inst.budget_status = "within";
    } catch (const OracleMismatch& e) {
      inst.outcome = SuiteOutcome::fail;
      inst.budget_status = "within";
      inst.note = e.what();
    } catch (const SearchBudgetExceeded& e) {
      inst.outcome = SuiteOutcome::unknown;
      inst.budget_status = "exhausted";
      inst.note = e.what();
    }
    inst.elapsed_seconds = seconds_since(t0);
  });
  for (const SuiteInstance& inst : rep.instances) {
    if (inst.outcome == SuiteOutcome::pass) ++rep.passed;
    else if (inst.outcome == SuiteOutcome::fail) ++rep.failed;
    else ++rep.unknown;
  }
  return rep;
}

}  // namespace

extern "C" {

const char* wk_last_error(void) { return t_error_message.c_str(); }

int wk_last_error_code(void) { return t_error_code; }

wk_group* wk_group_from_spec(const char* spec, int max_order) {
  return guarded([&]() -> wk_group* {
    if (!spec) throw InvalidArgument("spec is null");
    return new wk_group{group_from_spec(spec, max_order)};
  });
}

wk_group* wk_group_from_cayley_file(const char* path, int max_order) {
  return guarded([&]() -> wk_group* {
    if (!path) throw InvalidArgument("path is null");
    return new wk_group{read_cayley_table(path, max_order)};
  });
}

int wk_group_order(const wk_group* g) { return g ? g->g->order() : 0; }

const char* wk_group_name(const wk_group* g) { return g ? g->g->name().c_str() : ""; }

int wk_group_write_cayley(const wk_group* g, const char* path) {
  clear_error();
  try {
    if (!g || !path) throw InvalidArgument("null argument");
    write_cayley_table(g->g, path);
    return WK_OK;
  } catch (const Error& e) {
    set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::exception& e) {
    set_error(WK_ERR_INTERNAL, e.what());
  }
  return t_error_code;
}

void wk_group_free(wk_group* g) { delete g; }

char* wk_classify_json(const wk_group* g, const char* config_json) {
  return guarded([&]() -> char* {
    if (!g) throw InvalidArgument("group is null");
    ApiConfig cfg = parse_config(config_json);
    auto t0 = std::chrono::steady_clock::now();
    Json j = coverage_json(classify_group(g->g, cfg.classify));
    if (cfg.oracle) j["oracle"] = oracle_json(cross_validate(g->g, cfg.classify));
    if (cfg.timings) j["elapsed_seconds"] = seconds_since(t0);
    return dump_report(j);
  });
}

char* wk_pairs_json(const wk_group* g, const char* config_json) {
  return guarded([&]() -> char* {
    if (!g) throw InvalidArgument("group is null");
    ApiConfig cfg = parse_config(config_json);
    auto t0 = std::chrono::steady_clock::now();
    Json j = pairs_json(classify_group(g->g, cfg.classify));
    if (cfg.timings) j["elapsed_seconds"] = seconds_since(t0);
    return dump_report(j);
  });
}

char* wk_idempotents_json(const wk_group* g, const char* config_json) {
  return guarded([&]() -> char* {
    if (!g) throw InvalidArgument("group is null");
    ApiConfig cfg = parse_config(config_json);
    auto t0 = std::chrono::steady_clock::now();
    Json j = idempotents_json(classify_group(g->g, cfg.classify));
    if (cfg.timings) j["elapsed_seconds"] = seconds_since(t0);
    return dump_report(j);
  });
}

char* wk_chars_json(const wk_group* g) {
  return guarded([&]() -> char* {
    if (!g) throw InvalidArgument("group is null");
    return dump_report(chars_json(g->g));
  });
}

char* wk_embed_json(const wk_group* g, const char* config_json) {
  return guarded([&]() -> char* {
    if (!g) throw InvalidArgument("group is null");
    ApiConfig cfg = parse_config(config_json);
    auto t0 = std::chrono::steady_clock::now();
    SeriesWithPrimeFactors series = composition_series_prime_factors(g->g);
    DadeEmbedding emb = dade_embedding(g->g, series, cfg.tower_bound);
    std::optional<CoverageReport> classification;
    std::string notice;
    if (emb.tower->order() <= cfg.classify_limit) {
      ClassifyOptions copt = cfg.classify;
      copt.max_order = std::max(copt.max_order, emb.tower->order());
      classification = classify_group(emb.tower, copt);
    } else {
      notice = "tower order " + std::to_string(emb.tower->order()) +
               " exceeds the classification limit " + std::to_string(cfg.classify_limit) +
               "; embedding verified only";
    }
    Json j = embed_json(emb, series, classification, notice);
    if (cfg.timings) j["elapsed_seconds"] = seconds_since(t0);
    return dump_report(j);
  });
}

char* wk_verify_suite_json(const char* suite, const char* config_json) {
  return guarded([&]() -> char* {
    if (!suite) throw InvalidArgument("suite is null");
    ApiConfig cfg = parse_config(config_json);
    SuiteOptions opt;
    opt.classify = cfg.classify;
    opt.classify_order_limit = cfg.classify_limit;
    opt.embed_order_limit = cfg.tower_bound;
    SuiteReport rep = std::string(suite) == "oracle" ? oracle_suite(cfg)
                                                     : verify_theorem_suite(suite, opt);
    return dump_report(suite_json(rep, cfg.timings));
  });
}

char* wk_corpus_json(const char* path, const char* config_json) {
  return guarded([&]() -> char* {
    if (!path) throw InvalidArgument("path is null");
    ApiConfig cfg = parse_config(config_json);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CorpusSource> sources = corpus_sources(path);

    // groups are built serially; classification fans out across entries
    std::vector<GroupPtr> groups(sources.size());
    std::vector<Json> slots(sources.size());
    for (size_t i = 0; i < sources.size(); ++i) {
      try {
        groups[i] = sources[i].cayley_path.empty()
                        ? group_from_spec(sources[i].spec, cfg.classify.max_order)
                        : read_cayley_table(sources[i].cayley_path, cfg.classify.max_order);
      } catch (const std::exception& e) {
        Json err;
        err["source"] = sources[i].label;
        err["error"] = e.what();
        slots[i] = std::move(err);
      }
    }
    run_indexed_tasks(cfg.classify.jobs, static_cast<int>(sources.size()), [&](int i) {
      if (!groups[static_cast<size_t>(i)]) return;
      try {
        slots[static_cast<size_t>(i)] =
            corpus_entry(groups[static_cast<size_t>(i)], sources[static_cast<size_t>(i)].label,
                         cfg);
      } catch (const std::exception& e) {
        Json err;
        err["source"] = sources[static_cast<size_t>(i)].label;
        err["error"] = e.what();
        slots[static_cast<size_t>(i)] = std::move(err);
      }
    });

    int ok = 0, errors = 0, monomial = 0, strongly = 0;
    int gen_yes = 0, gen_unknown = 0, gen_no = 0, undetermined = 0;
    Json entries = Json::array();
    for (Json& e : slots) {
      if (e.contains("error")) {
        ++errors;
      } else {
        ++ok;
        if (e["flags"]["monomial"].get<bool>()) ++monomial;
        if (e["flags"]["strongly_monomial"].get<bool>()) ++strongly;
        std::string gflag = e["flags"]["generalized_strongly_monomial"].get<std::string>();
        if (gflag == "true") ++gen_yes;
        else if (gflag == "unknown") ++gen_unknown;
        else ++gen_no;
        if (e["has_undetermined"].get<bool>()) ++undetermined;
      }
      entries.push_back(std::move(e));
    }
    Json j;
    j["report"] = "corpus";
    j["path"] = path;
    j["entries"] = std::move(entries);
    Json summary;
    summary["entries"] = sources.size();
    summary["ok"] = ok;
    summary["errors"] = errors;
    summary["monomial"] = monomial;
    summary["strongly_monomial"] = strongly;
    summary["generalized_yes"] = gen_yes;
    summary["generalized_unknown"] = gen_unknown;
    summary["generalized_no"] = gen_no;
    summary["has_undetermined"] = undetermined;
    j["summary"] = std::move(summary);
    if (cfg.timings) j["elapsed_seconds"] = seconds_since(t0);
    return dump_report(j);
  });
}

char* wk_render_text(const char* report_json) {
  return guarded([&]() -> char* {
    if (!report_json) throw InvalidArgument("report is null");
    Json j;
    try {
      j = Json::parse(report_json);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad report JSON: ") + e.what());
    }
    return copy_string(render_text(j));
  });
}

void wk_string_free(char* s) { std::free(s); }

}  // extern "C"
