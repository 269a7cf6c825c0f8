// command-line front end; talks to the library through the C interface only
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedderkit.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string spec;
  std::string path;
  std::string suite;
  std::string out;
  int max_order = 512;
  long long chain_budget = 1'000'000;
  int jobs = 1;
  int tower_bound = 1536;
  int classify_limit = 72;
  bool oracle = false;
  bool timings = false;
};

std::string config_json(const Options& o) {
  Json j;
  j["max_order"] = o.max_order;
  j["chain_budget"] = o.chain_budget;
  j["jobs"] = o.jobs;
  j["oracle"] = o.oracle;
  j["timings"] = o.timings;
  j["tower_bound"] = o.tower_bound;
  j["classify_limit"] = o.classify_limit;
  return j.dump();
}

int fail_from_api() {
  std::fprintf(stderr, "error (%d): %s\n", wk_last_error_code(), wk_last_error());
  return 1;
}

// machine JSON to --out or stdout; the human summary always renders from
// that same JSON onto stderr
int emit(char* json, const Options& o, int ok_exit) {
  if (!json) return fail_from_api();
  if (o.out.empty()) {
    std::fputs(json, stdout);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "error: cannot write %s\n", o.out.c_str());
      wk_string_free(json);
      return 1;
    }
    f << json;
  }
  char* text = wk_render_text(json);
  if (text) {
    std::fputs(text, stderr);
    wk_string_free(text);
  }
  wk_string_free(json);
  return ok_exit;
}

int unknown_exit(const char* json, const std::string& kind) {
  Json j = Json::parse(json);
  if (kind == "flat") return j.value("has_undetermined", false) ? 2 : 0;
  if (kind == "verify") {
    if (j["failed"].get<int>() > 0) return 1;
    return j["unknown"].get<int>() > 0 ? 2 : 0;
  }
  if (kind == "corpus") {
    if (j["summary"]["errors"].get<int>() > 0) return 1;
    bool unknown = j["summary"]["has_undetermined"].get<int>() > 0 ||
                   j["summary"]["generalized_unknown"].get<int>() > 0;
    return unknown ? 2 : 0;
  }
  return 0;
}

wk_group* make_group(const Options& o) {
  wk_group* g = wk_group_from_spec(o.spec.c_str(), o.max_order);
  if (!g) fail_from_api();
  return g;
}

void add_bounds(CLI::App* cmd, Options& o, bool with_oracle) {
  cmd->add_option("--max-order", o.max_order, "largest group order accepted")
      ->envname("WEDDERKIT_BOUND")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--chain-budget", o.chain_budget,
                  "step validations allowed per chain search")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  if (with_oracle)
    cmd->add_flag("--oracle", o.oracle, "cross-check against the character table");
  cmd->add_flag("--timings", o.timings, "include elapsed times in the report");
  cmd->add_option("--out", o.out, "write the JSON report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monomiality classification of finite groups"};
  app.require_subcommand(1);
  Options o;

  CLI::App* classify = app.add_subcommand("classify", "flags, idempotents and coverage");
  classify->add_option("spec", o.spec, "group spec")->required();
  add_bounds(classify, o, true);

  CLI::App* pairs = app.add_subcommand("pairs", "every candidate pair with its verdict");
  pairs->add_option("spec", o.spec, "group spec")->required();
  add_bounds(pairs, o, false);

  CLI::App* idem = app.add_subcommand("idempotents", "exact idempotent serializations");
  idem->add_option("spec", o.spec, "group spec")->required();
  add_bounds(idem, o, false);

  CLI::App* chars = app.add_subcommand("chars", "character table with monomial witnesses");
  chars->add_option("spec", o.spec, "group spec")->required();
  chars->add_option("--max-order", o.max_order, "largest group order accepted")
      ->envname("WEDDERKIT_BOUND")
      ->check(CLI::PositiveNumber);
  chars->add_option("--out", o.out, "write the JSON report to this file");

  CLI::App* embed = app.add_subcommand("embed", "wreath tower embedding");
  embed->add_option("spec", o.spec, "group spec")->required();
  add_bounds(embed, o, false);
  embed->add_option("--tower-bound", o.tower_bound, "largest tower order built")
      ->check(CLI::PositiveNumber);
  embed->add_option("--classify-limit", o.classify_limit,
                    "classify the tower when its order is at most this")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand(
      "verify", "run a predicate suite: theorem1, proposition1, lemma2, theorem3_sample, oracle");
  verify->add_option("suite", o.suite, "suite name")->required();
  add_bounds(verify, o, false);
  verify->add_option("--tower-bound", o.tower_bound, "largest tower order built")
      ->check(CLI::PositiveNumber);
  verify->add_option("--classify-limit", o.classify_limit,
                     "classify towers when their order is at most this")
      ->check(CLI::NonNegativeNumber);

  CLI::App* corpus = app.add_subcommand(
      "corpus", "batch-classify a directory of .cayley files or a file of specs");
  corpus->add_option("path", o.path, "corpus path")->required();
  add_bounds(corpus, o, true);

  CLI11_PARSE(app, argc, argv);
  std::string cfg = config_json(o);

  if (classify->parsed() || pairs->parsed() || idem->parsed()) {
    wk_group* g = make_group(o);
    if (!g) return 1;
    char* json = classify->parsed() ? wk_classify_json(g, cfg.c_str())
                 : pairs->parsed()  ? wk_pairs_json(g, cfg.c_str())
                                    : wk_idempotents_json(g, cfg.c_str());
    wk_group_free(g);
    if (!json) return fail_from_api();
    int code = unknown_exit(json, "flat");
    return emit(json, o, code);
  }
  if (chars->parsed()) {
    wk_group* g = make_group(o);
    if (!g) return 1;
    char* json = wk_chars_json(g);
    wk_group_free(g);
    return emit(json, o, 0);
  }
  if (embed->parsed()) {
    wk_group* g = make_group(o);
    if (!g) return 1;
    char* json = wk_embed_json(g, cfg.c_str());
    wk_group_free(g);
    return emit(json, o, 0);
  }
  if (verify->parsed()) {
    char* json = wk_verify_suite_json(o.suite.c_str(), cfg.c_str());
    if (!json) return fail_from_api();
    int code = unknown_exit(json, "verify");
    return emit(json, o, code);
  }
  if (corpus->parsed()) {
    char* json = wk_corpus_json(o.path.c_str(), cfg.c_str());
    if (!json) return fail_from_api();
    int code = unknown_exit(json, "corpus");
    return emit(json, o, code);
  }
  return 1;
}
