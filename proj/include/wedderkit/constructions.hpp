#pragma once

#include <string>
#include <vector>

#include "wedderkit/group.hpp"
#include "wedderkit/shoda.hpp"

namespace wedderkit {

// imprimitive wreath product A ~ C_p on block_count * block_size points;
// base is the block-preserving subgroup, the p-fold direct power of A
struct WreathProduct {
  GroupPtr group;
  Subgroup base;
  int block_size = 0;
  int block_count = 0;
};
// uses A's permutation action when it has one, the right-regular action
// otherwise; p must be prime
WreathProduct wreath_by_cyclic(const GroupPtr& a, int p,
                               int max_order = kDefaultConstructionBound);

// ascending subnormal series with prime-order factors, refined from the
// derived series; factor_primes[i] = |terms[i+1]| / |terms[i]|
struct SeriesWithPrimeFactors {
  GroupPtr group;
  std::vector<Subgroup> terms;
  std::vector<int> factor_primes;
};
SeriesWithPrimeFactors composition_series_prime_factors(const GroupPtr& g);

// injective homomorphism of a solvable group into the iterated wreath tower
// over its series primes, verified exhaustively on construction
struct DadeEmbedding {
  GroupPtr source;
  GroupPtr tower;
  std::vector<Elt> map;  // source element -> tower element
  Subgroup image;
};
DadeEmbedding dade_embedding(const GroupPtr& g, const SeriesWithPrimeFactors& series,
                             int max_order = kDefaultConstructionBound);
DadeEmbedding dade_embedding(const GroupPtr& g, int max_order = kDefaultConstructionBound);

// the groups of order <= 23, one per isomorphism class, with short names
struct CatalogEntry {
  std::string name;
  GroupPtr group;
};
const std::vector<CatalogEntry>& small_group_catalog();

// constructive checks of the closure statements: each suite builds its
// instances, classifies what fits the order limits, and compares the flag
// against the predicted value
enum class SuiteOutcome { pass = 0, fail = 1, unknown = 2 };
std::string suite_outcome_name(SuiteOutcome o);

struct SuiteInstance {
  std::string construction;
  std::vector<int> orders;
  std::string flags;          // classification flag summary, empty when skipped
  SuiteOutcome outcome = SuiteOutcome::unknown;
  std::string budget_status;  // "within", "exhausted", or "skipped"
  std::string note;
  double elapsed_seconds = 0.0;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteInstance> instances;
  int passed = 0;
  int failed = 0;
  int unknown = 0;
};

struct SuiteOptions {
  ClassifyOptions classify;
  int classify_order_limit = 72;
  int embed_order_limit = 1536;
};

// name is one of: theorem1, proposition1, lemma2, theorem3_sample
SuiteReport verify_theorem_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace wedderkit
