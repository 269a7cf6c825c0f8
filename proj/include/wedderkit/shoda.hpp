#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wedderkit/algebra.hpp"
#include "wedderkit/characters.hpp"
#include "wedderkit/group.hpp"

namespace wedderkit {

// strong certifies with the one-step chain, so it sits above generalized
enum class PairLevel {
  not_shoda = 0,
  shoda = 1,
  generalized_strong_shoda = 2,
  strong_shoda = 3,
};
std::string pair_level_name(PairLevel level);

// (H, K) with K normal in H and H/K cyclic, such that any g with
// [H, g] ∩ H inside K already lies in H
bool is_shoda_pair(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

// Shoda pair with H normal in N_G(K) and eps(H,K) eps(H,K)^g = 0
// for every g outside N_G(K)
bool is_strong_shoda_pair(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

struct ChainStep {
  Subgroup centralizer;                     // elements of the next term fixing e_i
  std::vector<RationalElement> conjugates;  // distinct next-term conjugates of e_i
};

// H = chain[0] < chain[1] < ... < chain[n] = G with, at every step,
// chain[i] normal in the centralizer of e_Q(lambda^chain[i]) inside
// chain[i+1], and the distinct chain[i+1]-conjugates of that idempotent
// pairwise orthogonal
struct ChainCertificate {
  std::vector<Subgroup> chain;
  std::vector<ChainStep> steps;  // one per consecutive chain pair
};

// recheck every step of the certificate from scratch
bool validate_chain(const GroupPtr& g, const Subgroup& h, const SubgroupCharacter& lambda,
                    const ChainCertificate& cert);

struct ChainSearchOptions {
  long long budget = 1'000'000;  // counted per attempted step validation
};

// search order: the one-step chain first, then chains through proper normal
// subgroups containing H (appending G needs only the orthogonality check),
// then depth-first over all intermediate subgroups, preferring subgroups of
// the current idempotent's centralizer and smaller orders. Absence means the
// whole space was exhausted; running out of budget throws instead.
std::optional<ChainCertificate> find_strong_inductive_chain(const GroupPtr& g,
                                                            const Subgroup& h,
                                                            const Subgroup& k,
                                                            const SubgroupCharacter& lambda,
                                                            const ChainSearchOptions& opt = {});

// the unique q with eQ_of_char(lambda^G) = q * e(G, H, K)
Rational rational_multiple(const GroupPtr& g, const Subgroup& h, const Subgroup& k,
                           const SubgroupCharacter& lambda);

struct PairVerdict {
  Subgroup h, k;
  PairLevel level = PairLevel::not_shoda;
  std::optional<ChainCertificate> chain;
  std::optional<RationalElement> idempotent;  // e_Q(lambda^G)
  std::optional<Rational> multiple;           // q with e_Q(lambda^G) = q e(G,H,K)
  bool chain_search_exhausted = false;        // budget ran out before a verdict
};

// level, idempotent, multiple and chain certificate for one pair;
// lambda is the first linear character of H with kernel K
PairVerdict pair_verdict(const GroupPtr& g, const Subgroup& h, const Subgroup& k,
                         const ChainSearchOptions& opt = {});

enum class Flag3 { no = 0, yes = 1, unknown = 2 };
std::string flag3_name(Flag3 f);

struct ClassifyOptions {
  long long chain_budget = 1'000'000;
  int jobs = 1;
  int max_order = 512;
};

// idempotents certified at a level, cumulatively: a pair contributes to
// every level at or below its own
struct LevelSet {
  PairLevel level;
  std::vector<int> pair_indices;        // verdict indices with level >= this
  std::vector<int> idempotent_indices;  // indices into distinct_idempotents
  bool sum_is_one = false;
};

struct CoverageReport {
  GroupPtr group;
  std::vector<PairVerdict> verdicts;  // one per pair class, canonical order
  std::vector<RationalElement> distinct_idempotents;  // all levels pooled
  std::vector<int> ideal_dimensions;                  // parallel to the pool
  LevelSet shoda_set, generalized_set, strong_set;
  bool monomial = false;
  bool strongly_monomial = false;
  Flag3 generalized_strongly_monomial = Flag3::no;
  bool has_undetermined = false;
  int covered_dimension = 0;
  int uncovered_dimension = 0;
};

// enumerate pair classes, compute verdicts (in parallel when jobs > 1,
// with scheduling-independent results), pool distinct idempotents and set
// the flags by which level sums reach the identity
CoverageReport classify_group(const GroupPtr& g, const ClassifyOptions& opt = {});

struct CrossValidation {
  bool monomial_flag = false;       // from the pair classification
  bool all_rows_monomial = false;   // from the character table sweep
  int class_count = 0;
  int row_count = 0;
  int pair_side_idempotents = 0;
  int character_side_idempotents = 0;
};

// compare the pair classification against the character table route;
// throws OracleMismatch on the first difference
CrossValidation cross_validate(const GroupPtr& g, const ClassifyOptions& opt = {});

}  // namespace wedderkit
