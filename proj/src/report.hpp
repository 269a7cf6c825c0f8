#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wedderkit/constructions.hpp"
#include "wedderkit/shoda.hpp"

namespace wedderkit {

// insertion-ordered so equal inputs serialize to identical bytes
using Json = nlohmann::ordered_json;

Json subgroup_json(const Subgroup& s);
Json element_json(const RationalElement& e);

// classify: full report with the idempotent pool and level sets; verdicts
// reference pool entries by index. pairs: every candidate verdict with its
// idempotent inline.
Json coverage_json(const CoverageReport& r);
Json pairs_json(const CoverageReport& r);

// pair-by-pair serializations of the averaging product, its conjugate sum
// and the rational idempotent, plus the pooled distinct idempotents
Json idempotents_json(const CoverageReport& r);

// character table with per-row monomial witnesses
Json chars_json(const GroupPtr& g);

Json embed_json(const DadeEmbedding& emb, const SeriesWithPrimeFactors& series,
                const std::optional<CoverageReport>& tower_classification,
                const std::string& notice);

Json suite_json(const SuiteReport& rep, bool timings);

// plain-text summary computed from the JSON alone; kind is the "report"
// field value (classify, pairs, idempotents, chars, embed, verify, corpus)
std::string render_text(const Json& report);

}  // namespace wedderkit
