#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rulemine/implicant.hpp"
#include "rulemine/tables.hpp"

namespace rulemine {

// A one- or two-literal candidate rule: (attribute index, required bit).
struct EffectLiteral {
  int attribute = 0;
  bool value = false;

  friend bool operator==(const EffectLiteral&, const EffectLiteral&) = default;
};

struct EffectCandidate {
  std::vector<EffectLiteral> literals;  // 1 = main effect, 2 = pair effect

  Implicant as_implicant(const AttributeSchema& schema) const;

  friend bool operator==(const EffectCandidate&, const EffectCandidate&) = default;
};

std::string format_candidate(const EffectCandidate& c, const AttributeSchema& schema);

struct EffectReport {
  EffectCandidate candidate;
  std::uint32_t covered_count = 0;       // n = 2^(k - literals)
  std::uint32_t inconsistent_count = 0;  // m = covered combinations that lose
  double expected_cases = 0.0;           // m * total / 2^k, exact
  std::uint64_t actual_cases = 0;        // successes observed in those m cells
  double added_error = 0.0;              // (expected - actual) / expected, 0 when m = 0
  double overall_error = 0.0;            // (m / n) * added_error
  // Observed successes exceeded the uniform expectation; added_error is
  // negative and reported as-is.
  bool negative_deviation = false;
  std::optional<double> conditional_rate_one;   // % successes when first literal's
  std::optional<double> conditional_rate_zero;  // attribute is 1 / 0 (main effects)
  std::vector<Implicant> replaceable_rules;
};

// The 2k single-attribute candidates followed by the 4*k*(k-1)/2 pair
// candidates, ordered by attribute index and then polarity pattern
// (positive before negated, matching E, E', S, S', ... and ES, E'S,
// ES', E'S', ...).
std::vector<EffectCandidate> enumerate_candidates(const AttributeSchema& schema);

// Fills the error fields: finds the covered-but-losing combinations,
// compares their observed successes against the uniform expectation
// m * total / 2^k. Requires freq.total_observations > 0.
EffectReport added_error(const EffectCandidate& c, const TruthTable& table,
                         const FrequencyTable& freq);

double overall_error(const EffectReport& report);

enum class RateStatus {
  kAvailable,
  kNoFailureData,    // the table never recorded failures (share-mode data)
  kNoObservations  // nothing observed with that attribute value
};

struct ConditionalRate {
  RateStatus status = RateStatus::kAvailable;
  double percent = 0.0;  // meaningful only when status == kAvailable
};

// successes / (successes + failures) over all combinations where the
// attribute has the given value. Unavailability is distinct from 0%.
ConditionalRate conditional_success_rate(int attribute, bool value,
                                         const FrequencyTable& freq);

// Rules whose literal set contains the candidate's literals with matching
// polarities; their covered sets are subsets of the candidate's, so the
// candidate could replace them.
std::vector<Implicant> suggest_replacements(const EffectCandidate& c,
                                            const RuleSet& rules);

// Full Phase-IV scan: one report per candidate, sorted by overall_error
// ascending (ties keep enumeration order).
std::vector<EffectReport> scan_effects(const TruthTable& table,
                                       const FrequencyTable& freq,
                                       const RuleSet& rules);

}  // namespace rulemine
