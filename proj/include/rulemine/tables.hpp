#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rulemine/schema.hpp"

namespace rulemine {

struct Observation {
  Combination combo = 0;
  bool success = false;
};

struct ComboCounts {
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
};

// Per-combination success/failure counts with derived percentages.
struct FrequencyTable {
  AttributeSchema schema;
  std::vector<ComboCounts> entries;  // one per combination, index = bits
  std::uint64_t total_successes = 0;
  std::uint64_t total_observations = 0;
  // False when the source recorded successes only (e.g. a frequency file
  // without a failures column); failure-dependent statistics are then
  // unavailable.
  bool failures_recorded = false;

  // successes / (successes + failures); empty when the combination was
  // never observed.
  std::optional<double> success_rate(Combination c) const;
  // This combination's successes as a percent of all successes.
  double success_share(Combination c) const;
};

// Thresholded outcome per combination: 1 = success, 0 = failure.
struct TruthTable {
  AttributeSchema schema;
  std::vector<bool> outcomes;  // exactly 2^k entries
  std::optional<FrequencyTable> provenance;

  bool outcome(Combination c) const { return outcomes[c]; }
  std::vector<Combination> success_combinations() const;
};

enum class ThresholdMode {
  kRate,  // percent applies to success_rate
  kShare  // percent applies to success_share (Table 2's "%" column)
};

struct ClassifyConfig {
  ThresholdMode mode = ThresholdMode::kShare;
  double pct_threshold = 0.0;       // in [0, 100]
  std::uint64_t min_successes = 0;
};

// Accumulates observations into a frequency table. Combinations never
// observed keep zero counts. Throws DataError on out-of-range combinations.
FrequencyTable build_frequency_table(const std::vector<Observation>& observations,
                                     const AttributeSchema& schema);

// Builds a frequency table from pre-aggregated counts, one (successes,
// failures) pair per combination in index order.
FrequencyTable build_frequency_table_from_counts(
    const AttributeSchema& schema,
    const std::vector<ComboCounts>& counts,
    bool failures_recorded);

// Thresholds a frequency table into a truth table: a combination wins iff
// it has at least one success, its chosen percentage is >= pct_threshold,
// and its success count is >= min_successes. Never-observed combinations
// always lose.
TruthTable classify(const FrequencyTable& freq, const ClassifyConfig& cfg);

// Copies observed outcomes and defaults unobserved combinations to failure.
// Throws DataError when one combination carries both outcomes; stochastic
// data belongs on the frequency-table path.
TruthTable build_truth_table_deterministic(const std::vector<Observation>& observations,
                                           const AttributeSchema& schema);

}  // namespace rulemine
