#include "rulemine/tables.hpp"

#include <string>

#include "rulemine/error.hpp"

namespace rulemine {

std::optional<double> FrequencyTable::success_rate(Combination c) const {
  const auto& e = entries[c];
  const auto observed = e.successes + e.failures;
  if (observed == 0) return std::nullopt;
  return 100.0 * static_cast<double>(e.successes) / static_cast<double>(observed);
}

double FrequencyTable::success_share(Combination c) const {
  if (total_successes == 0) return 0.0;
  return 100.0 * static_cast<double>(entries[c].successes) /
         static_cast<double>(total_successes);
}

std::vector<Combination> TruthTable::success_combinations() const {
  std::vector<Combination> out;
  for (Combination c = 0; c < outcomes.size(); ++c) {
    if (outcomes[c]) out.push_back(c);
  }
  return out;
}

FrequencyTable build_frequency_table(const std::vector<Observation>& observations,
                                     const AttributeSchema& schema) {
  FrequencyTable table;
  table.schema = schema;
  table.entries.resize(schema.combination_count());
  table.failures_recorded = true;
  for (const auto& obs : observations) {
    if (obs.combo >= schema.combination_count()) {
      throw DataError("combination " + std::to_string(obs.combo) +
                      " is out of range for k=" + std::to_string(schema.k()));
    }
    auto& entry = table.entries[obs.combo];
    if (obs.success) {
      ++entry.successes;
      ++table.total_successes;
    } else {
      ++entry.failures;
    }
    ++table.total_observations;
  }
  return table;
}

FrequencyTable build_frequency_table_from_counts(const AttributeSchema& schema,
                                                 const std::vector<ComboCounts>& counts,
                                                 bool failures_recorded) {
  if (counts.size() != schema.combination_count()) {
    throw DataError("expected " + std::to_string(schema.combination_count()) +
                    " count entries, got " + std::to_string(counts.size()));
  }
  FrequencyTable table;
  table.schema = schema;
  table.entries = counts;
  table.failures_recorded = failures_recorded;
  for (const auto& e : counts) {
    table.total_successes += e.successes;
    table.total_observations += e.successes + e.failures;
  }
  return table;
}

TruthTable classify(const FrequencyTable& freq, const ClassifyConfig& cfg) {
  if (cfg.pct_threshold < 0.0 || cfg.pct_threshold > 100.0) {
    throw ConfigError("pct_threshold must lie in [0, 100]");
  }
  if (cfg.mode == ThresholdMode::kRate && freq.total_observations == 0) {
    throw DataError("rate-mode classification needs at least one observed entry");
  }

  TruthTable table;
  table.schema = freq.schema;
  table.outcomes.resize(freq.schema.combination_count(), false);
  for (Combination c = 0; c < table.outcomes.size(); ++c) {
    const auto& e = freq.entries[c];
    // A combination never observed as a success always loses.
    if (e.successes == 0 || e.successes < cfg.min_successes) continue;
    double pct = 0.0;
    if (cfg.mode == ThresholdMode::kRate) {
      const auto rate = freq.success_rate(c);
      if (!rate) continue;  // unobserved entries classify as failures
      pct = *rate;
    } else {
      pct = freq.success_share(c);
    }
    table.outcomes[c] = pct >= cfg.pct_threshold;
  }
  table.provenance = freq;
  return table;
}

TruthTable build_truth_table_deterministic(const std::vector<Observation>& observations,
                                           const AttributeSchema& schema) {
  TruthTable table;
  table.schema = schema;
  table.outcomes.resize(schema.combination_count(), false);
  // 0 = unseen, 1 = seen failure, 2 = seen success
  std::vector<unsigned char> seen(schema.combination_count(), 0);
  for (const auto& obs : observations) {
    if (obs.combo >= schema.combination_count()) {
      throw DataError("combination " + std::to_string(obs.combo) +
                      " is out of range for k=" + std::to_string(schema.k()));
    }
    const unsigned char mark = obs.success ? 2 : 1;
    if (seen[obs.combo] != 0 && seen[obs.combo] != mark) {
      throw DataError("combination " + std::to_string(obs.combo) +
                      " was observed with both outcomes; use the frequency-table "
                      "path for stochastic data");
    }
    seen[obs.combo] = mark;
    table.outcomes[obs.combo] = obs.success;
  }
  return table;
}

}  // namespace rulemine
