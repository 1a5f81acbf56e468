#include "rulemine/effects.hpp"

#include <algorithm>
#include <cmath>

#include "rulemine/error.hpp"

namespace rulemine {

Implicant EffectCandidate::as_implicant(const AttributeSchema& schema) const {
  std::uint32_t mask = 0;
  std::uint32_t values = 0;
  for (const auto& lit : literals) {
    const std::uint32_t bit = 1u << schema.bit_position(lit.attribute);
    mask |= bit;
    if (lit.value) values |= bit;
  }
  return Implicant{mask, values};
}

std::string format_candidate(const EffectCandidate& c, const AttributeSchema& schema) {
  std::string out;
  for (const auto& lit : c.literals) {
    out.push_back(schema.attributes[lit.attribute].letter());
    if (!lit.value) out.push_back('\'');
  }
  return out;
}

std::vector<EffectCandidate> enumerate_candidates(const AttributeSchema& schema) {
  const int k = schema.k();
  std::vector<EffectCandidate> out;
  // Main effects: E, E', S, S', ...
  for (int a = 0; a < k; ++a) {
    for (const bool value : {true, false}) {
      out.push_back(EffectCandidate{{{a, value}}});
    }
  }
  // Pair effects, four polarity patterns per pair: ES, E'S, ES', E'S', ...
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (const auto& [va, vb] : {std::pair{true, true},
                                   std::pair{false, true},
                                   std::pair{true, false},
                                   std::pair{false, false}}) {
        out.push_back(EffectCandidate{{{a, va}, {b, vb}}});
      }
    }
  }
  return out;
}

EffectReport added_error(const EffectCandidate& c, const TruthTable& table,
                         const FrequencyTable& freq) {
  if (freq.total_observations == 0) {
    throw DataError("added error needs at least one observation");
  }
  const int k = table.schema.k();
  EffectReport report;
  report.candidate = c;

  const Implicant cube = c.as_implicant(table.schema);
  const auto covered = covered_combinations(cube, k);
  report.covered_count = static_cast<std::uint32_t>(covered.size());

  for (const auto combo : covered) {
    if (table.outcomes[combo]) continue;
    ++report.inconsistent_count;
    report.actual_cases += freq.entries[combo].successes;
  }

  if (report.inconsistent_count > 0) {
    const double per_cell = static_cast<double>(freq.total_observations) /
                            static_cast<double>(table.schema.combination_count());
    report.expected_cases = report.inconsistent_count * per_cell;
    report.added_error =
        (report.expected_cases - static_cast<double>(report.actual_cases)) /
        report.expected_cases;
    report.negative_deviation = report.added_error < 0.0;
  }
  report.overall_error = overall_error(report);
  return report;
}

double overall_error(const EffectReport& report) {
  if (report.covered_count == 0) return 0.0;
  return (static_cast<double>(report.inconsistent_count) /
          static_cast<double>(report.covered_count)) *
         report.added_error;
}

ConditionalRate conditional_success_rate(int attribute, bool value,
                                         const FrequencyTable& freq) {
  if (!freq.failures_recorded) {
    return {RateStatus::kNoFailureData, 0.0};
  }
  std::uint64_t successes = 0;
  std::uint64_t observed = 0;
  for (Combination c = 0; c < freq.entries.size(); ++c) {
    if (freq.schema.bit_of(c, attribute) != value) continue;
    successes += freq.entries[c].successes;
    observed += freq.entries[c].successes + freq.entries[c].failures;
  }
  if (observed == 0) {
    return {RateStatus::kNoObservations, 0.0};
  }
  return {RateStatus::kAvailable,
          100.0 * static_cast<double>(successes) / static_cast<double>(observed)};
}

std::vector<Implicant> suggest_replacements(const EffectCandidate& c,
                                            const RuleSet& rules) {
  const Implicant cube = c.as_implicant(rules.schema);
  std::vector<Implicant> out;
  for (const auto& rule : rules.rules) {
    // The rule's literals must contain the candidate's with the same
    // polarities; the candidate then covers everything the rule covers.
    if ((rule.care_mask & cube.care_mask) == cube.care_mask &&
        (rule.values & cube.care_mask) == cube.values) {
      out.push_back(rule);
    }
  }
  return out;
}

std::vector<EffectReport> scan_effects(const TruthTable& table,
                                       const FrequencyTable& freq,
                                       const RuleSet& rules) {
  std::vector<EffectReport> reports;
  for (const auto& candidate : enumerate_candidates(table.schema)) {
    EffectReport report = added_error(candidate, table, freq);
    if (candidate.literals.size() == 1) {
      const int attr = candidate.literals[0].attribute;
      const auto one = conditional_success_rate(attr, true, freq);
      const auto zero = conditional_success_rate(attr, false, freq);
      if (one.status == RateStatus::kAvailable) report.conditional_rate_one = one.percent;
      if (zero.status == RateStatus::kAvailable) report.conditional_rate_zero = zero.percent;
    }
    report.replaceable_rules = suggest_replacements(candidate, rules);
    reports.push_back(std::move(report));
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const EffectReport& a, const EffectReport& b) {
                     return a.overall_error < b.overall_error;
                   });
  return reports;
}

}  // namespace rulemine
