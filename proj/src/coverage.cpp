#include "rulemine/coverage.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rulemine/error.hpp"

namespace rulemine {

namespace {

// Success counts are summed as integers; percentages appear only at the
// edges, so 100% coverage compares exactly.
std::uint64_t covered_successes(const std::vector<bool>& covered,
                                const FrequencyTable& freq) {
  std::uint64_t sum = 0;
  for (Combination c = 0; c < covered.size(); ++c) {
    if (covered[c]) sum += freq.entries[c].successes;
  }
  return sum;
}

std::vector<bool> covered_set(const Implicant& rule, const AttributeSchema& schema) {
  std::vector<bool> covered(schema.combination_count(), false);
  for (const auto c : covered_combinations(rule, schema.k())) covered[c] = true;
  return covered;
}

std::vector<bool> union_covered_set(const RuleSet& rules) {
  std::vector<bool> covered(rules.schema.combination_count(), false);
  for (const auto& rule : rules.rules) {
    for (const auto c : covered_combinations(rule, rules.schema.k())) {
      covered[c] = true;
    }
  }
  return covered;
}

void require_successes(const FrequencyTable& freq) {
  if (freq.total_successes == 0) {
    throw DataError("success mass is undefined for a table with no successes");
  }
}

double as_percent(std::uint64_t part, std::uint64_t whole) {
  return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

double rule_success_mass(const Implicant& rule, const FrequencyTable& freq) {
  require_successes(freq);
  const auto covered = covered_set(rule, freq.schema);
  return as_percent(covered_successes(covered, freq), freq.total_successes);
}

double total_success_mass(const RuleSet& rules, const FrequencyTable& freq) {
  require_successes(freq);
  return as_percent(covered_successes(union_covered_set(rules), freq),
                    freq.total_successes);
}

double normalized_share(const Implicant& rule, const RuleSet& rules,
                        const FrequencyTable& freq) {
  require_successes(freq);
  const auto union_count = covered_successes(union_covered_set(rules), freq);
  if (union_count == 0) {
    throw DataError("normalized share is undefined: the ruleset covers no successes");
  }
  const auto rule_count = covered_successes(covered_set(rule, freq.schema), freq);
  return as_percent(rule_count, union_count);
}

std::vector<RuleCoverage> coverage_profile(const RuleSet& rules,
                                           const FrequencyTable& freq) {
  require_successes(freq);
  const auto union_count = covered_successes(union_covered_set(rules), freq);
  std::vector<RuleCoverage> out;
  out.reserve(rules.rules.size());
  for (const auto& rule : rules.rules) {
    const auto count = covered_successes(covered_set(rule, freq.schema), freq);
    RuleCoverage cov;
    cov.rule = rule;
    cov.success_mass = as_percent(count, freq.total_successes);
    cov.normalized_share = union_count == 0 ? 0.0 : as_percent(count, union_count);
    out.push_back(cov);
  }
  return out;
}

RuleSet acceptance_filter(const RuleSet& rules, const FrequencyTable& freq,
                          double min_pct) {
  std::vector<Implicant> kept;
  for (const auto& rule : rules.rules) {
    if (rule_success_mass(rule, freq) >= min_pct) kept.push_back(rule);
  }
  return RuleSet{rules.schema, std::move(kept)};
}

FilterResult greedy_filter(const RuleSet& rules, const FrequencyTable& freq,
                           double coverage_target) {
  if (coverage_target <= 0.0 || coverage_target > 100.0) {
    throw ConfigError("coverage target must lie in (0, 100]");
  }
  require_successes(freq);

  FilterResult result;
  const auto union_count = covered_successes(union_covered_set(rules), freq);
  if (union_count == 0) {
    // No rule describes any success; nothing can be selected.
    result.rejected = rules.rules;
    return result;
  }

  std::vector<Implicant> remaining = rules.rules;
  std::vector<bool> covered_so_far(freq.schema.combination_count(), false);
  std::uint64_t cumulative_count = 0;

  while (!remaining.empty()) {
    // Marginal mass against the union of everything already selected.
    std::size_t best = 0;
    std::uint64_t best_count = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      std::uint64_t marginal = 0;
      for (const auto c : covered_combinations(remaining[i], freq.schema.k())) {
        if (!covered_so_far[c]) marginal += freq.entries[c].successes;
      }
      const bool wins =
          i == 0 || marginal > best_count ||
          (marginal == best_count &&
           std::pair(remaining[i].literal_count(), remaining[i]) <
               std::pair(remaining[best].literal_count(), remaining[best]));
      if (wins) {
        best = i;
        best_count = marginal;
      }
    }

    const Implicant pick = remaining[best];
    remaining.erase(remaining.begin() + best);
    for (const auto c : covered_combinations(pick, freq.schema.k())) {
      covered_so_far[c] = true;
    }
    cumulative_count += best_count;

    SelectedRule sel;
    sel.rule = pick;
    sel.marginal_contribution = as_percent(best_count, union_count);
    sel.cumulative_coverage = as_percent(cumulative_count, union_count);
    result.selected.push_back(sel);

    if (sel.cumulative_coverage >= coverage_target) {
      result.target_met = true;
      break;
    }
  }

  result.rejected = std::move(remaining);
  return result;
}

}  // namespace rulemine
