#pragma once

#include <vector>

#include "rulemine/implicant.hpp"
#include "rulemine/tables.hpp"

namespace rulemine {

struct RuleCoverage {
  Implicant rule;
  double success_mass = 0.0;      // percent of all successes the rule covers
  double normalized_share = 0.0;  // success_mass / ruleset union mass, as percent
};

struct SelectedRule {
  Implicant rule;
  double marginal_contribution = 0.0;  // normalized percent added by this pick
  double cumulative_coverage = 0.0;    // running normalized total
};

struct FilterResult {
  std::vector<SelectedRule> selected;
  std::vector<Implicant> rejected;
  bool target_met = false;
};

// Percent of all successes falling in combinations the rule covers.
// Throws DataError when the table has no successes.
double rule_success_mass(const Implicant& rule, const FrequencyTable& freq);

// Success mass of the union of the rules' covered combinations.
double total_success_mass(const RuleSet& rules, const FrequencyTable& freq);

// rule_success_mass over the full ruleset's union mass, as percent.
// The denominator is always the whole set's union, regardless of any
// later filtering. Throws DataError when the union mass is zero.
double normalized_share(const Implicant& rule, const RuleSet& rules,
                        const FrequencyTable& freq);

// Coverage stats for every rule in the set, in rule order.
std::vector<RuleCoverage> coverage_profile(const RuleSet& rules,
                                           const FrequencyTable& freq);

// Keeps rules whose raw success mass is at least min_pct.
RuleSet acceptance_filter(const RuleSet& rules, const FrequencyTable& freq,
                          double min_pct);

// Greedy coverage loop: repeatedly picks the rule adding the greatest
// marginal normalized share (overlap measured on explicit covered sets
// against the union of prior picks; ties to fewer literals, then
// lexicographic), until cumulative coverage reaches the target or rules
// run out. coverage_target must lie in (0, 100].
FilterResult greedy_filter(const RuleSet& rules, const FrequencyTable& freq,
                           double coverage_target);

}  // namespace rulemine
