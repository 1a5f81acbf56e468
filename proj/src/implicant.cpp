#include "rulemine/implicant.hpp"

#include <algorithm>

namespace rulemine {

std::vector<Combination> covered_combinations(const Implicant& rule, int k) {
  const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1u);
  const std::uint32_t free_mask = full & ~rule.care_mask;
  std::vector<Combination> out;
  out.reserve(1u << std::popcount(free_mask));
  // Enumerate subsets of the free bits; the (sub - free) & free trick
  // walks them without touching fixed positions.
  std::uint32_t sub = 0;
  while (true) {
    out.push_back(rule.values | sub);
    if (sub == free_mask) break;
    sub = (sub - free_mask) & free_mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// True when everything `inner` covers is also covered by `outer`.
bool subsumed_by(const Implicant& inner, const Implicant& outer) {
  return (inner.care_mask & outer.care_mask) == outer.care_mask &&
         (inner.values & outer.care_mask) == outer.values;
}

}  // namespace

RuleSet make_rule_set(AttributeSchema schema, std::vector<Implicant> rules) {
  for (auto& r : rules) r = make_implicant(r.care_mask, r.values);
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  std::vector<Implicant> kept;
  for (const auto& r : rules) {
    bool redundant = false;
    for (const auto& other : rules) {
      if (!(other == r) && subsumed_by(r, other)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(r);
  }
  return RuleSet{std::move(schema), std::move(kept)};
}

bool evaluate(const RuleSet& rules, Combination c) {
  return std::any_of(rules.rules.begin(), rules.rules.end(),
                     [c](const Implicant& r) { return r.covers(c); });
}

std::string format_rule(const Implicant& rule, const AttributeSchema& schema) {
  if (rule.care_mask == 0) return "TRUE";
  std::string out;
  for (int i = 0; i < schema.k(); ++i) {
    const std::uint32_t bit = 1u << schema.bit_position(i);
    if (!(rule.care_mask & bit)) continue;
    out.push_back(schema.attributes[i].letter());
    if (!(rule.values & bit)) out.push_back('\'');
  }
  return out;
}

std::string format_rule_set(const RuleSet& rules) {
  if (rules.rules.empty()) return "FALSE";
  std::string out;
  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    if (i > 0) out += " + ";
    out += format_rule(rules.rules[i], rules.schema);
  }
  return out;
}

}  // namespace rulemine
