#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "rulemine/schema.hpp"
#include "rulemine/tables.hpp"

namespace rulemine {

// A cube: fixed attributes (care_mask bit set) must match `values`;
// the rest are don't-cares. Canonical form keeps value bits outside
// care_mask at zero so equality is structural.
struct Implicant {
  std::uint32_t care_mask = 0;
  std::uint32_t values = 0;

  bool covers(Combination c) const { return (c & care_mask) == values; }
  int literal_count() const { return std::popcount(care_mask); }

  friend bool operator==(const Implicant&, const Implicant&) = default;
  // Orders by (care_mask, values); the tie-break order used throughout.
  friend auto operator<=>(const Implicant&, const Implicant&) = default;
};

// Canonicalizes by zeroing value bits outside the care mask.
inline Implicant make_implicant(std::uint32_t care_mask, std::uint32_t values) {
  return Implicant{care_mask, values & care_mask};
}

// All combinations covered by the cube, ascending. 2^(k - literals) entries.
std::vector<Combination> covered_combinations(const Implicant& rule, int k);

// Minimized Boolean function: success iff some rule covers the combination.
struct RuleSet {
  AttributeSchema schema;
  std::vector<Implicant> rules;  // sorted, no rule subsumed by another

  bool empty() const { return rules.empty(); }
  std::size_t size() const { return rules.size(); }
};

// Sorts, deduplicates and drops subsumed cubes.
RuleSet make_rule_set(AttributeSchema schema, std::vector<Implicant> rules);

bool evaluate(const RuleSet& rules, Combination c);

// Paper notation: attribute letters in schema order, "'" marks a 0-literal,
// don't-cares omitted; the empty cube renders as "TRUE".
std::string format_rule(const Implicant& rule, const AttributeSchema& schema);

// Terms joined by " + "; an empty set renders as "FALSE".
std::string format_rule_set(const RuleSet& rules);

}  // namespace rulemine
