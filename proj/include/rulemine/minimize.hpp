#pragma once

#include <vector>

#include "rulemine/implicant.hpp"
#include "rulemine/tables.hpp"

namespace rulemine {

// All prime implicants of the table's success set: cubes covering only
// successes that cannot be enlarged by dropping any literal. Sorted by
// (care_mask, values). An all-failure table yields an empty vector.
std::vector<Implicant> generate_prime_implicants(const TruthTable& table);

// Exact minimum cover of the success combinations: fewest rules, then
// fewest total literals, then lexicographically smallest sorted
// (care_mask, values) sequence. Throws std::logic_error if the primes
// fail to cover some success.
RuleSet select_cover(const std::vector<Implicant>& primes, const TruthTable& table);

// generate_prime_implicants followed by select_cover. The result agrees
// with the table on every combination.
RuleSet minimize(const TruthTable& table);

}  // namespace rulemine
