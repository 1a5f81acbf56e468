#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rulemine/implicant.hpp"
#include "rulemine/tables.hpp"

namespace rulemine {

// Reflected Gray sequence over `bits` bits: 0, 1 for one bit and
// 00, 01, 11, 10 for two. Adjacent entries differ in exactly one bit.
std::vector<std::uint32_t> gray_sequence(int bits);

// Text Karnaugh map for 2 <= k <= 4: columns are the Gray-ordered values
// of the first ceil(k/2) attributes, rows the Gray-ordered rest. Below
// the grid each rule of the minimized set is listed with the cells it
// covers. Throws ConfigError for k outside [2, 4].
std::string render_karnaugh(const TruthTable& table);
std::string render_karnaugh(const TruthTable& table, const RuleSet& rules);

}  // namespace rulemine
