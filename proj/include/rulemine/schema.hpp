#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rulemine {

// A k-bit attribute-value combination. Attribute 0 occupies the most
// significant bit, matching the left-to-right column order of a
// frequency table.
using Combination = std::uint32_t;

inline constexpr int kMaxAttributes = 20;

enum class AttributeKind {
  kBoolean,          // raw values must already be 0/1
  kNumericThreshold  // raw values are dichotomized against a threshold
};

// Which side of the threshold maps to bit 1. The boundary value itself
// belongs to the "above" side (value >= threshold).
enum class Polarity { kBelowIsOne, kAboveIsOne };

struct AttributeSpec {
  std::string name;
  AttributeKind kind = AttributeKind::kBoolean;
  std::optional<double> threshold;  // required iff kind is numeric-threshold
  Polarity polarity = Polarity::kAboveIsOne;
  std::string label_one;   // optional display text for value 1
  std::string label_zero;  // optional display text for value 0

  // Single-character tag used in rule notation, e.g. "ET + ESJ".
  char letter() const;
};

struct AttributeSchema {
  std::vector<AttributeSpec> attributes;

  int k() const { return static_cast<int>(attributes.size()); }
  std::uint32_t combination_count() const { return 1u << k(); }

  // Bit position of attribute `index`; index 0 is the MSB.
  int bit_position(int index) const { return k() - 1 - index; }
  bool bit_of(Combination c, int index) const {
    return (c >> bit_position(index)) & 1u;
  }
};

// Validates names (non-empty, unique) and 1 <= k <= 20; throws ConfigError.
AttributeSchema make_schema(std::vector<AttributeSpec> attributes);

// Raw record keyed by attribute name; values are numeric (booleans as 0/1).
using Record = std::map<std::string, double>;

// Maps every attribute of `record` to 0/1 per its spec and packs the bits
// in schema order. Throws DataError on missing or invalid values.
Combination dichotomize(const Record& record, const AttributeSchema& schema);

// Renders a combination as a bit string in schema order, e.g. "1010".
std::string combination_to_string(Combination c, const AttributeSchema& schema);

}  // namespace rulemine
