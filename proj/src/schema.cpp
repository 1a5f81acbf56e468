#include "rulemine/schema.hpp"

#include <cctype>
#include <cmath>
#include <set>

#include "rulemine/error.hpp"

namespace rulemine {

char AttributeSpec::letter() const {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
}

AttributeSchema make_schema(std::vector<AttributeSpec> attributes) {
  const auto k = attributes.size();
  if (k < 1 || k > kMaxAttributes) {
    throw ConfigError("schema must have between 1 and " +
                      std::to_string(kMaxAttributes) + " attributes, got " +
                      std::to_string(k));
  }
  std::set<std::string> names;
  for (const auto& attr : attributes) {
    if (attr.name.empty()) {
      throw ConfigError("attribute name must not be empty");
    }
    if (!names.insert(attr.name).second) {
      throw ConfigError("duplicate attribute name: " + attr.name);
    }
    const bool has_threshold = attr.threshold.has_value();
    if ((attr.kind == AttributeKind::kNumericThreshold) != has_threshold) {
      throw ConfigError("attribute " + attr.name +
                        (has_threshold ? ": threshold given for a boolean attribute"
                                       : ": numeric-threshold attribute needs a threshold"));
    }
  }
  return AttributeSchema{std::move(attributes)};
}

namespace {

bool dichotomize_one(const AttributeSpec& spec, double raw) {
  switch (spec.kind) {
    case AttributeKind::kBoolean:
      if (raw != 0.0 && raw != 1.0) {
        throw DataError("attribute " + spec.name + ": boolean value must be 0 or 1, got " +
                        std::to_string(raw));
      }
      return raw == 1.0;
    case AttributeKind::kNumericThreshold: {
      if (std::isnan(raw)) {
        throw DataError("attribute " + spec.name + ": value is not a number");
      }
      const bool above = raw >= *spec.threshold;
      return spec.polarity == Polarity::kAboveIsOne ? above : !above;
    }
  }
  throw DataError("attribute " + spec.name + ": unknown kind");
}

}  // namespace

Combination dichotomize(const Record& record, const AttributeSchema& schema) {
  Combination bits = 0;
  for (int i = 0; i < schema.k(); ++i) {
    const auto& spec = schema.attributes[i];
    const auto it = record.find(spec.name);
    if (it == record.end()) {
      throw DataError("record is missing a value for attribute " + spec.name);
    }
    if (dichotomize_one(spec, it->second)) {
      bits |= 1u << schema.bit_position(i);
    }
  }
  return bits;
}

std::string combination_to_string(Combination c, const AttributeSchema& schema) {
  std::string out;
  out.reserve(schema.k());
  for (int i = 0; i < schema.k(); ++i) {
    out.push_back(schema.bit_of(c, i) ? '1' : '0');
  }
  return out;
}

}  // namespace rulemine
