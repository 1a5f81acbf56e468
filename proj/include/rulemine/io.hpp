#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rulemine/schema.hpp"
#include "rulemine/tables.hpp"

namespace rulemine {

// Schema file: JSON with an "attributes" array; each entry carries
// name, kind ("boolean" | "numeric-threshold"), and for thresholded
// attributes threshold plus polarity ("below" | "above" = side mapped
// to 1). label_one / label_zero are optional display text.
AttributeSchema load_schema(const std::string& path);
AttributeSchema parse_schema(std::istream& in, const std::string& source_name);

// Records file: delimited text (comma, semicolon, tab or spaces), header
// row naming every schema attribute plus exactly one outcome column
// (values 0/1). Columns may appear in any order. Incomplete records are
// rejected, not imputed.
std::vector<Observation> load_records(const std::string& path,
                                      const AttributeSchema& schema);
std::vector<Observation> parse_records(std::istream& in, const AttributeSchema& schema,
                                       const std::string& source_name);

// Frequency file: one row per combination with k bit columns, a successes
// count and an optional failures count. A non-numeric first row is treated
// as a header. Missing combinations keep zero counts; duplicate rows for
// one combination are an error.
FrequencyTable load_frequency(const std::string& path, const AttributeSchema& schema);
FrequencyTable parse_frequency(std::istream& in, const AttributeSchema& schema,
                               const std::string& source_name);

}  // namespace rulemine
