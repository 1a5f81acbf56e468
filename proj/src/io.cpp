#include "rulemine/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rulemine/error.hpp"

namespace rulemine {

namespace {

std::string location(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Comma, semicolon and tab files split on that character; anything else
// splits on runs of whitespace.
char detect_delimiter(const std::string& first_line) {
  for (const char cand : {',', ';', '\t'}) {
    if (first_line.find(cand) != std::string::npos) return cand;
  }
  return ' ';
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> fields;
  if (delim == ' ') {
    std::istringstream stream(line);
    std::string field;
    while (stream >> field) fields.push_back(field);
    return fields;
  }
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, delim)) fields.push_back(trim(field));
  return fields;
}

double parse_number(const std::string& text, const std::string& source,
                    std::size_t line) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError(location(source, line) + ": expected a number, got \"" + text + "\"");
  }
}

std::uint64_t parse_count(const std::string& text, const std::string& source,
                          std::size_t line) {
  const double value = parse_number(text, source, line);
  if (value < 0 || value != static_cast<double>(static_cast<std::uint64_t>(value))) {
    throw ParseError(location(source, line) + ": expected a non-negative count, got \"" +
                     text + "\"");
  }
  return static_cast<std::uint64_t>(value);
}

bool is_number(const std::string& text) {
  try {
    std::size_t used = 0;
    std::stod(text, &used);
    return used == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

}  // namespace

AttributeSchema parse_schema(std::istream& in, const std::string& source_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(source_name + ": invalid schema JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("attributes") || !doc["attributes"].is_array()) {
    throw ConfigError(source_name + ": schema must be an object with an \"attributes\" array");
  }

  std::vector<AttributeSpec> attributes;
  for (const auto& entry : doc["attributes"]) {
    AttributeSpec spec;
    if (!entry.contains("name") || !entry["name"].is_string()) {
      throw ConfigError(source_name + ": every attribute needs a \"name\" string");
    }
    spec.name = entry["name"].get<std::string>();

    const std::string kind = entry.value("kind", "boolean");
    if (kind == "boolean") {
      spec.kind = AttributeKind::kBoolean;
    } else if (kind == "numeric-threshold") {
      spec.kind = AttributeKind::kNumericThreshold;
      if (!entry.contains("threshold") || !entry["threshold"].is_number()) {
        throw ConfigError(source_name + ": attribute " + spec.name +
                          " needs a numeric \"threshold\"");
      }
      spec.threshold = entry["threshold"].get<double>();
      const std::string polarity = entry.value("polarity", "above");
      if (polarity == "below") {
        spec.polarity = Polarity::kBelowIsOne;
      } else if (polarity == "above") {
        spec.polarity = Polarity::kAboveIsOne;
      } else {
        throw ConfigError(source_name + ": attribute " + spec.name +
                          ": polarity must be \"below\" or \"above\"");
      }
    } else {
      throw ConfigError(source_name + ": attribute " + spec.name +
                        ": unknown kind \"" + kind + "\"");
    }
    spec.label_one = entry.value("label_one", "");
    spec.label_zero = entry.value("label_zero", "");
    attributes.push_back(std::move(spec));
  }
  return make_schema(std::move(attributes));
}

AttributeSchema load_schema(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_schema(in, path);
}

std::vector<Observation> parse_records(std::istream& in, const AttributeSchema& schema,
                                       const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;

  // Header: all schema attributes plus exactly one outcome column.
  std::vector<std::string> header;
  char delim = ' ';
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    delim = detect_delimiter(line);
    header = split_fields(line, delim);
    break;
  }
  if (header.empty()) {
    throw ParseError(source_name + ": records file has no header row");
  }

  std::vector<int> attr_for_column(header.size(), -1);
  int outcome_column = -1;
  std::vector<bool> attr_seen(schema.k(), false);
  for (std::size_t col = 0; col < header.size(); ++col) {
    const auto it = std::find_if(schema.attributes.begin(), schema.attributes.end(),
                                 [&](const AttributeSpec& a) { return a.name == header[col]; });
    if (it != schema.attributes.end()) {
      const int idx = static_cast<int>(it - schema.attributes.begin());
      if (attr_seen[idx]) {
        throw ParseError(location(source_name, line_no) + ": duplicate column " + header[col]);
      }
      attr_seen[idx] = true;
      attr_for_column[col] = idx;
    } else if (outcome_column < 0) {
      outcome_column = static_cast<int>(col);
    } else {
      throw ParseError(location(source_name, line_no) + ": unknown column \"" + header[col] +
                       "\" (outcome column already found: \"" + header[outcome_column] + "\")");
    }
  }
  for (int i = 0; i < schema.k(); ++i) {
    if (!attr_seen[i]) {
      throw ParseError(location(source_name, line_no) + ": missing column for attribute " +
                       schema.attributes[i].name);
    }
  }
  if (outcome_column < 0) {
    throw ParseError(location(source_name, line_no) + ": no outcome column in header");
  }

  std::vector<Observation> observations;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line, delim);
    if (fields.size() != header.size()) {
      throw ParseError(location(source_name, line_no) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    Record record;
    Observation obs;
    for (std::size_t col = 0; col < fields.size(); ++col) {
      const double value = parse_number(fields[col], source_name, line_no);
      if (static_cast<int>(col) == outcome_column) {
        if (value != 0.0 && value != 1.0) {
          throw ParseError(location(source_name, line_no) + ": outcome must be 0 or 1");
        }
        obs.success = value == 1.0;
      } else {
        record[schema.attributes[attr_for_column[col]].name] = value;
      }
    }
    try {
      obs.combo = dichotomize(record, schema);
    } catch (const DataError& e) {
      throw ParseError(location(source_name, line_no) + ": " + e.what());
    }
    observations.push_back(obs);
  }
  return observations;
}

std::vector<Observation> load_records(const std::string& path,
                                      const AttributeSchema& schema) {
  auto in = open_or_throw(path);
  return parse_records(in, schema, path);
}

FrequencyTable parse_frequency(std::istream& in, const AttributeSchema& schema,
                               const std::string& source_name) {
  const int k = schema.k();
  std::vector<ComboCounts> counts(schema.combination_count());
  std::vector<bool> seen(schema.combination_count(), false);
  bool failures_present = false;
  bool saw_data = false;

  std::string line;
  std::size_t line_no = 0;
  char delim = ' ';
  bool delim_known = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!delim_known) {
      delim = detect_delimiter(line);
      delim_known = true;
    }
    const auto fields = split_fields(line, delim);
    if (!saw_data && !std::all_of(fields.begin(), fields.end(), is_number)) {
      continue;  // header row
    }
    if (fields.size() != static_cast<std::size_t>(k + 1) &&
        fields.size() != static_cast<std::size_t>(k + 2)) {
      throw ParseError(location(source_name, line_no) + ": expected " + std::to_string(k) +
                       " bit columns plus successes (and optional failures), got " +
                       std::to_string(fields.size()) + " fields");
    }
    const bool row_has_failures = fields.size() == static_cast<std::size_t>(k + 2);
    if (!saw_data) {
      failures_present = row_has_failures;
    } else if (row_has_failures != failures_present) {
      throw ParseError(location(source_name, line_no) +
                       ": inconsistent column count across rows");
    }
    saw_data = true;

    Combination combo = 0;
    for (int i = 0; i < k; ++i) {
      const double bit = parse_number(fields[i], source_name, line_no);
      if (bit != 0.0 && bit != 1.0) {
        throw ParseError(location(source_name, line_no) + ": bit columns must be 0 or 1");
      }
      if (bit == 1.0) combo |= 1u << schema.bit_position(i);
    }
    if (seen[combo]) {
      throw ParseError(location(source_name, line_no) + ": duplicate row for combination " +
                       combination_to_string(combo, schema));
    }
    seen[combo] = true;
    counts[combo].successes = parse_count(fields[k], source_name, line_no);
    if (failures_present) {
      counts[combo].failures = parse_count(fields[k + 1], source_name, line_no);
    }
  }
  if (!saw_data) {
    throw ParseError(source_name + ": frequency file has no data rows");
  }
  return build_frequency_table_from_counts(schema, counts, failures_present);
}

FrequencyTable load_frequency(const std::string& path, const AttributeSchema& schema) {
  auto in = open_or_throw(path);
  return parse_frequency(in, schema, path);
}

}  // namespace rulemine
