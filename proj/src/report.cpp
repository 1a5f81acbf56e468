#include "rulemine/report.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rulemine/error.hpp"
#include "rulemine/io.hpp"
#include "rulemine/karnaugh.hpp"
#include "rulemine/minimize.hpp"

namespace rulemine {

namespace {

std::string pct_int(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0f%%", value);
  return buf;
}

std::string pct_one_decimal(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", value);
  return buf;
}

std::string number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

// Per-attribute 0/1/- pattern in schema order, e.g. "1-1-" for ET.
std::string rule_pattern(const Implicant& rule, const AttributeSchema& schema) {
  std::string out(schema.k(), '-');
  for (int i = 0; i < schema.k(); ++i) {
    const std::uint32_t bit = 1u << schema.bit_position(i);
    if (rule.care_mask & bit) out[i] = (rule.values & bit) ? '1' : '0';
  }
  return out;
}

void validate_config(const PipelineConfig& cfg) {
  if (cfg.schema_path.empty()) throw ConfigError("no schema file given");
  if (cfg.input_path.empty()) throw ConfigError("no input file given");
  if (cfg.classify.pct_threshold < 0 || cfg.classify.pct_threshold > 100) {
    throw ConfigError("--pct-threshold must lie in [0, 100]");
  }
  if (cfg.run_filter &&
      (cfg.coverage_target <= 0 || cfg.coverage_target > 100)) {
    throw ConfigError("--coverage-target must lie in (0, 100]");
  }
  if (cfg.acceptance_level < 0 || cfg.acceptance_level > 100) {
    throw ConfigError("--acceptance-level must lie in [0, 100]");
  }
}

}  // namespace

Report run_pipeline(const PipelineConfig& cfg, DecisionPrompt* prompt) {
  validate_config(cfg);

  Report report;
  report.schema = load_schema(cfg.schema_path);
  report.acceptance_level = cfg.acceptance_level;

  // Phase I
  FrequencyTable freq;
  if (cfg.input_kind == InputKind::kRecords) {
    freq = build_frequency_table(load_records(cfg.input_path, report.schema),
                                 report.schema);
  } else {
    freq = load_frequency(cfg.input_path, report.schema);
  }
  TruthTable truth = classify(freq, cfg.classify);
  report.frequency = freq;
  report.truth = truth;

  // Phase II
  if (!cfg.run_minimize) {
    report.skipped["phase2"] = "not requested";
    report.skipped["phase3"] = "not requested";
    report.skipped["phase4"] = "not requested";
    return report;
  }
  RuleSet rules = minimize(truth);
  report.rules = rules;

  const bool no_rules = rules.empty();

  // Phase III
  if (!cfg.run_filter) {
    report.skipped["phase3"] = "not requested";
  } else if (no_rules) {
    report.skipped["phase3"] = "empty ruleset";
  } else {
    double target = cfg.coverage_target;
    if (cfg.interactive && prompt != nullptr) {
      target = prompt->confirm_coverage_target(target);
      if (target <= 0 || target > 100) {
        throw ConfigError("confirmed coverage target must lie in (0, 100]");
      }
    }
    report.coverage_target = target;
    report.decisions.push_back({"coverage_target", number(target)});

    report.rule_coverage = coverage_profile(rules, freq);
    report.ruleset_union_mass = total_success_mass(rules, freq);
    const RuleSet working = cfg.acceptance_level > 0
                                ? acceptance_filter(rules, freq, cfg.acceptance_level)
                                : rules;
    report.filter = greedy_filter(working, freq, target);
  }

  // Phase IV
  if (!cfg.run_effects) {
    report.skipped["phase4"] = "not requested";
  } else if (no_rules) {
    report.skipped["phase4"] = "empty ruleset";
  } else {
    auto effects = scan_effects(truth, freq, rules);

    std::set<std::string> known;
    for (const auto& er : effects) {
      known.insert(format_candidate(er.candidate, report.schema));
    }
    for (const auto& [name, _] : cfg.decisions) {
      if (!known.contains(name)) {
        throw ConfigError("--decisions names unknown candidate \"" + name + "\"");
      }
    }

    for (const auto& er : effects) {
      const std::string name = format_candidate(er.candidate, report.schema);
      bool accept = false;
      if (cfg.interactive && prompt != nullptr) {
        accept = prompt->accept_candidate(er, name);
      } else if (const auto it = cfg.decisions.find(name); it != cfg.decisions.end()) {
        accept = it->second;
      }
      report.decisions.push_back({name, accept ? "accept" : "reject"});
    }
    report.effects = std::move(effects);
  }

  if (cfg.emit_karnaugh) {
    report.karnaugh = render_karnaugh(truth, rules);
  } else {
    report.skipped["karnaugh"] = "not requested";
  }
  return report;
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  const auto& schema = report.schema;

  out << "schema: k=" << schema.k() << " [";
  for (int i = 0; i < schema.k(); ++i) {
    if (i) out << ' ';
    out << schema.attributes[i].letter();
  }
  out << "]\n";
  for (const auto& attr : schema.attributes) {
    out << "  " << attr.letter() << " = " << attr.name;
    if (!attr.label_one.empty() || !attr.label_zero.empty()) {
      out << " (1=" << attr.label_one << ", 0=" << attr.label_zero << ")";
    }
    if (attr.kind == AttributeKind::kNumericThreshold) {
      out << " [threshold " << number(*attr.threshold) << ", "
          << (attr.polarity == Polarity::kBelowIsOne ? "below" : "above") << "=1]";
    }
    out << '\n';
  }

  out << "\n== Phase I: frequency and truth table ==\n";
  if (report.frequency) {
    const auto& freq = *report.frequency;
    out << "observations: " << freq.total_observations
        << ", successes: " << freq.total_successes
        << (freq.failures_recorded ? "" : " (failures not recorded)") << '\n';
    out << "combination  successes  failures  share\n";
    for (Combination c = 0; c < freq.entries.size(); ++c) {
      const auto& e = freq.entries[c];
      if (e.successes == 0 && e.failures == 0) continue;
      char line[96];
      std::snprintf(line, sizeof line, "%-12s %9llu %9llu  %s\n",
                    combination_to_string(c, schema).c_str(),
                    static_cast<unsigned long long>(e.successes),
                    static_cast<unsigned long long>(e.failures),
                    pct_one_decimal(freq.success_share(c)).c_str());
      out << line;
    }
  }
  if (report.truth) {
    out << "success combinations:";
    const auto wins = report.truth->success_combinations();
    if (wins.empty()) {
      out << " (none)";
    } else {
      for (const auto c : wins) out << ' ' << combination_to_string(c, schema);
    }
    out << '\n';
  }

  out << "\n== Phase II: minimized rules ==\n";
  if (const auto it = report.skipped.find("phase2"); it != report.skipped.end()) {
    out << "skipped: " << it->second << '\n';
  } else if (report.rules) {
    out << "Y = " << format_rule_set(*report.rules) << '\n';
    for (const auto& rule : report.rules->rules) {
      out << "  " << format_rule(rule, schema) << "  [" << rule_pattern(rule, schema)
          << "] covers " << covered_combinations(rule, schema.k()).size()
          << " combinations\n";
    }
  }

  out << "\n== Phase III: coverage filter ==\n";
  if (const auto it = report.skipped.find("phase3"); it != report.skipped.end()) {
    out << "skipped: " << it->second << '\n';
  } else {
    out << "rule  mass  normalized\n";
    for (const auto& cov : report.rule_coverage) {
      out << "  " << format_rule(cov.rule, schema) << "  " << pct_int(cov.success_mass)
          << "  " << pct_int(cov.normalized_share) << '\n';
    }
    if (report.ruleset_union_mass) {
      out << "union mass: " << pct_int(*report.ruleset_union_mass) << '\n';
    }
    out << "acceptance level: " << pct_int(report.acceptance_level)
        << ", coverage target: " << pct_int(report.coverage_target) << '\n';
    if (report.filter) {
      int step = 0;
      for (const auto& sel : report.filter->selected) {
        out << "  " << ++step << ". " << format_rule(sel.rule, schema) << "  +"
            << pct_int(sel.marginal_contribution) << " -> "
            << pct_int(sel.cumulative_coverage) << '\n';
      }
      out << "target met: " << (report.filter->target_met ? "yes" : "no") << '\n';
      out << "rejected:";
      if (report.filter->rejected.empty()) {
        out << " (none)";
      } else {
        for (const auto& rule : report.filter->rejected) {
          out << ' ' << format_rule(rule, schema);
        }
      }
      out << '\n';
    }
  }

  out << "\n== Phase IV: main and pair effects ==\n";
  if (const auto it = report.skipped.find("phase4"); it != report.skipped.end()) {
    out << "skipped: " << it->second << '\n';
  } else if (report.effects) {
    out << "candidate  n  m  expected  actual  added  overall  replaces\n";
    for (const auto& er : *report.effects) {
      char line[160];
      std::snprintf(line, sizeof line, "%-9s %2u %2u %9s %7llu %6s %8s ",
                    format_candidate(er.candidate, schema).c_str(), er.covered_count,
                    er.inconsistent_count, number(er.expected_cases).c_str(),
                    static_cast<unsigned long long>(er.actual_cases),
                    pct_one_decimal(100.0 * er.added_error).c_str(),
                    pct_one_decimal(100.0 * er.overall_error).c_str());
      out << line;
      if (er.replaceable_rules.empty()) {
        out << '-';
      } else {
        for (std::size_t i = 0; i < er.replaceable_rules.size(); ++i) {
          if (i) out << ',';
          out << format_rule(er.replaceable_rules[i], schema);
        }
      }
      if (er.negative_deviation) out << "  [exceeds expectation]";
      if (er.conditional_rate_one || er.conditional_rate_zero) {
        out << "  rate(1)="
            << (er.conditional_rate_one ? pct_one_decimal(*er.conditional_rate_one) : "n/a")
            << " rate(0)="
            << (er.conditional_rate_zero ? pct_one_decimal(*er.conditional_rate_zero) : "n/a");
      }
      out << '\n';
    }
  }

  out << "\n== decisions ==\n";
  if (report.decisions.empty()) {
    out << "(none)\n";
  } else {
    for (const auto& d : report.decisions) {
      out << d.subject << " = " << d.choice << '\n';
    }
  }

  if (report.karnaugh) {
    out << "\n== Karnaugh map ==\n" << *report.karnaugh;
  }
  return out.str();
}

std::string report_to_structured(const Report& report) {
  using json = nlohmann::ordered_json;
  const auto& schema = report.schema;
  json doc;

  json attrs = json::array();
  for (const auto& attr : schema.attributes) {
    json a;
    a["name"] = attr.name;
    a["letter"] = std::string(1, attr.letter());
    a["kind"] = attr.kind == AttributeKind::kBoolean ? "boolean" : "numeric-threshold";
    if (attr.threshold) {
      a["threshold"] = *attr.threshold;
      a["polarity"] = attr.polarity == Polarity::kBelowIsOne ? "below" : "above";
    }
    if (!attr.label_one.empty()) a["label_one"] = attr.label_one;
    if (!attr.label_zero.empty()) a["label_zero"] = attr.label_zero;
    attrs.push_back(std::move(a));
  }
  doc["schema"] = {{"k", schema.k()}, {"attributes", std::move(attrs)}};

  if (report.frequency) {
    const auto& freq = *report.frequency;
    json rows = json::array();
    for (Combination c = 0; c < freq.entries.size(); ++c) {
      const auto& e = freq.entries[c];
      if (e.successes == 0 && e.failures == 0) continue;
      json row;
      row["combination"] = combination_to_string(c, schema);
      row["successes"] = e.successes;
      row["failures"] = e.failures;
      row["share_pct"] = freq.success_share(c);
      if (const auto rate = freq.success_rate(c)) row["rate_pct"] = *rate;
      rows.push_back(std::move(row));
    }
    doc["phase1"]["frequency"] = {{"total_successes", freq.total_successes},
                                  {"total_observations", freq.total_observations},
                                  {"failures_recorded", freq.failures_recorded},
                                  {"entries", std::move(rows)}};
  }
  if (report.truth) {
    json wins = json::array();
    for (const auto c : report.truth->success_combinations()) {
      wins.push_back(combination_to_string(c, schema));
    }
    doc["phase1"]["truth_table"] = {{"k", schema.k()}, {"successes", std::move(wins)}};
  }

  auto skipped_or = [&](const char* phase) -> json* {
    if (const auto it = report.skipped.find(phase); it != report.skipped.end()) {
      doc[phase] = {{"skipped", it->second}};
      return nullptr;
    }
    return &doc[phase];
  };

  if (json* phase2 = skipped_or("phase2"); phase2 != nullptr && report.rules) {
    json rules = json::array();
    for (const auto& rule : report.rules->rules) {
      rules.push_back({{"rule", format_rule(rule, schema)},
                       {"pattern", rule_pattern(rule, schema)},
                       {"literals", rule.literal_count()}});
    }
    (*phase2)["expression"] = format_rule_set(*report.rules);
    (*phase2)["rules"] = std::move(rules);
  }

  if (json* phase3 = skipped_or("phase3"); phase3 != nullptr) {
    (*phase3)["acceptance_level_pct"] = report.acceptance_level;
    (*phase3)["coverage_target_pct"] = report.coverage_target;
    if (report.ruleset_union_mass) {
      (*phase3)["union_mass_pct"] = *report.ruleset_union_mass;
    }
    json coverage = json::array();
    for (const auto& cov : report.rule_coverage) {
      coverage.push_back({{"rule", format_rule(cov.rule, schema)},
                          {"success_mass_pct", cov.success_mass},
                          {"normalized_share_pct", cov.normalized_share}});
    }
    (*phase3)["rules"] = std::move(coverage);
    if (report.filter) {
      json selected = json::array();
      for (const auto& sel : report.filter->selected) {
        selected.push_back({{"rule", format_rule(sel.rule, schema)},
                            {"marginal_pct", sel.marginal_contribution},
                            {"cumulative_pct", sel.cumulative_coverage}});
      }
      json rejected = json::array();
      for (const auto& rule : report.filter->rejected) {
        rejected.push_back(format_rule(rule, schema));
      }
      (*phase3)["selected"] = std::move(selected);
      (*phase3)["rejected"] = std::move(rejected);
      (*phase3)["target_met"] = report.filter->target_met;
    }
  }

  if (json* phase4 = skipped_or("phase4"); phase4 != nullptr && report.effects) {
    json candidates = json::array();
    for (const auto& er : *report.effects) {
      json e;
      e["candidate"] = format_candidate(er.candidate, schema);
      e["covered"] = er.covered_count;
      e["inconsistent"] = er.inconsistent_count;
      e["expected_cases"] = er.expected_cases;
      e["actual_cases"] = er.actual_cases;
      e["added_error_pct"] = 100.0 * er.added_error;
      e["overall_error_pct"] = 100.0 * er.overall_error;
      e["negative_deviation"] = er.negative_deviation;
      if (er.conditional_rate_one) e["conditional_rate_one_pct"] = *er.conditional_rate_one;
      if (er.conditional_rate_zero) e["conditional_rate_zero_pct"] = *er.conditional_rate_zero;
      json replaces = json::array();
      for (const auto& rule : er.replaceable_rules) {
        replaces.push_back(format_rule(rule, schema));
      }
      e["replaces"] = std::move(replaces);
      candidates.push_back(std::move(e));
    }
    (*phase4)["candidates"] = std::move(candidates);
  }

  json decisions = json::array();
  for (const auto& d : report.decisions) {
    decisions.push_back({{"subject", d.subject}, {"choice", d.choice}});
  }
  doc["decisions"] = std::move(decisions);

  if (report.karnaugh) {
    doc["karnaugh"] = *report.karnaugh;
  } else if (const auto it = report.skipped.find("karnaugh"); it != report.skipped.end()) {
    doc["karnaugh"] = {{"skipped", it->second}};
  }

  return doc.dump(2) + "\n";
}

}  // namespace rulemine
