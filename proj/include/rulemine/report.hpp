#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rulemine/coverage.hpp"
#include "rulemine/effects.hpp"
#include "rulemine/implicant.hpp"
#include "rulemine/tables.hpp"

namespace rulemine {

enum class InputKind { kRecords, kFrequency };
enum class OutputFormat { kText, kStructured };

struct PipelineConfig {
  std::string schema_path;
  std::string input_path;
  InputKind input_kind = InputKind::kFrequency;

  ClassifyConfig classify;

  double coverage_target = 90.0;   // percent, (0, 100]
  double acceptance_level = 0.0;   // percent; 0 keeps every rule

  // Phases beyond ingestion; the CLI subcommands toggle these.
  bool run_minimize = true;
  bool run_filter = true;
  bool run_effects = true;
  bool emit_karnaugh = false;

  bool interactive = false;
  // Pre-recorded Phase-IV decisions keyed by candidate notation ("E",
  // "EJ'", ...). Candidates not listed are rejected.
  std::map<std::string, bool> decisions;

  OutputFormat format = OutputFormat::kText;
};

// Supplies the interactive choices; the CLI implements this over stdin.
class DecisionPrompt {
 public:
  virtual ~DecisionPrompt() = default;
  virtual double confirm_coverage_target(double proposed) = 0;
  virtual bool accept_candidate(const EffectReport& report,
                                const std::string& name) = 0;
};

struct DecisionEntry {
  std::string subject;  // "coverage_target" or a candidate name
  std::string choice;   // the confirmed value, "accept" or "reject"
};

struct Report {
  AttributeSchema schema;
  std::optional<FrequencyTable> frequency;
  std::optional<TruthTable> truth;
  std::optional<RuleSet> rules;
  std::vector<RuleCoverage> rule_coverage;    // per-rule masses, rule order
  std::optional<double> ruleset_union_mass;   // percent
  std::optional<FilterResult> filter;
  double coverage_target = 0.0;               // effective (confirmed) target
  double acceptance_level = 0.0;
  std::optional<std::vector<EffectReport>> effects;
  std::optional<std::string> karnaugh;
  std::vector<DecisionEntry> decisions;
  // Section name -> reason, for sections that did not run.
  std::map<std::string, std::string> skipped;
};

// Runs Phase I through IV as configured. `prompt` may be null; it is
// consulted only when cfg.interactive is set.
Report run_pipeline(const PipelineConfig& cfg, DecisionPrompt* prompt = nullptr);

// Deterministic renderings: identical reports produce identical bytes.
std::string report_to_text(const Report& report);
std::string report_to_structured(const Report& report);

}  // namespace rulemine
