#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rulemine/error.hpp"
#include "rulemine/report.hpp"

namespace {

using namespace rulemine;

// Interactive choices over stdin/stdout.
class ConsolePrompt : public DecisionPrompt {
 public:
  double confirm_coverage_target(double proposed) override {
    std::cout << "coverage target % [" << proposed << "]: " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line) || line.find_first_not_of(" \t") == std::string::npos) {
      return proposed;
    }
    try {
      return std::stod(line);
    } catch (const std::exception&) {
      throw ConfigError("not a number: " + line);
    }
  }

  bool accept_candidate(const EffectReport& report, const std::string& name) override {
    std::cout << name << ": covers " << report.covered_count << ", inconsistent "
              << report.inconsistent_count << ", added error "
              << 100.0 * report.added_error << "%, overall "
              << 100.0 * report.overall_error << "%";
    if (!report.replaceable_rules.empty()) {
      std::cout << " (could replace " << report.replaceable_rules.size() << " rule(s))";
    }
    std::cout << "\naccept " << name << "? [y/N] " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) return false;
    return !line.empty() && (line[0] == 'y' || line[0] == 'Y');
  }
};

std::map<std::string, bool> parse_decisions(const std::string& text) {
  std::map<std::string, bool> out;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    auto sep = token.find('=');
    if (sep == std::string::npos) sep = token.find(':');
    if (sep == std::string::npos) {
      throw ConfigError("--decisions entries look like NAME=accept|reject, got \"" +
                        token + "\"");
    }
    const std::string name = token.substr(0, sep);
    const std::string verdict = token.substr(sep + 1);
    bool accept;
    if (verdict == "accept" || verdict == "y" || verdict == "yes") {
      accept = true;
    } else if (verdict == "reject" || verdict == "n" || verdict == "no") {
      accept = false;
    } else {
      throw ConfigError("--decisions verdict must be accept or reject, got \"" +
                        verdict + "\"");
    }
    out[name] = accept;
  }
  return out;
}

struct CliOptions {
  PipelineConfig cfg;
  std::string mode = "share";
  std::string input_kind = "frequency";
  std::string format = "text";
  std::string decisions;
  std::string output_path;
};

void add_input_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--schema", opt.cfg.schema_path, "schema file (JSON)")->required();
  cmd->add_option("--input", opt.cfg.input_path, "data file")->required();
  cmd->add_option("--input-kind", opt.input_kind, "records | frequency")
      ->check(CLI::IsMember({"records", "frequency"}))
      ->capture_default_str();
  cmd->add_option("--mode", opt.mode, "threshold applies to: rate | share")
      ->check(CLI::IsMember({"rate", "share"}))
      ->capture_default_str();
  cmd->add_option("--pct-threshold", opt.cfg.classify.pct_threshold,
                  "winning percentage threshold [0,100]")
      ->capture_default_str();
  cmd->add_option("--min-successes", opt.cfg.classify.min_successes,
                  "minimum success count per winning combination")
      ->capture_default_str();
  cmd->add_option("--format", opt.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--output", opt.output_path, "write the report here instead of stdout");
}

void add_filter_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--coverage-target", opt.cfg.coverage_target,
                  "stop the greedy loop at this success coverage % (0,100]")
      ->capture_default_str();
  cmd->add_option("--acceptance-level", opt.cfg.acceptance_level,
                  "drop rules describing less than this % of successes")
      ->capture_default_str();
}

int run(CliOptions& opt) {
  opt.cfg.classify.mode = opt.mode == "rate" ? ThresholdMode::kRate : ThresholdMode::kShare;
  opt.cfg.input_kind =
      opt.input_kind == "records" ? InputKind::kRecords : InputKind::kFrequency;
  opt.cfg.format = opt.format == "text" ? OutputFormat::kText : OutputFormat::kStructured;
  if (!opt.decisions.empty()) {
    if (opt.cfg.interactive) {
      throw ConfigError("--decisions replaces the interactive prompts; drop --interactive");
    }
    opt.cfg.decisions = parse_decisions(opt.decisions);
  }

  ConsolePrompt prompt;
  const Report report = run_pipeline(opt.cfg, opt.cfg.interactive ? &prompt : nullptr);
  const std::string rendered = opt.cfg.format == OutputFormat::kText
                                   ? report_to_text(report)
                                   : report_to_structured(report);
  if (opt.output_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write to " + opt.output_path);
    out << rendered;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rulemine: minimal Boolean success rules from dichotomous data"};
  app.require_subcommand(1);

  CliOptions opt;

  auto* ingest = app.add_subcommand(
      "ingest", "build the frequency table and thresholded truth table");
  add_input_flags(ingest, opt);

  auto* minimize = app.add_subcommand(
      "minimize", "ingest, then compute the minimal rule set");
  add_input_flags(minimize, opt);

  auto* filter = app.add_subcommand(
      "filter", "ingest, minimize, then run the coverage filter");
  add_input_flags(filter, opt);
  add_filter_flags(filter, opt);
  filter->add_flag("--interactive", opt.cfg.interactive,
                   "confirm the coverage target interactively");

  auto* effects = app.add_subcommand(
      "effects", "ingest, minimize, then scan main and pair effects");
  add_input_flags(effects, opt);
  effects->add_flag("--interactive", opt.cfg.interactive,
                    "decide each candidate interactively");
  effects->add_option("--decisions", opt.decisions,
                      "pre-recorded candidate decisions, e.g. E=accept,EJ=reject");

  auto* karnaugh = app.add_subcommand(
      "karnaugh", "ingest, minimize, and render the Karnaugh map (k = 2..4)");
  add_input_flags(karnaugh, opt);

  auto* pipeline = app.add_subcommand("pipeline", "run all four phases");
  add_input_flags(pipeline, opt);
  add_filter_flags(pipeline, opt);
  pipeline->add_flag("--interactive", opt.cfg.interactive,
                     "confirm the target and decide candidates interactively");
  pipeline->add_option("--decisions", opt.decisions,
                       "pre-recorded candidate decisions, e.g. E=accept,EJ=reject");
  pipeline->add_flag("--karnaugh", opt.cfg.emit_karnaugh,
                     "include a Karnaugh map (k = 2..4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand(ingest)) {
    opt.cfg.run_minimize = opt.cfg.run_filter = opt.cfg.run_effects = false;
  } else if (app.got_subcommand(minimize)) {
    opt.cfg.run_filter = opt.cfg.run_effects = false;
  } else if (app.got_subcommand(filter)) {
    opt.cfg.run_effects = false;
  } else if (app.got_subcommand(effects)) {
    opt.cfg.run_filter = false;
  } else if (app.got_subcommand(karnaugh)) {
    opt.cfg.run_filter = opt.cfg.run_effects = false;
    opt.cfg.emit_karnaugh = true;
  }

  try {
    return run(opt);
  } catch (const rulemine::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rulemine::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
