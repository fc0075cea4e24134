// Copyright 2026 The reqlens authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reqlens/frontend.hpp"
#include "reqlens/testgen.hpp"

namespace {

using namespace reqlens;

constexpr int kExitUsage = 2;

struct CommonArgs {
  std::vector<std::string> files;
  std::string format = "text";
};

/// Reads every input, reporting missing or unreadable paths to stderr.
/// Returns nullopt on any IO failure (exit 2).
std::optional<std::vector<NamedSource>> load_inputs(const std::vector<std::string>& files) {
  std::vector<std::string> io_errors;
  std::vector<std::string> paths = expand_inputs(files, io_errors);
  std::vector<NamedSource> sources;
  for (const std::string& path : paths) {
    std::optional<std::string> text = read_file(path);
    if (!text) {
      io_errors.push_back("cannot read file: " + path);
      continue;
    }
    sources.emplace_back(path, std::move(*text));
  }
  for (const std::string& e : io_errors) std::cerr << "reqlens: error: " << e << "\n";
  if (!io_errors.empty()) return std::nullopt;
  return sources;
}

int emit_report(Report& report, const std::string& format) {
  report.finalize();
  if (format == "json")
    std::cout << render_json(report);
  else
    std::cout << render_text(report, color_mode_from_env());
  return report.exit_code();
}

/// `--routine CLASS.NAME` -> (CLASS, NAME).
std::optional<std::pair<std::string, std::string>> split_routine(const std::string& spec) {
  const size_t dot = spec.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == spec.size()) return std::nullopt;
  return std::make_pair(spec.substr(0, dot), spec.substr(dot + 1));
}

int cmd_parse(const CommonArgs& args) {
  auto sources = load_inputs(args.files);
  if (!sources) return kExitUsage;
  Report report;
  for (const NamedSource& s : *sources) {
    report.inputs.push_back(s.first);
    ParseResult parsed = parse_source(s.second, s.first);
    report.add(std::move(parsed.diagnostics));
  }
  return emit_report(report, args.format);
}

int cmd_check(const CommonArgs& args, const std::string& routine, bool chain,
              bool functional_equality) {
  auto sources = load_inputs(args.files);
  if (!sources) return kExitUsage;

  CheckRun run;
  run.chain = chain;
  run.options.functional_equality = functional_equality;
  if (!routine.empty()) {
    auto split = split_routine(routine);
    if (!split) {
      std::cerr << "reqlens: error: --routine expects CLASS.NAME\n";
      return kExitUsage;
    }
    run.only_class = split->first;
    run.only_routine = split->second;
  }

  Report report;
  AnalysisInput input;
  input.sources = std::move(*sources);
  for (const NamedSource& s : input.sources) report.inputs.push_back(s.first);
  Analysis analysis = analyze(input);
  report.add(std::move(analysis.diagnostics));
  report.add(run_checks(analysis, run));
  return emit_report(report, args.format);
}

int cmd_lint(const CommonArgs& args) {
  auto sources = load_inputs(args.files);
  if (!sources) return kExitUsage;
  Report report;
  AnalysisInput input;
  input.sources = std::move(*sources);
  input.lint_style = true;
  for (const NamedSource& s : input.sources) report.inputs.push_back(s.first);
  Analysis analysis = analyze(input);
  report.add(std::move(analysis.diagnostics));
  for (const auto& [class_name, cls] : analysis.model.classes())
    report.add(lint_redundant_invariants(analysis.model, class_name));
  return emit_report(report, args.format);
}

bool write_output(const std::string& dir, const std::string& name, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "reqlens: error: cannot write " << path.string() << "\n";
    return false;
  }
  out << text;
  return true;
}

int cmd_stories(const CommonArgs& args, const std::string& class_name, const std::string& routine,
                const std::string& out_dir) {
  auto sources = load_inputs(args.files);
  if (!sources) return kExitUsage;
  Report report;
  AnalysisInput input;
  input.sources = std::move(*sources);
  for (const NamedSource& s : input.sources) report.inputs.push_back(s.first);
  Analysis analysis = analyze(input);
  report.add(std::move(analysis.diagnostics));

  std::vector<Story> stories;
  const ClassDecl* cls = analysis.model.find_class(class_name);
  if (!cls) {
    report.add({make_diag(Severity::Error, codes::kUnknownClass, {},
                          "unknown class " + class_name)});
    return emit_report(report, args.format);
  }
  std::vector<std::string> routines;
  if (!routine.empty()) {
    routines.push_back(routine);
  } else {
    for (const FeatureDecl& f : cls->features)
      if (f.kind == FeatureKind::ScenarioRoutine || f.has_contract()) routines.push_back(f.name);
  }
  for (const std::string& r : routines) {
    ExtractResult extracted = extract_stories(analysis.model, class_name, r);
    report.add(std::move(extracted.diagnostics));
    for (Story& s : extracted.stories) stories.push_back(std::move(s));
  }

  const std::string file_name = [&] {
    std::string lower;
    for (char c : class_name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return lower + "_stories.rsl";
  }();

  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (const Story& s : stories) {
    manifest.push_back({{"class", s.source_class},
                        {"routine", s.source_routine},
                        {"rule", story_rule_name(s.rule)},
                        {"condition", pretty(s.condition)},
                        {"story_name", s.name},
                        {"emitted_file", file_name}});
  }

  if (!stories.empty()) {
    if (!write_output(out_dir, file_name, emit_story_class(stories, class_name)))
      return kExitUsage;
    if (!write_output(out_dir, "stories_manifest.json", manifest.dump(2) + "\n"))
      return kExitUsage;
    std::cerr << "reqlens: wrote " << stories.size() << " story routine(s) to "
              << (std::filesystem::path(out_dir) / file_name).string() << "\n";
  }
  return emit_report(report, args.format);
}

int cmd_testgen(const CommonArgs& args, const std::string& class_name,
                const std::string& out_dir) {
  auto sources = load_inputs(args.files);
  if (!sources) return kExitUsage;
  Report report;
  AnalysisInput input;
  input.sources = std::move(*sources);
  for (const NamedSource& s : input.sources) report.inputs.push_back(s.first);
  Analysis analysis = analyze(input);
  report.add(std::move(analysis.diagnostics));

  std::vector<Diagnostic> gen_diags;
  std::vector<Story> stories = stories_for_testgen(analysis.model, class_name, gen_diags);
  report.add(std::move(gen_diags));
  TestGenResult generated = generate_test_skeletons(analysis.model, stories);
  report.add(std::move(generated.diagnostics));

  // Story classes the skeletons inherit from are emitted next to them.
  bool any_extracted = false;
  for (const Story& s : stories)
    if (s.rule != StoryRule::WholeRoutine) any_extracted = true;
  if (any_extracted) {
    std::vector<Story> extracted;
    for (const Story& s : stories)
      if (s.rule != StoryRule::WholeRoutine) extracted.push_back(s);
    std::string lower;
    for (char c : class_name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!write_output(out_dir, lower + "_stories.rsl", emit_story_class(extracted, class_name)))
      return kExitUsage;
  }

  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (const TestManifestEntry& e : generated.manifest) {
    manifest.push_back({{"test_class", e.test_class},
                        {"routine", e.routine},
                        {"story_name", e.story_name},
                        {"oracle_clauses", e.oracle_clauses}});
  }
  for (const GeneratedTestFile& f : generated.files) {
    if (!write_output(out_dir, f.file_name, f.text)) return kExitUsage;
    std::cerr << "reqlens: wrote " << f.file_name << "\n";
  }
  if (!generated.files.empty()) {
    if (!write_output(out_dir, "testgen_manifest.json", manifest.dump(2) + "\n"))
      return kExitUsage;
  }
  return emit_report(report, args.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reqlens - a toolchain for contract-based requirements specifications"};
  app.set_version_flag("--version", std::string("reqlens ") + kToolVersion);
  app.require_subcommand(1);

  CommonArgs check_args, parse_args, lint_args, stories_args, testgen_args;
  std::string routine, stories_class, stories_routine, testgen_class;
  std::string stories_out = ".", testgen_out = ".";
  bool chain = false, functional_equality = false;

  CLI::App* check = app.add_subcommand("check", "Check scenario routines and invariants");
  check->add_option("files", check_args.files, "Input .rsl files or directories")->required();
  check->add_option("--routine", routine, "Check a single routine, given as CLASS.NAME");
  check->add_flag("--chain", chain, "Strict pairwise chain check on plain call sequences");
  check->add_flag("--functional-equality", functional_equality,
                  "Treat equalities over one query as mutually exclusive");
  check->add_option("--format", check_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* parse = app.add_subcommand("parse", "Syntax-check input files");
  parse->add_option("files", parse_args.files, "Input .rsl files or directories")->required();
  parse->add_option("--format", parse_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* lint = app.add_subcommand("lint", "Redundancy and style lints");
  lint->add_option("files", lint_args.files, "Input .rsl files or directories")->required();
  lint->add_option("--format", lint_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* stories = app.add_subcommand("stories", "Extract use-case stories");
  stories->add_option("files", stories_args.files, "Input .rsl files or directories")->required();
  stories->add_option("--class", stories_class, "Source class")->required();
  stories->add_option("--routine", stories_routine, "Extract from a single routine");
  stories->add_option("--out", stories_out, "Output directory");
  stories->add_option("--format", stories_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* testgen = app.add_subcommand("testgen", "Generate test skeletons");
  testgen->add_option("files", testgen_args.files, "Input .rsl files or directories")->required();
  testgen->add_option("--class", testgen_class, "Source class")->required();
  testgen->add_option("--out", testgen_out, "Output directory");
  testgen->add_option("--format", testgen_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Renders --help/--version output, or the usage error message.
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  if (check->parsed()) return cmd_check(check_args, routine, chain, functional_equality);
  if (parse->parsed()) return cmd_parse(parse_args);
  if (lint->parsed()) return cmd_lint(lint_args);
  if (stories->parsed()) return cmd_stories(stories_args, stories_class, stories_routine, stories_out);
  if (testgen->parsed()) return cmd_testgen(testgen_args, testgen_class, testgen_out);
  return kExitUsage;
}
