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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "reqlens/frontend.hpp"
#include "reqlens/testgen.hpp"

namespace py = pybind11;
using namespace reqlens;

namespace {

using Sources = std::vector<std::pair<std::string, std::string>>;

std::string report_json(Report& report) {
  report.finalize();
  return render_json(report);
}

Analysis analyze_sources(const Sources& sources, bool lint_style = false) {
  AnalysisInput input;
  input.sources = sources;
  input.lint_style = lint_style;
  return analyze(input);
}

std::string parse_sources(const Sources& sources) {
  Report report;
  for (const auto& [name, text] : sources) {
    report.inputs.push_back(name);
    ParseResult parsed = parse_source(text, name);
    report.add(std::move(parsed.diagnostics));
  }
  return report_json(report);
}

std::string check_sources(const Sources& sources, const std::string& routine, bool chain,
                          bool functional_equality) {
  Report report;
  for (const auto& [name, text] : sources) report.inputs.push_back(name);
  Analysis analysis = analyze_sources(sources);
  report.add(std::move(analysis.diagnostics));

  CheckRun run;
  run.chain = chain;
  run.options.functional_equality = functional_equality;
  if (!routine.empty()) {
    const size_t dot = routine.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == routine.size())
      throw py::value_error("routine must be given as CLASS.NAME");
    run.only_class = routine.substr(0, dot);
    run.only_routine = routine.substr(dot + 1);
  }
  report.add(run_checks(analysis, run));
  return report_json(report);
}

std::string lint_sources(const Sources& sources) {
  Report report;
  for (const auto& [name, text] : sources) report.inputs.push_back(name);
  Analysis analysis = analyze_sources(sources, /*lint_style=*/true);
  report.add(std::move(analysis.diagnostics));
  for (const auto& [class_name, cls] : analysis.model.classes())
    report.add(lint_redundant_invariants(analysis.model, class_name));
  return report_json(report);
}

std::string stories_sources(const Sources& sources, const std::string& class_name,
                            const std::string& routine) {
  Analysis analysis = analyze_sources(sources);
  Report report;
  report.add(std::move(analysis.diagnostics));

  nlohmann::ordered_json root;
  std::vector<Story> stories;
  const ClassDecl* cls = analysis.model.find_class(class_name);
  if (!cls) throw py::value_error("unknown class " + class_name);
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

  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (const Story& s : stories) {
    manifest.push_back({{"class", s.source_class},
                        {"routine", s.source_routine},
                        {"rule", story_rule_name(s.rule)},
                        {"condition", pretty(s.condition)},
                        {"story_name", s.name}});
  }
  root["stories"] = std::move(manifest);
  root["class_text"] = stories.empty() ? "" : emit_story_class(stories, class_name);
  report.finalize();
  root["report"] = nlohmann::ordered_json::parse(render_json(report));
  return root.dump(2);
}

std::string testgen_sources(const Sources& sources, const std::string& class_name) {
  Analysis analysis = analyze_sources(sources);
  Report report;
  report.add(std::move(analysis.diagnostics));

  std::vector<Diagnostic> gen_diags;
  std::vector<Story> stories = stories_for_testgen(analysis.model, class_name, gen_diags);
  report.add(std::move(gen_diags));
  TestGenResult generated = generate_test_skeletons(analysis.model, stories);
  report.add(std::move(generated.diagnostics));

  nlohmann::ordered_json root;
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const GeneratedTestFile& f : generated.files)
    files.push_back({{"file_name", f.file_name}, {"class_name", f.class_name}, {"text", f.text}});
  root["files"] = std::move(files);
  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (const TestManifestEntry& e : generated.manifest)
    manifest.push_back({{"test_class", e.test_class},
                        {"routine", e.routine},
                        {"story_name", e.story_name},
                        {"oracle_clauses", e.oracle_clauses}});
  root["manifest"] = std::move(manifest);
  report.finalize();
  root["report"] = nlohmann::ordered_json::parse(render_json(report));
  return root.dump(2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "reqlens core: parsing, checking, story extraction and test generation "
            "for contract-based requirements specifications";

  m.attr("__version__") = kToolVersion;

  m.def("parse_sources", &parse_sources, py::arg("sources"),
        "Syntax-check (file name, text) pairs; returns a JSON report string.");
  m.def("check_sources", &check_sources, py::arg("sources"), py::arg("routine") = "",
        py::arg("chain") = false, py::arg("functional_equality") = false,
        "Run scenario/invariant checks; returns a JSON report string.");
  m.def("lint_sources", &lint_sources, py::arg("sources"),
        "Run redundancy and style lints; returns a JSON report string.");
  m.def("stories_sources", &stories_sources, py::arg("sources"), py::arg("class_name"),
        py::arg("routine") = "",
        "Extract use-case stories; returns JSON with stories, class_text and report.");
  m.def("testgen_sources", &testgen_sources, py::arg("sources"), py::arg("class_name"),
        "Generate test skeletons; returns JSON with files, manifest and report.");
}
