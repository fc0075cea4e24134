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

#include "reqlens/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace reqlens {

namespace fs = std::filesystem;

std::vector<std::string> expand_inputs(const std::vector<std::string>& paths,
                                       std::vector<std::string>& errors) {
  std::vector<std::string> out;
  for (const std::string& path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(path, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".rsl")
          found.push_back(entry.path().string());
      }
      if (ec) {
        errors.push_back("cannot read directory " + path);
        continue;
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
      continue;
    }
    if (fs::is_regular_file(path, ec)) {
      out.push_back(path);
      continue;
    }
    errors.push_back("no such file: " + path);
  }
  return out;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

bool is_upper_snake(const std::string& name) {
  for (char c : name)
    if (std::islower(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Analysis analyze(const AnalysisInput& input) {
  Analysis out;
  for (const NamedSource& source : input.sources) {
    ParseResult parsed = parse_source(source.second, source.first);
    for (Diagnostic& d : parsed.diagnostics) out.diagnostics.push_back(std::move(d));
    for (ClassDecl& cls : parsed.classes) {
      if (input.lint_style && !is_upper_snake(cls.name))
        out.diagnostics.push_back(make_diag(Severity::Warning, codes::kClassNameStyle, cls.loc,
                                            "class name `" + cls.name +
                                                "` is conventionally written in upper case"));
      out.parsed_classes.push_back(std::move(cls));
    }
  }
  out.model = build_model(out.parsed_classes, out.diagnostics);
  return out;
}

std::vector<Diagnostic> run_checks(const Analysis& analysis, const CheckRun& run) {
  std::vector<Diagnostic> diags;

  if (run.only_class && run.only_routine) {
    std::vector<Diagnostic> result =
        run.chain
            ? check_chain(analysis.model, *run.only_class, *run.only_routine, run.options)
            : check_scenario(analysis.model, *run.only_class, *run.only_routine, run.options);
    diags.insert(diags.end(), result.begin(), result.end());
    return diags;
  }

  for (const auto& [class_name, cls] : analysis.model.classes()) {
    std::vector<Diagnostic> feasibility =
        check_invariant_feasibility(analysis.model, class_name, run.options);
    diags.insert(diags.end(), feasibility.begin(), feasibility.end());

    for (const FeatureDecl& f : cls.features) {
      if (f.kind != FeatureKind::ScenarioRoutine) continue;
      // Inherited routines are checked once, in their defining class.
      if (!f.origin_class.empty() && f.origin_class != class_name) continue;
      if (run.chain) {
        // Chain mode applies only to plain call sequences; other routines
        // are skipped rather than reported.
        bool plain = true;
        for (const Statement& s : f.body->statements)
          if (!std::holds_alternative<CallStmt>(s.node)) plain = false;
        if (!plain) continue;
        std::vector<Diagnostic> result = check_chain(analysis.model, class_name, f.name, run.options);
        diags.insert(diags.end(), result.begin(), result.end());
      } else {
        std::vector<Diagnostic> result =
            check_scenario(analysis.model, class_name, f.name, run.options);
        diags.insert(diags.end(), result.begin(), result.end());
      }
    }
  }
  return diags;
}

}  // namespace reqlens
