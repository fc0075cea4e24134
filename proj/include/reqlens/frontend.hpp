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

#ifndef REQLENS_FRONTEND_HPP
#define REQLENS_FRONTEND_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reqlens/checker.hpp"
#include "reqlens/model.hpp"
#include "reqlens/parser.hpp"
#include "reqlens/report.hpp"

namespace reqlens {

using NamedSource = std::pair<std::string, std::string>;  // (file name, text)

/// Expands directory arguments to their `*.rsl` files (sorted); plain paths
/// pass through. Unreadable paths are reported via `errors` and dropped.
std::vector<std::string> expand_inputs(const std::vector<std::string>& paths,
                                       std::vector<std::string>& errors);

std::optional<std::string> read_file(const std::string& path);

/// Parse + resolve: one model over all sources, diagnostics from both
/// phases. Class-name style is checked with a lint-level warning only when
/// `lint_style` is set.
struct AnalysisInput {
  std::vector<NamedSource> sources;
  bool lint_style = false;
};

struct Analysis {
  std::vector<ClassDecl> parsed_classes;
  RequirementsModel model;
  std::vector<Diagnostic> diagnostics;
};

Analysis analyze(const AnalysisInput& input);

/// The default check scope: invariant feasibility for every class, plus a
/// scenario (or chain) check of every routine with a non-empty body.
struct CheckRun {
  std::optional<std::string> only_class;    // set together with only_routine
  std::optional<std::string> only_routine;  // `--routine CLASS.NAME`
  bool chain = false;
  CheckOptions options;
};

std::vector<Diagnostic> run_checks(const Analysis& analysis, const CheckRun& run);

}  // namespace reqlens

#endif  // REQLENS_FRONTEND_HPP
