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

#ifndef REQLENS_REPORT_HPP
#define REQLENS_REPORT_HPP

#include <string>
#include <vector>

#include "reqlens/diagnostics.hpp"

namespace reqlens {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class ColorMode { Auto, Always, Never };

/// Reads REQLENS_COLOR (auto | always | never); `auto` colors when stdout
/// is a terminal.
ColorMode color_mode_from_env();

struct Report {
  std::vector<std::string> inputs;
  std::vector<Diagnostic> diagnostics;

  void add(std::vector<Diagnostic> diags);
  /// Deterministic merge: dedupe, then order by file, line, column, code.
  void finalize();
  int error_count() const { return count_severity(diagnostics, Severity::Error); }
  /// 0 = no errors (warnings allowed), 1 = errors found.
  int exit_code() const { return error_count() > 0 ? 1 : 0; }
};

std::string render_text(const Report& report, ColorMode color = ColorMode::Never);
std::string render_json(const Report& report);

}  // namespace reqlens

#endif  // REQLENS_REPORT_HPP
