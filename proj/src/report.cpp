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

#include "reqlens/report.hpp"

#include <unistd.h>

#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace reqlens {

ColorMode color_mode_from_env() {
  const char* value = std::getenv("REQLENS_COLOR");
  if (!value) return ColorMode::Auto;
  const std::string v = value;
  if (v == "always") return ColorMode::Always;
  if (v == "never") return ColorMode::Never;
  return ColorMode::Auto;
}

void Report::add(std::vector<Diagnostic> diags) {
  for (Diagnostic& d : diags) diagnostics.push_back(std::move(d));
}

void Report::finalize() {
  dedupe_diagnostics(diagnostics);
  sort_diagnostics(diagnostics);
}

namespace {

const char* severity_color(Severity s) {
  switch (s) {
    case Severity::Error:
      return "\033[31m";
    case Severity::Warning:
      return "\033[33m";
    case Severity::Info:
      return "\033[36m";
  }
  return "";
}

}  // namespace

std::string render_text(const Report& report, ColorMode color) {
  const bool use_color =
      color == ColorMode::Always || (color == ColorMode::Auto && isatty(STDOUT_FILENO));
  std::ostringstream out;
  for (const Diagnostic& d : report.diagnostics) {
    if (!d.location.file.empty())
      out << d.location.file << ":" << d.location.line << ":" << d.location.column << ": ";
    if (use_color) out << severity_color(d.severity);
    out << severity_name(d.severity) << "[" << d.code << "]";
    if (use_color) out << "\033[0m";
    out << ": " << d.message << "\n";
    if (d.has_witness && !d.witness.empty()) {
      out << "  witness:";
      bool first = true;
      for (const auto& [atom, value] : d.witness) {
        out << (first ? " " : ", ") << atom << "=" << (value ? "true" : "false");
        first = false;
      }
      out << "\n";
    }
  }
  out << "summary: " << count_severity(report.diagnostics, Severity::Error) << " error(s), "
      << count_severity(report.diagnostics, Severity::Warning) << " warning(s), "
      << count_severity(report.diagnostics, Severity::Info) << " info(s)\n";
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json root;
  root["schema"] = kReportSchemaVersion;
  root["tool"] = "reqlens";
  root["version"] = kToolVersion;
  root["inputs"] = report.inputs;
  nlohmann::ordered_json diags = nlohmann::ordered_json::array();
  for (const Diagnostic& d : report.diagnostics) {
    nlohmann::ordered_json item;
    item["severity"] = severity_name(d.severity);
    item["code"] = d.code;
    item["file"] = d.location.file;
    item["line"] = d.location.line;
    item["column"] = d.location.column;
    item["message"] = d.message;
    if (d.has_witness) {
      nlohmann::ordered_json witness;
      for (const auto& [atom, value] : d.witness) witness[atom] = value;
      item["witness"] = std::move(witness);
    }
    diags.push_back(std::move(item));
  }
  root["diagnostics"] = std::move(diags);
  root["summary"] = {{"errors", count_severity(report.diagnostics, Severity::Error)},
                     {"warnings", count_severity(report.diagnostics, Severity::Warning)},
                     {"infos", count_severity(report.diagnostics, Severity::Info)}};
  return root.dump(2) + "\n";
}

}  // namespace reqlens
