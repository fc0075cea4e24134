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

#include "reqlens/diagnostics.hpp"

#include <algorithm>
#include <tuple>

namespace reqlens {

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Error:
      return "error";
    case Severity::Warning:
      return "warning";
    case Severity::Info:
      return "info";
  }
  return "unknown";
}

Diagnostic make_diag(Severity sev, const char* code, SourceLocation loc, std::string message) {
  Diagnostic d;
  d.severity = sev;
  d.code = code;
  d.location = std::move(loc);
  d.message = std::move(message);
  return d;
}

namespace {

auto order_key(const Diagnostic& d) {
  return std::tie(d.location.file, d.location.line, d.location.column, d.code, d.severity,
                  d.message);
}

}  // namespace

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return order_key(a) < order_key(b); });
}

void dedupe_diagnostics(std::vector<Diagnostic>& diags) {
  std::vector<Diagnostic> out;
  out.reserve(diags.size());
  for (Diagnostic& d : diags) {
    bool seen = false;
    for (const Diagnostic& kept : out) {
      if (kept.severity == d.severity && kept.code == d.code && kept.location == d.location &&
          kept.message == d.message) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(d));
  }
  diags = std::move(out);
}

int count_severity(const std::vector<Diagnostic>& diags, Severity s) {
  int n = 0;
  for (const Diagnostic& d : diags)
    if (d.severity == s) ++n;
  return n;
}

}  // namespace reqlens
