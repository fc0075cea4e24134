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

#ifndef REQLENS_DIAGNOSTICS_HPP
#define REQLENS_DIAGNOSTICS_HPP

#include <map>
#include <string>
#include <vector>

namespace reqlens {

struct SourceLocation {
  std::string file;
  int line = 0;    // 1-based; 0 means "no location"
  int column = 0;  // 1-based

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

enum class Severity { Error, Warning, Info };

const char* severity_name(Severity s);

/// Stable diagnostic codes. The set is open; these are the ones the tool
/// emits today and the ones `docs/report-schema.md` documents.
namespace codes {
inline constexpr const char* kParseError = "PARSE_ERROR";
inline constexpr const char* kResolutionError = "RESOLUTION_ERROR";
inline constexpr const char* kPreUnproven = "PRE_UNPROVEN";
inline constexpr const char* kPostUnproven = "POST_UNPROVEN";
inline constexpr const char* kStateInconsistent = "STATE_INCONSISTENT";
inline constexpr const char* kUnknownContract = "UNKNOWN_CONTRACT";
inline constexpr const char* kRedundantInvariant = "REDUNDANT_INVARIANT";
inline constexpr const char* kOpaqueAtom = "OPAQUE_ATOM";
inline constexpr const char* kOpaqueStmt = "OPAQUE_STMT";
inline constexpr const char* kUnknownClass = "UNKNOWN_CLASS";
inline constexpr const char* kUnknownRoutine = "UNKNOWN_ROUTINE";
inline constexpr const char* kArityMismatch = "ARITY_MISMATCH";
inline constexpr const char* kPreInfeasible = "PRE_INFEASIBLE";
inline constexpr const char* kPostInfeasible = "POST_INFEASIBLE";
inline constexpr const char* kNotAPlainSequence = "NOT_A_PLAIN_SEQUENCE";
inline constexpr const char* kNothingToExtract = "NOTHING_TO_EXTRACT";
inline constexpr const char* kUnresolvedStory = "UNRESOLVED_STORY";
inline constexpr const char* kCapacityExceeded = "CAPACITY_EXCEEDED";
inline constexpr const char* kClassNameStyle = "CLASS_NAME_STYLE";
}  // namespace codes

/// A located finding. `witness` is a truth assignment over pretty-printed
/// atoms; present only on diagnostics that carry a counterexample or model.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  SourceLocation location;
  std::string message;
  bool has_witness = false;
  std::map<std::string, bool> witness;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic make_diag(Severity sev, const char* code, SourceLocation loc, std::string message);

/// Orders by file, line, column, code (the report order), then severity and
/// message as tie-breakers so sorting is a total deterministic order.
void sort_diagnostics(std::vector<Diagnostic>& diags);

/// Drops diagnostics identical in (severity, code, location, message),
/// keeping the first occurrence. Forked scenario paths revisit the same
/// statements; their repeated findings collapse here.
void dedupe_diagnostics(std::vector<Diagnostic>& diags);

int count_severity(const std::vector<Diagnostic>& diags, Severity s);

}  // namespace reqlens

#endif  // REQLENS_DIAGNOSTICS_HPP
