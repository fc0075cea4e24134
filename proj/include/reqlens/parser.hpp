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

#ifndef REQLENS_PARSER_HPP
#define REQLENS_PARSER_HPP

#include <string>
#include <vector>

#include "reqlens/ast.hpp"
#include "reqlens/diagnostics.hpp"
#include "reqlens/lexer.hpp"

namespace reqlens {

struct ParseResult {
  std::vector<ClassDecl> classes;
  std::vector<Diagnostic> diagnostics;

  bool has_errors() const { return count_severity(diagnostics, Severity::Error) > 0; }
};

/// Parses one source file into class declarations. Syntax errors become
/// diagnostics and recovery skips to the next `class` keyword, so every
/// class of a file is reported independently; parsing never aborts.
ParseResult parse_source(const std::string& source, const std::string& file_name);

/// Token-stream entry point; `source` is needed for the raw-text slices of
/// opaque statements and opaque atoms.
ParseResult parse_tokens(const std::vector<Token>& tokens, const std::string& source,
                         const std::string& file_name);

struct ExpressionResult {
  FormulaPtr formula;  // null when the text is not a valid expression
  std::vector<Diagnostic> diagnostics;
};

/// Parses a single assertion expression. Arithmetic comparisons and
/// `across ... end` quantifications become opaque atoms with a warning.
ExpressionResult parse_expression(const std::string& text);

}  // namespace reqlens

#endif  // REQLENS_PARSER_HPP
