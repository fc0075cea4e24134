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

#ifndef REQLENS_TESTS_HELPERS_HPP
#define REQLENS_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "reqlens/frontend.hpp"
#include "reqlens/lexer.hpp"

namespace reqlens::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(REQLENS_CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::vector<std::string> corpus_files() {
  return {"book.rsl", "library.rsl", "roborace.rsl"};
}

/// Parses and resolves the whole corpus into one model.
inline Analysis analyze_corpus() {
  AnalysisInput input;
  for (const std::string& name : corpus_files())
    input.sources.emplace_back(name, read_corpus(name));
  return analyze(input);
}

/// Lexeme sequence with trivia dropped, for whitespace-insensitive
/// token-for-token comparisons.
inline std::vector<std::string> significant_lexemes(const std::string& text) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(text, "<cmp>"))
    if (t.kind != TokenKind::Comment && t.kind != TokenKind::EndOfFile) out.push_back(t.lexeme);
  return out;
}

inline int count_code(const std::vector<Diagnostic>& diags, const char* code) {
  int n = 0;
  for (const Diagnostic& d : diags)
    if (d.code == code) ++n;
  return n;
}

inline const Diagnostic* first_with_code(const std::vector<Diagnostic>& diags, const char* code) {
  for (const Diagnostic& d : diags)
    if (d.code == code) return &d;
  return nullptr;
}

}  // namespace reqlens::testing

#endif  // REQLENS_TESTS_HELPERS_HPP
