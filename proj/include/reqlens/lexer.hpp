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

#ifndef REQLENS_LEXER_HPP
#define REQLENS_LEXER_HPP

#include <string>
#include <vector>

#include "reqlens/diagnostics.hpp"

namespace reqlens {

enum class TokenKind {
  Keyword,
  Identifier,
  Symbol,
  StringLit,
  IntegerLit,
  RealLit,
  Comment,  // `-- ...` to end of line, kept as trivia
  Error,    // unexpected character; lexing continues
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string lexeme;
  SourceLocation location;
  size_t offset = 0;  // byte offset into the source

  bool is_keyword(const char* kw) const {
    return kind == TokenKind::Keyword && lexeme == kw;
  }
  bool is_symbol(const char* sym) const {
    return kind == TokenKind::Symbol && lexeme == sym;
  }
};

/// Lossless tokenization: concatenating lexemes plus the skipped whitespace
/// reproduces the input. Unknown characters become Error tokens. The final
/// token is always EndOfFile.
std::vector<Token> tokenize(const std::string& source, const std::string& file_name);

bool is_rsl_keyword(const std::string& word);

}  // namespace reqlens

#endif  // REQLENS_LEXER_HPP
