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

#include "reqlens/lexer.hpp"

#include <array>
#include <cctype>

namespace reqlens {

namespace {

constexpr std::array<const char*, 27> kKeywords = {
    "class", "inherit", "feature", "require", "ensure",  "do",  "deferred",
    "end",   "invariant", "local", "if",      "then",    "else", "from",
    "until", "loop",      "create", "not",    "and",     "or",   "implies",
    "across", "as",       "all",    "Note",   "true",    "false"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

bool is_rsl_keyword(const std::string& word) {
  for (const char* kw : kKeywords)
    if (word == kw) return true;
  // `Note` is accepted in both spellings; the corpus mixes them.
  return word == "note";
}

std::vector<Token> tokenize(const std::string& source, const std::string& file_name) {
  std::vector<Token> tokens;
  size_t i = 0;
  int line = 1, column = 1;

  auto push = [&](TokenKind kind, size_t start, size_t end, int tok_line, int tok_col) {
    Token t;
    t.kind = kind;
    t.lexeme = source.substr(start, end - start);
    t.location = SourceLocation{file_name, tok_line, tok_col};
    t.offset = start;
    tokens.push_back(std::move(t));
  };

  while (i < source.size()) {
    const char c = source[i];
    if (c == '\n') {
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    const size_t start = i;
    const int tok_line = line, tok_col = column;

    if (c == '-' && i + 1 < source.size() && source[i + 1] == '-') {
      while (i < source.size() && source[i] != '\n') ++i;
      push(TokenKind::Comment, start, i, tok_line, tok_col);
      column += static_cast<int>(i - start);
      continue;
    }
    if (ident_start(c)) {
      while (i < source.size() && ident_char(source[i])) ++i;
      const std::string word = source.substr(start, i - start);
      push(is_rsl_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start, i, tok_line,
           tok_col);
      column += static_cast<int>(i - start);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      bool real = false;
      while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
      if (i + 1 < source.size() && source[i] == '.' &&
          std::isdigit(static_cast<unsigned char>(source[i + 1]))) {
        real = true;
        ++i;
        while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
      }
      push(real ? TokenKind::RealLit : TokenKind::IntegerLit, start, i, tok_line, tok_col);
      column += static_cast<int>(i - start);
      continue;
    }
    if (c == '"') {
      ++i;
      while (i < source.size() && source[i] != '"' && source[i] != '\n') ++i;
      if (i < source.size() && source[i] == '"') ++i;
      push(TokenKind::StringLit, start, i, tok_line, tok_col);
      column += static_cast<int>(i - start);
      continue;
    }

    // Two-character symbols first.
    auto two = (i + 1 < source.size()) ? source.substr(i, 2) : std::string();
    if (two == ":=" || two == "/=" || two == "<=" || two == ">=") {
      i += 2;
      push(TokenKind::Symbol, start, i, tok_line, tok_col);
      column += 2;
      continue;
    }
    switch (c) {
      case '(':
      case ')':
      case ',':
      case ';':
      case ':':
      case '.':
      case '=':
      case '<':
      case '>':
      case '+':
      case '-':
      case '*':
      case '/':
        ++i;
        push(TokenKind::Symbol, start, i, tok_line, tok_col);
        ++column;
        continue;
      default:
        ++i;
        push(TokenKind::Error, start, i, tok_line, tok_col);
        ++column;
        continue;
    }
  }

  Token eof;
  eof.kind = TokenKind::EndOfFile;
  eof.location = SourceLocation{file_name, line, column};
  eof.offset = source.size();
  tokens.push_back(std::move(eof));
  return tokens;
}

}  // namespace reqlens
