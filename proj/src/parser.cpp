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

#include "reqlens/parser.hpp"

#include <cctype>
#include <stdexcept>

namespace reqlens {

namespace {

bool is_note_keyword(const Token& t) {
  return t.kind == TokenKind::Keyword && (t.lexeme == "Note" || t.lexeme == "note");
}

/// Recursive-descent parser over a token stream. Comments are collected as
/// trivia and attached to the next declaration.
class Parser {
 public:
  Parser(const std::vector<Token>& tokens, const std::string& source, std::string file_name)
      : tokens_(tokens), source_(source), file_(std::move(file_name)) {}

  ParseResult run() {
    ParseResult result;
    skip_trivia();
    while (!at_end()) {
      if (cur().is_keyword("class")) {
        try {
          result.classes.push_back(parse_class());
        } catch (const Bailout&) {
          recover_to_class();
        }
      } else {
        error_here("expected `class`");
        recover_to_class();
      }
      skip_trivia();
    }
    result.diagnostics = std::move(diags_);
    return result;
  }

  // Standalone expression used by parse_expression().
  FormulaPtr run_expression() {
    skip_trivia();
    FormulaPtr f = parse_expr();
    skip_trivia();
    if (!at_end()) error_here("trailing tokens after expression");
    return f;
  }

  std::vector<Diagnostic> take_diagnostics() { return std::move(diags_); }

 private:
  // Thrown to abandon the current class after an unrecoverable error.
  struct Bailout {};

  const std::vector<Token>& tokens_;
  const std::string& source_;
  std::string file_;
  size_t pos_ = 0;
  std::vector<std::string> pending_trivia_;
  std::vector<Diagnostic> diags_;

  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek(size_t k = 1) const {
    size_t i = pos_ + k;
    return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
  }
  bool at_end() const { return cur().kind == TokenKind::EndOfFile; }

  void advance() {
    if (!at_end()) ++pos_;
    skip_trivia();
  }

  void skip_trivia() {
    while (cur().kind == TokenKind::Comment) {
      pending_trivia_.push_back(cur().lexeme);
      ++pos_;
    }
  }

  std::vector<std::string> take_trivia() { return std::exchange(pending_trivia_, {}); }

  void error_here(const std::string& what) {
    std::string found = at_end() ? "end of file" : "`" + cur().lexeme + "`";
    diags_.push_back(make_diag(Severity::Error, codes::kParseError, cur().location,
                               what + ", found " + found));
  }

  [[noreturn]] void fail(const std::string& what) {
    error_here(what);
    throw Bailout{};
  }

  void expect_keyword(const char* kw) {
    if (!cur().is_keyword(kw)) fail(std::string("expected `") + kw + "`");
    advance();
  }

  std::string expect_identifier(const char* what) {
    if (cur().kind != TokenKind::Identifier) fail(std::string("expected ") + what);
    std::string name = cur().lexeme;
    advance();
    return name;
  }

  void recover_to_class() {
    while (!at_end() && !cur().is_keyword("class")) advance();
  }

  bool at_expression_start() const {
    const Token& t = cur();
    if (t.kind == TokenKind::Identifier) return true;
    if (t.kind == TokenKind::Keyword)
      return t.lexeme == "not" || t.lexeme == "true" || t.lexeme == "false" || t.lexeme == "across";
    return t.is_symbol("(");
  }

  std::string slice(size_t from_tok, size_t to_tok) const {
    const Token& a = tokens_[from_tok];
    const Token& b = tokens_[to_tok];
    return source_.substr(a.offset, b.offset + b.lexeme.size() - a.offset);
  }

  // --- classes -------------------------------------------------------------

  ClassDecl parse_class() {
    ClassDecl cls;
    cls.leading_comments = take_trivia();
    cls.loc = cur().location;
    expect_keyword("class");
    cls.name = expect_identifier("class name");
    if (is_note_keyword(cur())) cls.notes = parse_note_block();
    if (cur().is_keyword("inherit")) {
      advance();
      while (cur().kind == TokenKind::Identifier) cls.parents.push_back(expect_identifier("parent"));
      if (cls.parents.empty()) fail("expected at least one parent class after `inherit`");
    }
    expect_keyword("feature");
    while (!cur().is_keyword("invariant") && !cur().is_keyword("end")) {
      if (at_end()) fail("expected `end` of class");
      parse_feature_into(cls);
    }
    if (cur().is_keyword("invariant")) {
      advance();
      cls.invariant_clauses = parse_clause_list();
    }
    expect_keyword("end");
    return cls;
  }

  // --- notes ---------------------------------------------------------------

  std::vector<std::pair<std::string, std::string>> parse_note_block() {
    std::vector<std::pair<std::string, std::string>> notes;
    advance();  // Note / note
    while (cur().kind == TokenKind::Identifier && peek().is_symbol(":")) {
      std::string key = cur().lexeme;
      int entry_line = cur().location.line;
      advance();  // key
      advance();  // :
      // The value is the raw text to the end of the entry's line.
      size_t first = pos_, last = pos_;
      while (!at_end() && cur().location.line == entry_line && cur().kind != TokenKind::Comment &&
             !cur().is_keyword("require") && !cur().is_keyword("do") && !cur().is_keyword("deferred") &&
             !cur().is_keyword("local") && !cur().is_keyword("ensure") && !cur().is_keyword("end")) {
        last = pos_;
        ++pos_;
      }
      skip_trivia();
      std::string value = last >= first && first < tokens_.size() && tokens_[first].location.line == entry_line
                              ? slice(first, last)
                              : std::string();
      notes.emplace_back(std::move(key), std::move(value));
    }
    return notes;
  }

  // --- features ------------------------------------------------------------

  void parse_feature_into(ClassDecl& cls) {
    std::vector<std::string> trivia = take_trivia();
    SourceLocation loc = cur().location;
    std::vector<std::string> names;
    names.push_back(expect_identifier("feature name"));
    while (cur().is_symbol(",")) {
      advance();
      names.push_back(expect_identifier("feature name"));
    }

    if (names.size() > 1) {
      // Grouped attribute declaration: `a, b, c: BOOLEAN`.
      if (!cur().is_symbol(":")) fail("expected `:` after grouped attribute names");
      advance();
      std::string type = expect_identifier("attribute type");
      for (std::string& n : names) {
        FeatureDecl f;
        f.name = std::move(n);
        f.result_type = type;
        f.kind = type == "BOOLEAN" ? FeatureKind::BooleanQuery : FeatureKind::TypedQuery;
        f.loc = loc;
        f.leading_comments = trivia;
        trivia.clear();
        cls.features.push_back(std::move(f));
      }
      if (cur().is_symbol(";")) advance();
      return;
    }

    FeatureDecl f;
    f.name = names.front();
    f.loc = loc;
    f.leading_comments = std::move(trivia);

    if (cur().is_symbol("(")) f.formals = parse_entity_groups_parenthesized();

    if (cur().is_symbol(":")) {
      advance();
      f.result_type = expect_identifier("result type");
    }

    const bool routine_follows = is_note_keyword(cur()) || cur().is_keyword("require") ||
                                 cur().is_keyword("local") || cur().is_keyword("do") ||
                                 cur().is_keyword("deferred") || cur().is_keyword("ensure");
    if (f.result_type && !routine_follows && f.formals.empty()) {
      // Plain attribute: `car: RACE_CAR` — no `end`.
      f.kind = *f.result_type == "BOOLEAN" ? FeatureKind::BooleanQuery : FeatureKind::TypedQuery;
      if (cur().is_symbol(";")) advance();
      cls.features.push_back(std::move(f));
      return;
    }

    if (is_note_keyword(cur())) f.notes = parse_note_block();
    if (cur().is_keyword("require")) {
      advance();
      f.preconditions = parse_clause_list();
    }
    if (cur().is_keyword("local")) {
      advance();
      f.locals = parse_entity_groups_until_body();
    }
    if (cur().is_keyword("deferred")) {
      advance();
      f.is_deferred = true;
    } else if (cur().is_keyword("do")) {
      advance();
      f.body = parse_statements();
    } else {
      fail("expected `do` or `deferred` in feature declaration");
    }
    if (cur().is_keyword("ensure")) {
      advance();
      f.postconditions = parse_clause_list();
    }
    expect_keyword("end");

    f.kind = (f.body && !f.body->empty()) ? FeatureKind::ScenarioRoutine : FeatureKind::Command;
    cls.features.push_back(std::move(f));
  }

  std::vector<Formal> parse_entity_groups_parenthesized() {
    std::vector<Formal> out;
    advance();  // (
    while (!cur().is_symbol(")")) {
      parse_entity_group(out);
      if (cur().is_symbol(";") || cur().is_symbol(",")) advance();
      if (at_end()) fail("unterminated formal argument list");
    }
    advance();  // )
    return out;
  }

  std::vector<Formal> parse_entity_groups_until_body() {
    std::vector<Formal> out;
    while (cur().kind == TokenKind::Identifier) {
      parse_entity_group(out);
      if (cur().is_symbol(";")) advance();
    }
    return out;
  }

  void parse_entity_group(std::vector<Formal>& out) {
    std::vector<std::string> names;
    names.push_back(expect_identifier("entity name"));
    while (cur().is_symbol(",")) {
      advance();
      names.push_back(expect_identifier("entity name"));
    }
    if (!cur().is_symbol(":")) fail("expected `:` in entity declaration");
    advance();
    std::string type = expect_identifier("entity type");
    for (std::string& n : names) out.push_back(Formal{std::move(n), type});
  }

  // --- assertion clauses ---------------------------------------------------

  std::vector<Clause> parse_clause_list() {
    std::vector<Clause> clauses;
    while (at_expression_start()) {
      Clause c;
      c.loc = cur().location;
      if (cur().kind == TokenKind::Identifier && peek().is_symbol(":")) {
        c.tag = cur().lexeme;
        advance();
        advance();
        c.loc = cur().location;
      }
      c.formula = parse_expr();
      clauses.push_back(std::move(c));
      if (cur().is_symbol(";")) advance();
    }
    return clauses;
  }

  // --- expressions ---------------------------------------------------------

  FormulaPtr parse_expr() { return parse_implies(); }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (cur().is_keyword("implies")) {
      advance();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr acc = parse_and();
    while (cur().is_keyword("or")) {
      advance();
      if (cur().is_keyword("else")) advance();  // `or else` reads as `or`
      acc = Formula::disjunction(std::move(acc), parse_and());
    }
    return acc;
  }

  FormulaPtr parse_and() {
    FormulaPtr acc = parse_not();
    while (cur().is_keyword("and")) {
      advance();
      if (cur().is_keyword("then")) advance();  // `and then` reads as `and`
      acc = Formula::conjunction(std::move(acc), parse_not());
    }
    return acc;
  }

  FormulaPtr parse_not() {
    if (cur().is_keyword("not")) {
      advance();
      return Formula::negation(parse_not());
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (cur().is_keyword("true")) {
      advance();
      return Formula::constant(true);
    }
    if (cur().is_keyword("false")) {
      advance();
      return Formula::constant(false);
    }
    if (cur().is_symbol("(")) {
      advance();
      FormulaPtr inner = parse_expr();
      if (!cur().is_symbol(")")) fail("expected `)`");
      advance();
      return inner;
    }
    if (cur().is_keyword("across")) return parse_across_atom();
    if (cur().kind == TokenKind::Identifier) {
      if (cur().lexeme == "old" &&
          (peek().kind == TokenKind::Identifier || peek().is_symbol("(")))
        fail("`old` expressions are not supported in this notation subset");
      return parse_path_atom();
    }
    fail("expected expression");
  }

  /// `across ... end` quantifications stay opaque: one atom, one warning.
  FormulaPtr parse_across_atom() {
    size_t first = pos_;
    SourceLocation loc = cur().location;
    size_t last = pos_;
    while (!at_end() && !cur().is_keyword("end")) {
      last = pos_;
      advance();
    }
    if (at_end()) fail("unterminated `across` expression");
    last = pos_;
    advance();  // end
    std::string raw = slice(first, last);
    diags_.push_back(make_diag(Severity::Warning, codes::kOpaqueAtom, loc,
                               "quantified expression is treated as an opaque atom: `" +
                                   Atom::opaque(raw).text + "`"));
    return Formula::leaf(Atom::opaque(raw));
  }

  Path parse_path() {
    Path p;
    p.push_back(expect_identifier("identifier"));
    while (cur().is_symbol(".") && peek().kind == TokenKind::Identifier) {
      advance();
      p.push_back(expect_identifier("identifier"));
    }
    return p;
  }

  FormulaPtr parse_path_atom() {
    size_t first = pos_;
    SourceLocation loc = cur().location;
    Path p = parse_path();

    if (cur().is_symbol("(")) {
      advance();
      std::vector<Path> args;
      while (!cur().is_symbol(")")) {
        if (cur().kind != TokenKind::Identifier) fail("expected argument path");
        args.push_back(parse_path());
        if (cur().is_symbol(",")) advance();
        if (at_end()) fail("unterminated argument list");
      }
      advance();  // )
      Path receiver(p.begin(), p.end() - 1);
      return Formula::leaf(Atom::predicate(std::move(receiver), p.back(), std::move(args)));
    }
    if (cur().is_symbol("=")) {
      advance();
      if (cur().kind == TokenKind::Identifier) {
        Path rhs = parse_path();
        return Formula::leaf(Atom::equality(std::move(p), std::move(rhs)));
      }
      return finish_opaque_comparison(first, loc);
    }
    if (cur().is_symbol("/=")) {
      advance();
      if (cur().kind == TokenKind::Identifier) {
        Path rhs = parse_path();
        return Formula::leaf(Atom::disequality(std::move(p), std::move(rhs)));
      }
      return finish_opaque_comparison(first, loc);
    }
    if (cur().is_symbol("<") || cur().is_symbol("<=") || cur().is_symbol(">") ||
        cur().is_symbol(">=")) {
      advance();
      return finish_opaque_comparison(first, loc);
    }
    return Formula::leaf(Atom::query(std::move(p)));
  }

  /// Comparisons over non-path operands are opaque atoms; the right-hand
  /// side may be a path or a literal.
  FormulaPtr finish_opaque_comparison(size_t first, SourceLocation loc) {
    if (cur().kind == TokenKind::Identifier) {
      parse_path();
    } else if (cur().kind == TokenKind::IntegerLit || cur().kind == TokenKind::RealLit ||
               cur().kind == TokenKind::StringLit) {
      advance();
    } else {
      fail("expected comparison operand");
    }
    size_t last = pos_ - 1;
    while (last > first && tokens_[last].kind == TokenKind::Comment) --last;
    std::string raw = slice(first, last);
    diags_.push_back(make_diag(Severity::Warning, codes::kOpaqueAtom, loc,
                               "comparison is treated as an opaque atom: `" +
                                   Atom::opaque(raw).text + "`"));
    return Formula::leaf(Atom::opaque(raw));
  }

  // --- statements ----------------------------------------------------------

  Body parse_statements() {
    Body body;
    for (;;) {
      if (cur().is_symbol(";")) {
        advance();
        continue;
      }
      if (cur().is_keyword("end") || cur().is_keyword("ensure") || cur().is_keyword("else") ||
          cur().is_keyword("until") || at_end())
        break;
      body.statements.push_back(parse_statement());
    }
    return body;
  }

  Statement parse_statement() {
    if (cur().is_keyword("if")) return parse_conditional();
    if (cur().is_keyword("from")) return parse_loop();
    if (cur().is_keyword("create")) return parse_create();
    if (cur().kind == TokenKind::Identifier) return parse_call_or_assignment();
    fail("expected statement");
  }

  Statement parse_conditional() {
    ConditionalStmt stmt;
    stmt.loc = cur().location;
    advance();  // if
    stmt.condition = parse_expr();
    expect_keyword("then");
    stmt.then_branch = parse_statements();
    if (cur().is_keyword("else")) {
      advance();
      stmt.else_branch = parse_statements();
    }
    expect_keyword("end");
    return Statement{std::move(stmt)};
  }

  Statement parse_loop() {
    LoopStmt stmt;
    stmt.loc = cur().location;
    advance();  // from
    if (!cur().is_keyword("until"))
      fail("the `from` clause must be empty in this notation subset; expected `until`");
    advance();  // until
    stmt.until_condition = parse_expr();
    expect_keyword("loop");
    stmt.body = parse_statements();
    expect_keyword("end");
    return Statement{std::move(stmt)};
  }

  Statement parse_create() {
    OpaqueStmt stmt;
    stmt.kind = OpaqueStmt::Kind::Creation;
    stmt.loc = cur().location;
    size_t first = pos_;
    advance();  // create
    Path p = parse_path();
    std::vector<Path> args;
    size_t last = pos_ - 1;
    if (cur().is_symbol("(")) {
      int depth = 0;
      do {
        if (cur().is_symbol("(")) ++depth;
        if (cur().is_symbol(")")) --depth;
        last = pos_;
        advance();
        if (at_end() && depth > 0) fail("unterminated creation instruction");
      } while (depth > 0);
    }
    while (last > first && tokens_[last].kind == TokenKind::Comment) --last;
    stmt.text = slice(first, last);
    CallStmt embedded;
    embedded.loc = stmt.loc;
    embedded.feature = p.back();
    embedded.target = Path(p.begin(), p.end() - 1);
    stmt.embedded = std::move(embedded);
    return Statement{std::move(stmt)};
  }

  Statement parse_call_or_assignment() {
    size_t first = pos_;
    SourceLocation loc = cur().location;
    Path p = parse_path();

    if (cur().is_symbol(":=")) {
      advance();
      // The right-hand side of an assignment is a path or an application.
      if (cur().kind != TokenKind::Identifier) fail("expected assignment source");
      Path rhs = parse_path();
      std::vector<Path> args;
      if (cur().is_symbol("(")) args = parse_call_arguments();
      size_t last = pos_ - 1;
      while (last > first && tokens_[last].kind == TokenKind::Comment) --last;
      OpaqueStmt stmt;
      stmt.kind = OpaqueStmt::Kind::Assignment;
      stmt.loc = loc;
      stmt.text = slice(first, last);
      CallStmt embedded;
      embedded.loc = loc;
      embedded.feature = rhs.back();
      embedded.target = Path(rhs.begin(), rhs.end() - 1);
      embedded.arguments = std::move(args);
      stmt.embedded = std::move(embedded);
      return Statement{std::move(stmt)};
    }

    std::vector<Path> args;
    if (cur().is_symbol("(")) args = parse_call_arguments();
    CallStmt call;
    call.loc = loc;
    call.feature = p.back();
    call.target = Path(p.begin(), p.end() - 1);
    call.arguments = std::move(args);

    if (call.target.size() >= 2) {
      // Deeply dotted command calls carry no checkable single receiver in
      // the model's flattened tables; they are kept opaque.
      size_t last = pos_ - 1;
      while (last > first && tokens_[last].kind == TokenKind::Comment) --last;
      OpaqueStmt stmt;
      stmt.kind = OpaqueStmt::Kind::DottedCall;
      stmt.loc = loc;
      stmt.text = slice(first, last);
      stmt.embedded = std::move(call);
      return Statement{std::move(stmt)};
    }
    return Statement{std::move(call)};
  }

  std::vector<Path> parse_call_arguments() {
    std::vector<Path> args;
    advance();  // (
    while (!cur().is_symbol(")")) {
      if (cur().kind != TokenKind::Identifier) fail("expected argument path");
      args.push_back(parse_path());
      if (cur().is_symbol(",")) advance();
      if (at_end()) fail("unterminated argument list");
    }
    advance();  // )
    return args;
  }
};

}  // namespace

ParseResult parse_tokens(const std::vector<Token>& tokens, const std::string& source,
                         const std::string& file_name) {
  Parser p(tokens, source, file_name);
  return p.run();
}

ParseResult parse_source(const std::string& source, const std::string& file_name) {
  return parse_tokens(tokenize(source, file_name), source, file_name);
}

ExpressionResult parse_expression(const std::string& text) {
  std::vector<Token> tokens = tokenize(text, "<expression>");
  Parser p(tokens, text, "<expression>");
  ExpressionResult result;
  try {
    result.formula = p.run_expression();
  } catch (...) {
    result.formula = nullptr;
  }
  result.diagnostics = p.take_diagnostics();
  if (result.formula && count_severity(result.diagnostics, Severity::Error) > 0)
    result.formula = nullptr;
  return result;
}

}  // namespace reqlens
