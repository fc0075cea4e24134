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

#ifndef REQLENS_AST_HPP
#define REQLENS_AST_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reqlens/diagnostics.hpp"
#include "reqlens/formula.hpp"

namespace reqlens {

/// One assertion clause of a require/ensure/invariant list, with its
/// optional label (`book_is_available: is_available`).
struct Clause {
  std::string tag;
  FormulaPtr formula;
  SourceLocation loc;
};

struct Statement;

struct Body {
  std::vector<Statement> statements;
  bool empty() const { return statements.empty(); }
};

/// A command call with a target of at most one segment (`place_hold (p)`,
/// `l.place_book_on_hold (b, p1, lb)`). Deeper-dotted applications are
/// recorded as OpaqueStmt with an embedded call.
struct CallStmt {
  Path target;  // empty = implicit current object
  std::string feature;
  std::vector<Path> arguments;
  SourceLocation loc;
};

struct ConditionalStmt {
  FormulaPtr condition;
  Body then_branch;
  std::optional<Body> else_branch;
  SourceLocation loc;
};

/// `from until C loop ... end`; the `from` clause carries no initialization
/// statements in this notation subset.
struct LoopStmt {
  FormulaPtr until_condition;
  Body body;
  SourceLocation loc;
};

/// A statement the checker does not interpret: assignments, creation
/// instructions, and multi-dotted command calls. The raw text is preserved
/// verbatim; when the statement embeds a feature application, the call shape
/// is recorded so unresolvable contracts can still be reported.
struct OpaqueStmt {
  enum class Kind { Assignment, Creation, DottedCall };
  Kind kind = Kind::Assignment;
  std::string text;
  std::optional<CallStmt> embedded;
  SourceLocation loc;
};

struct Statement {
  std::variant<CallStmt, ConditionalStmt, LoopStmt, OpaqueStmt> node;
};

SourceLocation statement_location(const Statement& s);

enum class FeatureKind { BooleanQuery, TypedQuery, Command, ScenarioRoutine };

struct Formal {
  std::string name;
  std::string type;
  friend bool operator==(const Formal&, const Formal&) = default;
};

struct FeatureDecl {
  std::string name;
  FeatureKind kind = FeatureKind::Command;
  std::vector<Formal> formals;
  std::vector<Formal> locals;
  std::optional<std::string> result_type;
  std::vector<Clause> preconditions;
  std::vector<Clause> postconditions;
  std::optional<Body> body;
  bool is_deferred = false;
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<std::string> leading_comments;  // trivia
  std::string origin_class;  // the defining class; set during model resolution
  SourceLocation loc;

  bool has_contract() const { return !preconditions.empty() || !postconditions.empty(); }
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> parents;
  std::vector<FeatureDecl> features;
  std::vector<Clause> invariant_clauses;
  bool is_deferred = false;  // computed during model resolution
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<std::string> leading_comments;  // trivia
  SourceLocation loc;

  const FeatureDecl* find_feature(const std::string& feature_name) const;
};

// Structural equality, ignoring trivia and source locations.
bool bodies_equal(const Body& a, const Body& b);
bool features_equal(const FeatureDecl& a, const FeatureDecl& b);
bool classes_equal(const ClassDecl& a, const ClassDecl& b);
bool clauses_equal(const std::vector<Clause>& a, const std::vector<Clause>& b);

const char* feature_kind_name(FeatureKind k);

}  // namespace reqlens

#endif  // REQLENS_AST_HPP
