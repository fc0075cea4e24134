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

#include "reqlens/ast.hpp"

namespace reqlens {

SourceLocation statement_location(const Statement& s) {
  return std::visit([](const auto& node) { return node.loc; }, s.node);
}

const FeatureDecl* ClassDecl::find_feature(const std::string& feature_name) const {
  for (const FeatureDecl& f : features)
    if (f.name == feature_name) return &f;
  return nullptr;
}

const char* feature_kind_name(FeatureKind k) {
  switch (k) {
    case FeatureKind::BooleanQuery:
      return "boolean-query";
    case FeatureKind::TypedQuery:
      return "typed-query";
    case FeatureKind::Command:
      return "command";
    case FeatureKind::ScenarioRoutine:
      return "scenario-routine";
  }
  return "unknown";
}

bool clauses_equal(const std::vector<Clause>& a, const std::vector<Clause>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].tag != b[i].tag) return false;
    if (!formulas_equal(a[i].formula, b[i].formula)) return false;
  }
  return true;
}

namespace {

bool statements_equal(const Statement& a, const Statement& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ca = std::get_if<CallStmt>(&a.node)) {
    const auto& cb = std::get<CallStmt>(b.node);
    return ca->target == cb.target && ca->feature == cb.feature && ca->arguments == cb.arguments;
  }
  if (const auto* ia = std::get_if<ConditionalStmt>(&a.node)) {
    const auto& ib = std::get<ConditionalStmt>(b.node);
    if (!formulas_equal(ia->condition, ib.condition)) return false;
    if (!bodies_equal(ia->then_branch, ib.then_branch)) return false;
    if (ia->else_branch.has_value() != ib.else_branch.has_value()) return false;
    return !ia->else_branch || bodies_equal(*ia->else_branch, *ib.else_branch);
  }
  if (const auto* la = std::get_if<LoopStmt>(&a.node)) {
    const auto& lb = std::get<LoopStmt>(b.node);
    return formulas_equal(la->until_condition, lb.until_condition) && bodies_equal(la->body, lb.body);
  }
  const auto& oa = std::get<OpaqueStmt>(a.node);
  const auto& ob = std::get<OpaqueStmt>(b.node);
  return oa.kind == ob.kind && oa.text == ob.text;
}

}  // namespace

bool bodies_equal(const Body& a, const Body& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (size_t i = 0; i < a.statements.size(); ++i)
    if (!statements_equal(a.statements[i], b.statements[i])) return false;
  return true;
}

bool features_equal(const FeatureDecl& a, const FeatureDecl& b) {
  if (a.name != b.name || a.kind != b.kind || a.is_deferred != b.is_deferred) return false;
  if (a.formals != b.formals || a.locals != b.locals || a.result_type != b.result_type)
    return false;
  if (!clauses_equal(a.preconditions, b.preconditions)) return false;
  if (!clauses_equal(a.postconditions, b.postconditions)) return false;
  if (a.notes != b.notes) return false;
  if (a.body.has_value() != b.body.has_value()) return false;
  return !a.body || bodies_equal(*a.body, *b.body);
}

bool classes_equal(const ClassDecl& a, const ClassDecl& b) {
  if (a.name != b.name || a.parents != b.parents || a.notes != b.notes) return false;
  if (!clauses_equal(a.invariant_clauses, b.invariant_clauses)) return false;
  if (a.features.size() != b.features.size()) return false;
  for (size_t i = 0; i < a.features.size(); ++i)
    if (!features_equal(a.features[i], b.features[i])) return false;
  return true;
}

}  // namespace reqlens
