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

#include "reqlens/printer.hpp"

#include <sstream>

namespace reqlens {

namespace {

std::string pad(int n) { return std::string(static_cast<size_t>(n), ' '); }

void print_clauses(std::ostringstream& out, const std::vector<Clause>& clauses, int indent) {
  for (const Clause& c : clauses) {
    out << pad(indent);
    if (!c.tag.empty()) out << c.tag << ": ";
    out << pretty(c.formula) << "\n";
  }
}

void print_entities(std::ostringstream& out, const std::vector<Formal>& entities, int indent) {
  for (const Formal& e : entities) out << pad(indent) << e.name << ": " << e.type << "\n";
}

void print_body(std::ostringstream& out, const Body& body, int indent);

void print_statement(std::ostringstream& out, const Statement& s, int indent) {
  if (const auto* call = std::get_if<CallStmt>(&s.node)) {
    out << pad(indent);
    if (!call->target.empty()) out << join_path(call->target) << ".";
    out << call->feature;
    if (!call->arguments.empty()) {
      out << " (";
      for (size_t i = 0; i < call->arguments.size(); ++i) {
        if (i > 0) out << ", ";
        out << join_path(call->arguments[i]);
      }
      out << ")";
    }
    out << "\n";
    return;
  }
  if (const auto* cond = std::get_if<ConditionalStmt>(&s.node)) {
    out << pad(indent) << "if " << pretty(cond->condition) << " then\n";
    print_body(out, cond->then_branch, indent + 4);
    if (cond->else_branch) {
      out << pad(indent) << "else\n";
      print_body(out, *cond->else_branch, indent + 4);
    }
    out << pad(indent) << "end\n";
    return;
  }
  if (const auto* loop = std::get_if<LoopStmt>(&s.node)) {
    out << pad(indent) << "from\n";
    out << pad(indent) << "until " << pretty(loop->until_condition) << "\n";
    out << pad(indent) << "loop\n";
    print_body(out, loop->body, indent + 4);
    out << pad(indent) << "end\n";
    return;
  }
  const auto& opaque = std::get<OpaqueStmt>(s.node);
  out << pad(indent) << opaque.text << "\n";
}

void print_body(std::ostringstream& out, const Body& body, int indent) {
  for (const Statement& s : body.statements) print_statement(out, s, indent);
}

void print_feature(std::ostringstream& out, const FeatureDecl& f, int indent) {
  out << pad(indent) << f.name;
  if (!f.formals.empty()) {
    out << " (";
    for (size_t i = 0; i < f.formals.size(); ++i) {
      if (i > 0) out << "; ";
      out << f.formals[i].name << ": " << f.formals[i].type;
    }
    out << ")";
  }
  if (f.result_type) out << ": " << *f.result_type;

  const bool is_attribute =
      (f.kind == FeatureKind::BooleanQuery || f.kind == FeatureKind::TypedQuery) && !f.body &&
      !f.is_deferred && !f.has_contract();
  if (is_attribute) {
    out << "\n";
    return;
  }
  out << "\n";

  if (!f.notes.empty()) {
    out << pad(indent + 4) << "Note\n";
    for (const auto& [key, value] : f.notes)
      out << pad(indent + 8) << key << ": " << value << "\n";
  }
  if (!f.preconditions.empty()) {
    out << pad(indent + 4) << "require\n";
    print_clauses(out, f.preconditions, indent + 8);
  }
  if (!f.locals.empty()) {
    out << pad(indent + 4) << "local\n";
    print_entities(out, f.locals, indent + 8);
  }
  if (f.is_deferred) {
    out << pad(indent + 4) << "deferred\n";
  } else {
    out << pad(indent + 4) << "do\n";
    if (f.body) print_body(out, *f.body, indent + 8);
  }
  if (!f.postconditions.empty()) {
    out << pad(indent + 4) << "ensure\n";
    print_clauses(out, f.postconditions, indent + 8);
  }
  out << pad(indent + 4) << "end\n";
}

}  // namespace

std::string to_rsl(const FeatureDecl& feature, int indent) {
  std::ostringstream out;
  print_feature(out, feature, indent);
  return out.str();
}

std::string to_rsl(const ClassDecl& cls) {
  std::ostringstream out;
  out << "class " << cls.name << "\n";
  if (!cls.notes.empty()) {
    out << "Note\n";
    for (const auto& [key, value] : cls.notes) out << pad(4) << key << ": " << value << "\n";
  }
  if (!cls.parents.empty()) {
    out << "inherit\n";
    for (const std::string& p : cls.parents) out << pad(4) << p << "\n";
  }
  out << "feature\n\n";
  for (const FeatureDecl& f : cls.features) {
    print_feature(out, f, 4);
    out << "\n";
  }
  if (!cls.invariant_clauses.empty()) {
    out << "invariant\n";
    print_clauses(out, cls.invariant_clauses, 4);
  }
  out << "end\n";
  return out.str();
}

}  // namespace reqlens
