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

#ifndef REQLENS_MODEL_HPP
#define REQLENS_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "reqlens/ast.hpp"
#include "reqlens/diagnostics.hpp"

namespace reqlens {

/// A resolved set of class declarations with inheritance-flattened feature
/// tables. Immutable after construction; concurrent readers are safe.
class RequirementsModel {
 public:
  RequirementsModel() = default;
  explicit RequirementsModel(std::map<std::string, ClassDecl> classes)
      : classes_(std::move(classes)) {}

  const std::map<std::string, ClassDecl>& classes() const { return classes_; }
  bool has_class(const std::string& name) const { return classes_.count(name) > 0; }
  const ClassDecl* find_class(const std::string& name) const;

  /// Flattened-table lookup: own or inherited feature, or nullptr. Also
  /// nullptr when the class itself is unknown (check has_class to tell the
  /// two cases apart).
  const FeatureDecl* find_feature(const std::string& class_name,
                                  const std::string& feature_name) const;

 private:
  std::map<std::string, ClassDecl> classes_;
};

/// Resolves parsed declarations into a model: inheritance is flattened (flat
/// inclusion, no renaming or redefinition), `is_deferred` is computed, and
/// resolution problems (duplicate classes, unknown parents, inheritance
/// cycles, duplicate features) are reported. Flattening is idempotent:
/// re-resolving an already-flattened model changes nothing.
RequirementsModel build_model(const std::vector<ClassDecl>& sources,
                              std::vector<Diagnostic>& diagnostics);

struct InstantiatedContract {
  std::vector<Clause> pre_clauses;
  std::vector<Clause> post_clauses;
  FormulaPtr precondition;   // conjunction of pre_clauses (true when empty)
  FormulaPtr postcondition;  // conjunction of post_clauses
};

/// Re-expresses a feature's contract at a call site: formal parameters are
/// replaced by the actual paths and every other atom path is prefixed with
/// the receiver (no prefix when the receiver is the implicit current
/// object). Requires actuals.size() == feature.formals.size().
InstantiatedContract instantiate_contract(const FeatureDecl& feature, const Path& receiver,
                                          const std::vector<Path>& actuals);

/// Path rewriting used by contract instantiation; exposed for reuse.
struct PathSubstitution {
  Path receiver_prefix;
  std::map<std::string, Path> by_formal;

  Path apply(const Path& p) const;
};

FormulaPtr rewrite_formula(const FormulaPtr& f, const PathSubstitution& subst);

/// In-scope paths for a contract check: dotted path -> declared class name.
/// The empty path denotes the current object.
using Scope = std::map<std::string, std::string>;

/// Conjunction over every in-scope path of its class's invariant clauses,
/// atoms prefixed by the path (empty prefix for the current object).
/// Unknown-class paths contribute nothing and yield a warning.
FormulaPtr invariant_context(const RequirementsModel& model, const Scope& scope,
                             std::vector<Diagnostic>* warnings,
                             SourceLocation warn_location = {});

}  // namespace reqlens

#endif  // REQLENS_MODEL_HPP
