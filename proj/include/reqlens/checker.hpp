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

#ifndef REQLENS_CHECKER_HPP
#define REQLENS_CHECKER_HPP

#include <string>
#include <vector>

#include "reqlens/diagnostics.hpp"
#include "reqlens/logic.hpp"
#include "reqlens/model.hpp"

namespace reqlens {

struct CheckOptions {
  /// When set, equality atoms over a common left-hand path exclude each
  /// other pairwise (a query cannot equal two different expressions at
  /// once). Off by default: the notation does not say whether, e.g., two
  /// named speed limits may coincide.
  bool functional_equality = false;
  SatOptions sat;
};

enum class FactOrigin { Require, Post, Branch, Exit, Kept };

const char* fact_origin_name(FactOrigin o);

struct Fact {
  FormulaPtr formula;
  FactOrigin origin;
};

/// The set of facts known to hold at a point of a scenario walk, plus the
/// invariant context they are always conjoined with. States at which no
/// error is reported are satisfiable.
struct SymbolicState {
  std::vector<Fact> facts;
  FormulaPtr invariant_context;

  FormulaPtr conjunction() const;  // facts and invariant context
};

struct ApplyCallResult {
  SymbolicState state;
  bool inconsistent = false;  // postcondition contradicts the invariants
};

/// The frame rule: the new state is the call's instantiated postcondition
/// plus the invariant context; prior facts are then re-added oldest first,
/// each kept only while the accumulated state stays satisfiable
/// ("consistency-preserving retention"). Deterministic given fact order.
ApplyCallResult apply_call(const SymbolicState& state,
                           const std::vector<Clause>& instantiated_post,
                           const SatOptions& options = {});

/// Symbolic execution of a scenario routine: every call's precondition must
/// follow from the accumulated facts, postconditions are applied under the
/// frame rule, conditionals fork (branch states are never merged), loops
/// havoc at the head and assume the exit condition afterwards, and the
/// routine postcondition must hold in every terminal state.
std::vector<Diagnostic> check_scenario(const RequirementsModel& model,
                                       const std::string& class_name,
                                       const std::string& routine_name,
                                       const CheckOptions& options = {});

/// The strict pairwise check: for consecutive calls, post_i plus invariants
/// must entail pre_{i+1}; the first call's precondition is checked against
/// the routine require. No retention — stronger than check_scenario.
/// Requires a plain sequence of calls (no branches, loops, or opaque
/// statements).
std::vector<Diagnostic> check_chain(const RequirementsModel& model, const std::string& class_name,
                                    const std::string& routine_name,
                                    const CheckOptions& options = {});

/// (a) the invariant conjunction is satisfiable; (b) every contracted
/// feature's pre and post are each satisfiable together with the
/// invariants.
std::vector<Diagnostic> check_invariant_feasibility(const RequirementsModel& model,
                                                    const std::string& class_name,
                                                    const CheckOptions& options = {});

/// Flags each invariant clause entailed by the conjunction of the others.
std::vector<Diagnostic> lint_redundant_invariants(const RequirementsModel& model,
                                                  const std::string& class_name,
                                                  const CheckOptions& options = {});

/// The object paths a routine check brings into scope: the current object,
/// formals, locals, and every attribute chain occurring as a path prefix in
/// the routine's text, each mapped to its declared class name (which may
/// not be present in the model). Exposed for tests and the CLI.
Scope routine_scope(const RequirementsModel& model, const ClassDecl& cls,
                    const FeatureDecl& routine);

}  // namespace reqlens

#endif  // REQLENS_CHECKER_HPP
