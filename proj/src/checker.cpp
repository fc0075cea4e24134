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

#include "reqlens/checker.hpp"

#include <optional>
#include <set>

namespace reqlens {

const char* fact_origin_name(FactOrigin o) {
  switch (o) {
    case FactOrigin::Require:
      return "require";
    case FactOrigin::Post:
      return "post";
    case FactOrigin::Branch:
      return "branch";
    case FactOrigin::Exit:
      return "exit";
    case FactOrigin::Kept:
      return "kept";
  }
  return "unknown";
}

FormulaPtr SymbolicState::conjunction() const {
  std::vector<FormulaPtr> fs;
  for (const Fact& f : facts) fs.push_back(f.formula);
  if (invariant_context) fs.push_back(invariant_context);
  return conjoin(fs);
}

namespace {

bool is_primitive_type(const std::string& type) {
  return type == "BOOLEAN" || type == "INTEGER" || type == "NATURAL" || type == "REAL" ||
         type == "STRING" || type == "CHARACTER";
}

std::string clause_text(const Clause& c) {
  std::string s = pretty(c.formula);
  return c.tag.empty() ? s : c.tag + ": " + s;
}

/// Resolves the declared class of a dotted path within a routine's frame.
struct PathResolver {
  enum class Status { Resolved, UnknownEntity, BlockedByUnknownClass };

  const RequirementsModel& model;
  const ClassDecl& cls;
  std::map<std::string, std::string> entities;  // formal/local name -> declared type

  std::pair<Status, std::string> declared_class(const Path& p) const {
    if (p.empty()) return {Status::Resolved, cls.name};
    std::string type;
    auto it = entities.find(p.front());
    if (it != entities.end()) {
      type = it->second;
    } else if (const FeatureDecl* f = cls.find_feature(p.front()); f && f->result_type) {
      type = *f->result_type;
    } else {
      return {Status::UnknownEntity, {}};
    }
    for (size_t i = 1; i < p.size(); ++i) {
      const ClassDecl* c = model.find_class(type);
      if (!c) return {Status::BlockedByUnknownClass, type};
      const FeatureDecl* f = c->find_feature(p[i]);
      if (!f || !f->result_type) return {Status::UnknownEntity, {}};
      type = *f->result_type;
    }
    return {Status::Resolved, type};
  }
};

void add_prefixes(const Path& p, bool include_full, std::set<std::string>& out) {
  const size_t stop = include_full ? p.size() : (p.empty() ? 0 : p.size() - 1);
  Path prefix;
  for (size_t i = 0; i < stop; ++i) {
    prefix.push_back(p[i]);
    out.insert(join_path(prefix));
  }
}

void collect_paths_from_formula(const FormulaPtr& f, std::set<std::string>& out) {
  for (const Atom& a : collect_atoms(f)) {
    switch (a.shape) {
      case Atom::Shape::QueryPath:
        add_prefixes(a.path, false, out);
        break;
      case Atom::Shape::Predicate:
        add_prefixes(a.receiver, true, out);
        for (const Path& arg : a.arguments) add_prefixes(arg, true, out);
        break;
      case Atom::Shape::Equality:
      case Atom::Shape::Disequality:
        add_prefixes(a.left, false, out);
        add_prefixes(a.right, false, out);
        break;
      case Atom::Shape::Opaque:
        break;
    }
  }
}

void collect_paths_from_call(const CallStmt& call, std::set<std::string>& out) {
  add_prefixes(call.target, true, out);
  for (const Path& arg : call.arguments) add_prefixes(arg, true, out);
}

void collect_paths_from_body(const Body& body, std::set<std::string>& out) {
  for (const Statement& s : body.statements) {
    if (const auto* call = std::get_if<CallStmt>(&s.node)) {
      collect_paths_from_call(*call, out);
    } else if (const auto* cond = std::get_if<ConditionalStmt>(&s.node)) {
      collect_paths_from_formula(cond->condition, out);
      collect_paths_from_body(cond->then_branch, out);
      if (cond->else_branch) collect_paths_from_body(*cond->else_branch, out);
    } else if (const auto* loop = std::get_if<LoopStmt>(&s.node)) {
      collect_paths_from_formula(loop->until_condition, out);
      collect_paths_from_body(loop->body, out);
    } else if (const auto* opaque = std::get_if<OpaqueStmt>(&s.node)) {
      if (opaque->embedded) collect_paths_from_call(*opaque->embedded, out);
    }
  }
}

struct ResolvedCall {
  const FeatureDecl* feature = nullptr;  // null when the contract is unknown
  Path receiver;
  std::string qualified_name;  // for messages, e.g. `l.place_book_on_hold`
};

/// Shared machinery for the scenario and chain checks.
class RoutineChecker {
 public:
  RoutineChecker(const RequirementsModel& model, const ClassDecl& cls, const FeatureDecl& routine,
                 const CheckOptions& options)
      : model_(model), cls_(cls), routine_(routine), options_(options), resolver_{model, cls, {}} {
    for (const Formal& f : routine.formals) resolver_.entities[f.name] = f.type;
    for (const Formal& f : routine.locals) resolver_.entities[f.name] = f.type;
    build_scope();
    build_invariant_context();
  }

  std::vector<Diagnostic> take_diagnostics() {
    dedupe_diagnostics(diags_);
    return std::move(diags_);
  }

  const FormulaPtr& invariants() const { return inv_; }
  const Scope& scope() const { return scope_; }

  void run_scenario() {
    SymbolicState initial;
    initial.invariant_context = inv_;
    for (const Clause& c : routine_.preconditions)
      initial.facts.push_back(Fact{c.formula, FactOrigin::Require});
    if (!check_consistent(initial, routine_.loc, "the routine require clauses")) return;

    std::vector<SymbolicState> terminals =
        routine_.body ? run(initial, routine_.body->statements, 0) : std::vector{initial};

    for (const SymbolicState& terminal : terminals) {
      for (const Clause& c : routine_.postconditions) {
        EntailResult res = entail_or_report(terminal.conjunction(), c.formula, c.loc);
        if (res.outcome == SatOutcome::CapacityExceeded) return;
        if (!res.entailed) {
          Diagnostic d = make_diag(Severity::Error, codes::kPostUnproven, c.loc,
                                   "postcondition `" + clause_text(c) + "` of " + cls_.name + "." +
                                       routine_.name + " is not established at the end of the scenario");
          d.has_witness = true;
          d.witness = std::move(res.counterexample);
          diags_.push_back(std::move(d));
        }
      }
    }
  }

  void run_chain() {
    std::vector<const CallStmt*> calls;
    if (routine_.body) {
      for (const Statement& s : routine_.body->statements) {
        const auto* call = std::get_if<CallStmt>(&s.node);
        if (!call) {
          diags_.push_back(make_diag(Severity::Error, codes::kNotAPlainSequence,
                                     statement_location(s),
                                     "chain checking requires a plain sequence of calls; " +
                                         std::string(cls_.name) + "." + routine_.name +
                                         " contains a non-call statement"));
          return;
        }
        calls.push_back(call);
      }
    }

    FormulaPtr premises = conjoin_clauses(routine_.preconditions);
    std::string premise_origin = "the routine require";
    for (size_t i = 0; i < calls.size(); ++i) {
      const CallStmt& call = *calls[i];
      ResolvedCall resolved = resolve_call(call);
      std::optional<InstantiatedContract> contract = contract_for(resolved, call);
      const std::string step = "chain step " + std::to_string(i + 1);
      if (!contract) {
        premises = Formula::constant(true);
        premise_origin = "the (unknown) postcondition of `" + resolved.qualified_name + "`";
        continue;
      }
      bool step_failed = false;
      for (const Clause& pre : contract->pre_clauses) {
        EntailResult res =
            entail_or_report(Formula::conjunction(premises, inv_), pre.formula, call.loc);
        if (res.outcome == SatOutcome::CapacityExceeded) return;
        if (!res.entailed) {
          step_failed = true;
          Diagnostic d = make_diag(
              Severity::Error, codes::kPreUnproven, call.loc,
              step + ": " + premise_origin + " plus the invariants does not entail precondition `" +
                  clause_text(pre) + "` of " + resolved.qualified_name);
          d.has_witness = true;
          d.witness = std::move(res.counterexample);
          diags_.push_back(std::move(d));
        }
      }
      // Once a link is broken the sequence is already invalid; checking the
      // remaining pairs would only cascade from the first break.
      if (step_failed) return;
      premises = contract->postcondition;
      premise_origin = "the postcondition of `" + resolved.qualified_name + "`";
    }
  }

 private:
  const RequirementsModel& model_;
  const ClassDecl& cls_;
  const FeatureDecl& routine_;
  CheckOptions options_;
  PathResolver resolver_;
  Scope scope_;
  FormulaPtr inv_;
  std::vector<Diagnostic> diags_;
  bool capacity_reported_ = false;

  void build_scope() {
    std::set<std::string> candidates;
    for (const Formal& f : routine_.formals) candidates.insert(f.name);
    for (const Formal& f : routine_.locals) candidates.insert(f.name);
    for (const Clause& c : routine_.preconditions) collect_paths_from_formula(c.formula, candidates);
    for (const Clause& c : routine_.postconditions) collect_paths_from_formula(c.formula, candidates);
    if (routine_.body) collect_paths_from_body(*routine_.body, candidates);

    scope_[""] = cls_.name;
    for (const std::string& path_text : candidates) {
      const Path p = split_path(path_text);
      auto [status, type] = resolver_.declared_class(p);
      switch (status) {
        case PathResolver::Status::Resolved:
          if (!is_primitive_type(type)) scope_[path_text] = type;
          break;
        case PathResolver::Status::UnknownEntity:
          diags_.push_back(make_diag(Severity::Warning, codes::kUnknownClass, routine_.loc,
                                     "cannot resolve a declared class for `" + path_text +
                                         "`; its invariants are unavailable"));
          break;
        case PathResolver::Status::BlockedByUnknownClass:
          // The unknown prefix class is already reported via its own entry.
          break;
      }
    }
  }

  void build_invariant_context() {
    inv_ = invariant_context(model_, scope_, &diags_, routine_.loc);
    if (options_.functional_equality) {
      std::vector<FormulaPtr> context{inv_};
      context.push_back(conjoin_clauses(routine_.preconditions));
      context.push_back(conjoin_clauses(routine_.postconditions));
      FormulaPtr exclusions = equality_exclusions(context);
      if (exclusions->kind() != Formula::Kind::True)
        inv_ = Formula::conjunction(inv_, exclusions);
    }
  }

  void report_capacity(SourceLocation loc) {
    if (capacity_reported_) return;
    capacity_reported_ = true;
    diags_.push_back(make_diag(Severity::Error, codes::kCapacityExceeded, loc,
                               "the check exceeds the configured atom capacity (" +
                                   std::to_string(options_.sat.max_atoms) + ")"));
  }

  EntailResult entail_or_report(const FormulaPtr& premises, const FormulaPtr& conclusion,
                                SourceLocation loc) {
    EntailResult res = entails(premises, conclusion, options_.sat);
    if (res.outcome == SatOutcome::CapacityExceeded) report_capacity(loc);
    return res;
  }

  bool check_consistent(const SymbolicState& state, SourceLocation loc, const std::string& what) {
    SatResult res = satisfiable(state.conjunction(), options_.sat);
    if (res.outcome == SatOutcome::CapacityExceeded) {
      report_capacity(loc);
      return false;
    }
    if (res.outcome == SatOutcome::Unsatisfiable) {
      diags_.push_back(make_diag(Severity::Error, codes::kStateInconsistent, loc,
                                 what + " together with the invariant context are unsatisfiable"));
      return false;
    }
    return true;
  }

  ResolvedCall resolve_call(const CallStmt& call) {
    ResolvedCall out;
    if (call.target.empty()) {
      out.qualified_name = cls_.name + "." + call.feature;
      out.feature = cls_.find_feature(call.feature);
      return out;
    }
    out.qualified_name = join_path(call.target) + "." + call.feature;
    auto [status, type] = resolver_.declared_class(call.target);
    if (status != PathResolver::Status::Resolved) return out;
    const FeatureDecl* feature = model_.find_feature(type, call.feature);
    if (!feature) return out;
    out.feature = feature;
    out.receiver = call.target;
    return out;
  }

  /// Instantiated contract of a resolved call, or nullopt when the call must
  /// be treated as contract-free (unknown feature or arity mismatch).
  std::optional<InstantiatedContract> contract_for(const ResolvedCall& resolved,
                                                   const CallStmt& call) {
    if (!resolved.feature) {
      diags_.push_back(make_diag(Severity::Warning, codes::kUnknownContract, call.loc,
                                 "call target `" + resolved.qualified_name +
                                     "` has no known contract; assuming require true and ensure "
                                     "true, and discarding accumulated facts"));
      return std::nullopt;
    }
    if (call.arguments.size() != resolved.feature->formals.size()) {
      diags_.push_back(make_diag(
          Severity::Error, codes::kArityMismatch, call.loc,
          "call to `" + resolved.qualified_name + "` passes " +
              std::to_string(call.arguments.size()) + " argument(s), but the feature declares " +
              std::to_string(resolved.feature->formals.size())));
      return std::nullopt;
    }
    return instantiate_contract(*resolved.feature, resolved.receiver, call.arguments);
  }

  /// Unknown-contract havoc: accumulated post/kept facts are dropped;
  /// require, branch and exit facts stand (they restate the routine's frame
  /// rather than effects a contract could undo).
  static SymbolicState havoc_posts(const SymbolicState& state) {
    SymbolicState out;
    out.invariant_context = state.invariant_context;
    for (const Fact& f : state.facts)
      if (f.origin != FactOrigin::Post && f.origin != FactOrigin::Kept) out.facts.push_back(f);
    return out;
  }

  /// Loop-head havoc: post/kept/branch/exit facts are dropped; require-origin
  /// facts survive only when re-entailed by the invariant context alone.
  SymbolicState havoc_loop_head(const SymbolicState& state) {
    SymbolicState out;
    out.invariant_context = state.invariant_context;
    for (const Fact& f : state.facts) {
      if (f.origin != FactOrigin::Require) continue;
      EntailResult res = entails(inv_, f.formula, options_.sat);
      if (res.outcome != SatOutcome::CapacityExceeded && res.entailed) out.facts.push_back(f);
    }
    return out;
  }

  SymbolicState with_fact(const SymbolicState& state, FormulaPtr f, FactOrigin origin) const {
    SymbolicState out = state;
    out.facts.push_back(Fact{std::move(f), origin});
    return out;
  }

  std::vector<SymbolicState> run(const SymbolicState& state, const std::vector<Statement>& stmts,
                                 size_t index) {
    if (capacity_reported_) return {};
    if (index == stmts.size()) return {state};
    const Statement& stmt = stmts[index];

    if (const auto* call = std::get_if<CallStmt>(&stmt.node)) {
      SymbolicState next = step_call(state, *call);
      if (capacity_reported_) return {};
      return run(next, stmts, index + 1);
    }

    if (const auto* cond = std::get_if<ConditionalStmt>(&stmt.node)) {
      std::vector<SymbolicState> out;
      const Body empty_body;
      const std::pair<FormulaPtr, const Body*> branches[2] = {
          {cond->condition, &cond->then_branch},
          {Formula::negation(cond->condition),
           cond->else_branch ? &*cond->else_branch : &empty_body}};
      for (const auto& [guard, body] : branches) {
        SymbolicState branch_state = with_fact(state, guard, FactOrigin::Branch);
        if (!check_consistent(branch_state, cond->loc,
                              "the branch condition `" + pretty(guard) + "`"))
          continue;
        for (SymbolicState& terminal : run(branch_state, body->statements, 0)) {
          std::vector<SymbolicState> continued = run(terminal, stmts, index + 1);
          out.insert(out.end(), continued.begin(), continued.end());
        }
      }
      return out;
    }

    if (const auto* loop = std::get_if<LoopStmt>(&stmt.node)) {
      SymbolicState head = havoc_loop_head(state);
      SymbolicState body_entry =
          with_fact(head, Formula::negation(loop->until_condition), FactOrigin::Branch);
      if (check_consistent(body_entry, loop->loc,
                           "the loop continuation condition `not (" +
                               pretty(loop->until_condition) + ")`")) {
        run(body_entry, loop->body.statements, 0);  // one abstract iteration
      }
      SymbolicState after = with_fact(head, loop->until_condition, FactOrigin::Exit);
      if (!check_consistent(after, loop->loc,
                            "the loop exit condition `" + pretty(loop->until_condition) + "`"))
        return {};
      return run(after, stmts, index + 1);
    }

    const auto& opaque = std::get<OpaqueStmt>(stmt.node);
    diags_.push_back(make_diag(Severity::Info, codes::kOpaqueStmt, opaque.loc,
                               "statement is not interpreted; the symbolic state is unchanged: `" +
                                   Atom::opaque(opaque.text).text + "`"));
    if (opaque.kind != OpaqueStmt::Kind::Creation && opaque.embedded) {
      ResolvedCall resolved = resolve_call(*opaque.embedded);
      if (!resolved.feature)
        diags_.push_back(make_diag(Severity::Warning, codes::kUnknownContract, opaque.loc,
                                   "application `" + resolved.qualified_name +
                                       "` inside an opaque statement has no known contract"));
    }
    return run(state, stmts, index + 1);
  }

  SymbolicState step_call(const SymbolicState& state, const CallStmt& call) {
    ResolvedCall resolved = resolve_call(call);
    std::optional<InstantiatedContract> contract = contract_for(resolved, call);
    if (!contract) return havoc_posts(state);

    for (const Clause& pre : contract->pre_clauses) {
      EntailResult res = entail_or_report(state.conjunction(), pre.formula, call.loc);
      if (res.outcome == SatOutcome::CapacityExceeded) return state;
      if (!res.entailed) {
        Diagnostic d = make_diag(Severity::Error, codes::kPreUnproven, call.loc,
                                 "precondition `" + clause_text(pre) + "` of " +
                                     resolved.qualified_name +
                                     " is not established by the accumulated facts");
        d.has_witness = true;
        d.witness = std::move(res.counterexample);
        diags_.push_back(std::move(d));
      }
    }

    ApplyCallResult applied = apply_call(state, contract->post_clauses, options_.sat);
    if (applied.inconsistent) {
      diags_.push_back(make_diag(Severity::Error, codes::kStateInconsistent, call.loc,
                                 "the postcondition of " + resolved.qualified_name +
                                     " together with the invariant context is unsatisfiable"));
    }
    return applied.state;
  }
};

const FeatureDecl* find_routine_or_report(const RequirementsModel& model,
                                          const std::string& class_name,
                                          const std::string& routine_name,
                                          std::vector<Diagnostic>& diags,
                                          const ClassDecl** cls_out) {
  const ClassDecl* cls = model.find_class(class_name);
  if (!cls) {
    diags.push_back(make_diag(Severity::Error, codes::kUnknownClass, {},
                              "unknown class " + class_name));
    return nullptr;
  }
  *cls_out = cls;
  const FeatureDecl* feature = cls->find_feature(routine_name);
  if (!feature) {
    diags.push_back(make_diag(Severity::Error, codes::kUnknownRoutine, cls->loc,
                              "class " + class_name + " has no feature " + routine_name));
    return nullptr;
  }
  if (!feature->body) {
    diags.push_back(make_diag(Severity::Error, codes::kUnknownRoutine, feature->loc,
                              class_name + "." + routine_name + " has no body to check"));
    return nullptr;
  }
  return feature;
}

}  // namespace

ApplyCallResult apply_call(const SymbolicState& state, const std::vector<Clause>& instantiated_post,
                           const SatOptions& options) {
  ApplyCallResult out;
  out.state.invariant_context = state.invariant_context;
  for (const Clause& c : instantiated_post)
    out.state.facts.push_back(Fact{c.formula, FactOrigin::Post});

  SatResult base = satisfiable(out.state.conjunction(), options);
  if (base.outcome == SatOutcome::Unsatisfiable) {
    out.inconsistent = true;
    return out;
  }

  for (const Fact& prior : state.facts) {
    SymbolicState trial = out.state;
    trial.facts.push_back(Fact{prior.formula, FactOrigin::Kept});
    SatResult res = satisfiable(trial.conjunction(), options);
    if (res.outcome == SatOutcome::Satisfiable) out.state = std::move(trial);
  }
  return out;
}

std::vector<Diagnostic> check_scenario(const RequirementsModel& model,
                                       const std::string& class_name,
                                       const std::string& routine_name,
                                       const CheckOptions& options) {
  std::vector<Diagnostic> diags;
  const ClassDecl* cls = nullptr;
  const FeatureDecl* routine = find_routine_or_report(model, class_name, routine_name, diags, &cls);
  if (!routine) return diags;
  RoutineChecker checker(model, *cls, *routine, options);
  checker.run_scenario();
  std::vector<Diagnostic> result = checker.take_diagnostics();
  diags.insert(diags.end(), result.begin(), result.end());
  return diags;
}

std::vector<Diagnostic> check_chain(const RequirementsModel& model, const std::string& class_name,
                                    const std::string& routine_name, const CheckOptions& options) {
  std::vector<Diagnostic> diags;
  const ClassDecl* cls = nullptr;
  const FeatureDecl* routine = find_routine_or_report(model, class_name, routine_name, diags, &cls);
  if (!routine) return diags;
  RoutineChecker checker(model, *cls, *routine, options);
  checker.run_chain();
  std::vector<Diagnostic> result = checker.take_diagnostics();
  diags.insert(diags.end(), result.begin(), result.end());
  return diags;
}

std::vector<Diagnostic> check_invariant_feasibility(const RequirementsModel& model,
                                                    const std::string& class_name,
                                                    const CheckOptions& options) {
  std::vector<Diagnostic> diags;
  const ClassDecl* cls = model.find_class(class_name);
  if (!cls) {
    diags.push_back(
        make_diag(Severity::Error, codes::kUnknownClass, {}, "unknown class " + class_name));
    return diags;
  }

  FormulaPtr inv = conjoin_clauses(cls->invariant_clauses);
  if (options.functional_equality) {
    FormulaPtr exclusions = equality_exclusions({inv});
    if (exclusions->kind() != Formula::Kind::True) inv = Formula::conjunction(inv, exclusions);
  }

  SatResult inv_sat = satisfiable(inv, options.sat);
  if (inv_sat.outcome == SatOutcome::CapacityExceeded) {
    diags.push_back(make_diag(Severity::Error, codes::kCapacityExceeded, cls->loc,
                              "invariant feasibility check exceeds the atom capacity"));
    return diags;
  }
  if (inv_sat.outcome == SatOutcome::Unsatisfiable) {
    diags.push_back(make_diag(Severity::Error, codes::kStateInconsistent, cls->loc,
                              "the invariant clauses of class " + class_name +
                                  " are jointly unsatisfiable"));
    return diags;
  }

  for (const FeatureDecl& f : cls->features) {
    if (!f.has_contract()) continue;
    if (!f.preconditions.empty()) {
      SatResult res = satisfiable(Formula::conjunction(conjoin_clauses(f.preconditions), inv),
                                  options.sat);
      if (res.outcome == SatOutcome::Unsatisfiable)
        diags.push_back(make_diag(Severity::Error, codes::kPreInfeasible, f.loc,
                                  "the precondition of " + class_name + "." + f.name +
                                      " is unsatisfiable together with the class invariants"));
    }
    if (!f.postconditions.empty()) {
      SatResult res = satisfiable(Formula::conjunction(conjoin_clauses(f.postconditions), inv),
                                  options.sat);
      if (res.outcome == SatOutcome::Unsatisfiable)
        diags.push_back(make_diag(Severity::Error, codes::kPostInfeasible, f.loc,
                                  "the postcondition of " + class_name + "." + f.name +
                                      " is unsatisfiable together with the class invariants"));
    }
  }
  return diags;
}

std::vector<Diagnostic> lint_redundant_invariants(const RequirementsModel& model,
                                                  const std::string& class_name,
                                                  const CheckOptions& options) {
  std::vector<Diagnostic> diags;
  const ClassDecl* cls = model.find_class(class_name);
  if (!cls) {
    diags.push_back(
        make_diag(Severity::Error, codes::kUnknownClass, {}, "unknown class " + class_name));
    return diags;
  }
  const std::vector<Clause>& clauses = cls->invariant_clauses;
  for (size_t i = 0; i < clauses.size(); ++i) {
    std::vector<FormulaPtr> others;
    for (size_t j = 0; j < clauses.size(); ++j)
      if (j != i) others.push_back(clauses[j].formula);
    EntailResult res = entails(conjoin(others), clauses[i].formula, options.sat);
    if (res.outcome != SatOutcome::CapacityExceeded && res.entailed)
      diags.push_back(make_diag(Severity::Info, codes::kRedundantInvariant, clauses[i].loc,
                                "invariant clause `" + clause_text(clauses[i]) +
                                    "` is entailed by the remaining clauses"));
  }
  return diags;
}

Scope routine_scope(const RequirementsModel& model, const ClassDecl& cls,
                    const FeatureDecl& routine) {
  RoutineChecker checker(model, cls, routine, CheckOptions{});
  return checker.scope();
}

}  // namespace reqlens
