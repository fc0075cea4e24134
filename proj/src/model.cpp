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

#include "reqlens/model.hpp"

#include <set>
#include <stdexcept>

namespace reqlens {

const ClassDecl* RequirementsModel::find_class(const std::string& name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : &it->second;
}

const FeatureDecl* RequirementsModel::find_feature(const std::string& class_name,
                                                   const std::string& feature_name) const {
  const ClassDecl* cls = find_class(class_name);
  return cls ? cls->find_feature(feature_name) : nullptr;
}

namespace {

enum class VisitState { Unvisited, InProgress, Done };

struct Resolver {
  std::map<std::string, ClassDecl> classes;
  std::map<std::string, VisitState> state;
  std::vector<Diagnostic>& diags;

  explicit Resolver(std::vector<Diagnostic>& d) : diags(d) {}

  // Flattens `name` in place: parents first, then merge their tables in
  // parent order ahead of the class's own features. Identical declarations
  // reaching a class twice (diamonds, re-flattening an already-flattened
  // model) merge silently; conflicting duplicates are resolution errors.
  void flatten(const std::string& name) {
    VisitState& st = state[name];
    if (st == VisitState::Done) return;
    ClassDecl& cls = classes.at(name);
    if (st == VisitState::InProgress) {
      diags.push_back(make_diag(Severity::Error, codes::kResolutionError, cls.loc,
                                "inheritance cycle through class " + name));
      st = VisitState::Done;
      return;
    }
    st = VisitState::InProgress;

    std::vector<FeatureDecl> merged;
    std::vector<Clause> merged_invariants;
    auto merge_feature = [&](const FeatureDecl& f, const std::string& origin) {
      for (const FeatureDecl& existing : merged) {
        if (existing.name != f.name) continue;
        if (!features_equal(existing, f)) {
          diags.push_back(make_diag(
              Severity::Error, codes::kResolutionError, cls.loc,
              "duplicate feature `" + f.name + "` in class " + name + " after flattening" +
                  (origin.empty() ? "" : " (inherited from " + origin + ")")));
        }
        return;
      }
      merged.push_back(f);
    };

    for (const std::string& parent : cls.parents) {
      auto it = classes.find(parent);
      if (it == classes.end()) {
        diags.push_back(make_diag(Severity::Error, codes::kResolutionError, cls.loc,
                                  "class " + name + " inherits unknown class " + parent));
        continue;
      }
      flatten(parent);
      for (const FeatureDecl& f : it->second.features) merge_feature(f, parent);
      for (const Clause& c : it->second.invariant_clauses) {
        bool present = false;
        for (const Clause& own : merged_invariants)
          if (own.tag == c.tag && formulas_equal(own.formula, c.formula)) present = true;
        if (!present) merged_invariants.push_back(c);
      }
    }
    for (const FeatureDecl& f : cls.features) merge_feature(f, "");
    for (const Clause& c : cls.invariant_clauses) {
      bool present = false;
      for (const Clause& own : merged_invariants)
        if (own.tag == c.tag && formulas_equal(own.formula, c.formula)) present = true;
      if (!present) merged_invariants.push_back(c);
    }

    cls.features = std::move(merged);
    cls.invariant_clauses = std::move(merged_invariants);
    cls.is_deferred = false;
    for (const FeatureDecl& f : cls.features)
      if (f.is_deferred) cls.is_deferred = true;
    state[name] = VisitState::Done;
  }
};

}  // namespace

RequirementsModel build_model(const std::vector<ClassDecl>& sources,
                              std::vector<Diagnostic>& diagnostics) {
  Resolver resolver(diagnostics);
  for (const ClassDecl& cls : sources) {
    if (resolver.classes.count(cls.name)) {
      diagnostics.push_back(make_diag(Severity::Error, codes::kResolutionError, cls.loc,
                                      "duplicate class " + cls.name));
      continue;
    }
    ClassDecl copy = cls;
    for (FeatureDecl& f : copy.features)
      if (f.origin_class.empty()) f.origin_class = copy.name;
    resolver.classes.emplace(cls.name, std::move(copy));
  }
  for (const auto& [name, cls] : resolver.classes) resolver.flatten(name);
  return RequirementsModel(std::move(resolver.classes));
}

Path PathSubstitution::apply(const Path& p) const {
  if (p.empty()) return p;
  auto it = by_formal.find(p.front());
  if (it != by_formal.end()) {
    Path out = it->second;
    out.insert(out.end(), p.begin() + 1, p.end());
    return out;
  }
  Path out = receiver_prefix;
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

FormulaPtr rewrite_formula(const FormulaPtr& f, const PathSubstitution& subst) {
  if (!f) return f;
  switch (f->kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Leaf: {
      Atom a = f->atom();
      switch (a.shape) {
        case Atom::Shape::QueryPath:
          a.path = subst.apply(a.path);
          break;
        case Atom::Shape::Predicate:
          if (a.receiver.empty() && !subst.by_formal.count(a.feature)) {
            a.receiver = subst.receiver_prefix;
          } else {
            a.receiver = subst.apply(a.receiver);
          }
          for (Path& arg : a.arguments) arg = subst.apply(arg);
          break;
        case Atom::Shape::Equality:
        case Atom::Shape::Disequality:
          a.left = subst.apply(a.left);
          a.right = subst.apply(a.right);
          break;
        case Atom::Shape::Opaque:
          break;  // opaque text is never rewritten
      }
      return Formula::leaf(std::move(a));
    }
    case Formula::Kind::Not:
      return Formula::negation(rewrite_formula(f->lhs(), subst));
    case Formula::Kind::And:
      return Formula::conjunction(rewrite_formula(f->lhs(), subst),
                                  rewrite_formula(f->rhs(), subst));
    case Formula::Kind::Or:
      return Formula::disjunction(rewrite_formula(f->lhs(), subst),
                                  rewrite_formula(f->rhs(), subst));
    case Formula::Kind::Implies:
      return Formula::implication(rewrite_formula(f->lhs(), subst),
                                  rewrite_formula(f->rhs(), subst));
  }
  return f;
}

InstantiatedContract instantiate_contract(const FeatureDecl& feature, const Path& receiver,
                                          const std::vector<Path>& actuals) {
  if (actuals.size() != feature.formals.size())
    throw std::invalid_argument("instantiate_contract: arity mismatch for " + feature.name);

  PathSubstitution subst;
  subst.receiver_prefix = receiver;
  for (size_t i = 0; i < actuals.size(); ++i)
    subst.by_formal[feature.formals[i].name] = actuals[i];

  InstantiatedContract out;
  auto instantiate = [&](const std::vector<Clause>& clauses, std::vector<Clause>& target) {
    for (const Clause& c : clauses) {
      Clause rewritten = c;
      rewritten.formula = rewrite_formula(c.formula, subst);
      target.push_back(std::move(rewritten));
    }
  };
  instantiate(feature.preconditions, out.pre_clauses);
  instantiate(feature.postconditions, out.post_clauses);

  std::vector<FormulaPtr> pre, post;
  for (const Clause& c : out.pre_clauses) pre.push_back(c.formula);
  for (const Clause& c : out.post_clauses) post.push_back(c.formula);
  out.precondition = conjoin(pre);
  out.postcondition = conjoin(post);
  return out;
}

FormulaPtr invariant_context(const RequirementsModel& model, const Scope& scope,
                             std::vector<Diagnostic>* warnings, SourceLocation warn_location) {
  std::vector<FormulaPtr> parts;
  for (const auto& [path_text, class_name] : scope) {
    const ClassDecl* cls = model.find_class(class_name);
    if (!cls) {
      if (warnings)
        warnings->push_back(make_diag(
            Severity::Warning, codes::kUnknownClass, warn_location,
            "no class " + class_name + " in the model; invariants of " +
                (path_text.empty() ? std::string("the current object") : "`" + path_text + "`") +
                " are unavailable"));
      continue;
    }
    PathSubstitution subst;
    subst.receiver_prefix = split_path(path_text);
    for (const Clause& c : cls->invariant_clauses)
      parts.push_back(rewrite_formula(c.formula, subst));
  }
  return conjoin(parts);
}

}  // namespace reqlens
