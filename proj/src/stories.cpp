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

#include "reqlens/stories.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "reqlens/logic.hpp"
#include "reqlens/printer.hpp"

namespace reqlens {

const char* story_rule_name(StoryRule rule) {
  switch (rule) {
    case StoryRule::PreconditionDisjunct:
      return "PRECONDITION_DISJUNCT";
    case StoryRule::LoopExit:
      return "LOOP_EXIT";
    case StoryRule::ImplicationAntecedentTrue:
      return "IMPLICATION_ANTECEDENT_TRUE";
    case StoryRule::ImplicationAntecedentFalse:
      return "IMPLICATION_ANTECEDENT_FALSE";
    case StoryRule::WholeRoutine:
      return "WHOLE_ROUTINE";
  }
  return "UNKNOWN";
}

std::string story_class_name(const std::string& source_class) { return source_class + "_STORIES"; }

namespace {

const Atom* principal_atom(const FormulaPtr& f) {
  if (!f) return nullptr;
  if (f->kind() == Formula::Kind::Leaf) return &f->atom();
  if (const Atom* a = principal_atom(f->lhs())) return a;
  return principal_atom(f->rhs());
}

/// Slug for story names, derived from the characterizing condition's
/// principal atom: the last path segment (or predicate feature name),
/// lower-cased with punctuation mapped to underscores, truncated at the
/// first `_is_` so `red_flag_is_up` reads as `red_flag`.
std::string condition_slug(const FormulaPtr& condition) {
  const Atom* a = principal_atom(condition);
  std::string base = "case";
  if (a) {
    switch (a->shape) {
      case Atom::Shape::QueryPath:
        base = a->path.empty() ? base : a->path.back();
        break;
      case Atom::Shape::Predicate:
        base = a->feature;
        break;
      case Atom::Shape::Equality:
      case Atom::Shape::Disequality:
        base = a->left.empty() ? base : a->left.back();
        break;
      case Atom::Shape::Opaque:
        base = a->text;
        break;
    }
  }
  std::string slug;
  for (char c : base) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      slug += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (!slug.empty() && slug.back() != '_')
      slug += '_';
  }
  while (!slug.empty() && slug.back() == '_') slug.pop_back();
  if (const size_t cut = slug.find("_is_"); cut != std::string::npos) slug = slug.substr(0, cut);
  return slug.empty() ? "case" : slug;
}

std::string unique_story_name(const std::string& routine, const std::string& slug,
                              const std::vector<Story>& taken) {
  std::string base = routine + "_" + slug + "_story";
  std::string name = base;
  int suffix = 2;
  for (;;) {
    bool clash = false;
    for (const Story& s : taken)
      if (s.name == name) clash = true;
    if (!clash) return name;
    name = base + "_" + std::to_string(suffix++);
  }
}

void collect_loops(const Body& body, std::vector<const LoopStmt*>& out) {
  for (const Statement& s : body.statements) {
    if (const auto* loop = std::get_if<LoopStmt>(&s.node)) {
      out.push_back(loop);
      collect_loops(loop->body, out);
    } else if (const auto* cond = std::get_if<ConditionalStmt>(&s.node)) {
      collect_loops(cond->then_branch, out);
      if (cond->else_branch) collect_loops(*cond->else_branch, out);
    }
  }
}

/// Builds the generated story routine. The body is a single call to the
/// source routine, forwarding its formals. For PRECONDITION_DISJUNCT the
/// disjunct replaces the whole require; loop-exit and implication stories
/// keep the source require (their conditions describe final states) and
/// record the characterizing condition as a Note annotation.
FeatureDecl build_story_routine(const FeatureDecl& source, const Story& story) {
  FeatureDecl out;
  out.name = story.name;
  out.kind = FeatureKind::ScenarioRoutine;
  out.formals = source.formals;

  if (story.rule == StoryRule::PreconditionDisjunct) {
    Clause c;
    c.formula = story.condition;
    out.preconditions.push_back(std::move(c));
  } else {
    out.notes.emplace_back("story_rule", story_rule_name(story.rule));
    out.notes.emplace_back("story_condition", pretty(story.condition));
    out.preconditions = source.preconditions;
  }

  CallStmt call;
  call.feature = source.name;
  for (const Formal& f : source.formals) call.arguments.push_back(Path{f.name});
  Body body;
  body.statements.push_back(Statement{std::move(call)});
  out.body = std::move(body);
  return out;
}

void push_story(std::vector<Story>& stories, const FeatureDecl& source,
                const std::string& class_name, StoryRule rule, FormulaPtr condition) {
  Story s;
  s.source_class = class_name;
  s.source_routine = source.name;
  s.rule = rule;
  s.condition = std::move(condition);
  s.name = unique_story_name(source.name, condition_slug(s.condition), stories);
  s.routine = build_story_routine(source, s);
  s.routine_text = to_rsl(s.routine);
  stories.push_back(std::move(s));
}

}  // namespace

ExtractResult extract_stories(const RequirementsModel& model, const std::string& class_name,
                              const std::string& routine_name) {
  ExtractResult result;
  const ClassDecl* cls = model.find_class(class_name);
  if (!cls) {
    result.diagnostics.push_back(
        make_diag(Severity::Error, codes::kUnknownClass, {}, "unknown class " + class_name));
    return result;
  }
  const FeatureDecl* routine = cls->find_feature(routine_name);
  if (!routine) {
    result.diagnostics.push_back(make_diag(Severity::Error, codes::kUnknownRoutine, cls->loc,
                                           "class " + class_name + " has no feature " +
                                               routine_name));
    return result;
  }

  // R1: precondition disjuncts, when the require splits at all.
  std::vector<FormulaPtr> disjuncts = top_level_dnf(conjoin_clauses(routine->preconditions));
  if (disjuncts.size() >= 2) {
    for (const FormulaPtr& d : disjuncts)
      push_story(result.stories, *routine, class_name, StoryRule::PreconditionDisjunct, d);
  }

  // R2: loop exits, one story per top-level disjunct of each until-condition.
  if (routine->body) {
    std::vector<const LoopStmt*> loops;
    collect_loops(*routine->body, loops);
    for (const LoopStmt* loop : loops) {
      for (const FormulaPtr& d : top_level_dnf(loop->until_condition))
        push_story(result.stories, *routine, class_name, StoryRule::LoopExit, d);
    }
  }

  // R3: two stories per implication in the ensure — the antecedent holds, or
  // the consequent holds with the antecedent false.
  for (const auto& [antecedent, consequent] : implications_of(routine->postconditions)) {
    push_story(result.stories, *routine, class_name, StoryRule::ImplicationAntecedentTrue,
               antecedent);
    push_story(result.stories, *routine, class_name, StoryRule::ImplicationAntecedentFalse,
               Formula::conjunction(consequent, Formula::negation(antecedent)));
  }

  if (result.stories.empty())
    result.diagnostics.push_back(make_diag(
        Severity::Info, codes::kNothingToExtract, routine->loc,
        "no use-case stories can be extracted from " + class_name + "." + routine_name +
            ": the require has a single option, and there are no loops or ensure implications"));
  return result;
}

std::string emit_story_class(const std::vector<Story>& stories, const std::string& source_class) {
  if (stories.empty())
    throw std::invalid_argument("emit_story_class: the story list must not be empty");
  for (const Story& s : stories)
    if (s.source_class != source_class)
      throw std::invalid_argument("emit_story_class: story " + s.name + " is not from " +
                                  source_class);

  ClassDecl cls;
  cls.name = story_class_name(source_class);
  cls.parents.push_back(source_class);
  for (const Story& s : stories) cls.features.push_back(s.routine);
  return to_rsl(cls);
}

}  // namespace reqlens
