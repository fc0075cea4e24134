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

#ifndef REQLENS_STORIES_HPP
#define REQLENS_STORIES_HPP

#include <string>
#include <vector>

#include "reqlens/diagnostics.hpp"
#include "reqlens/model.hpp"

namespace reqlens {

enum class StoryRule {
  PreconditionDisjunct,
  LoopExit,
  ImplicationAntecedentTrue,
  ImplicationAntecedentFalse,
  // Synthesized by test generation only, never by extract_stories: a routine
  // with no extractable cases is exercised whole (specification drivers).
  WholeRoutine,
};

const char* story_rule_name(StoryRule rule);

/// A use-case story: one path through a scenario routine, characterized by a
/// precondition disjunct, a loop exit, or an implication case.
struct Story {
  std::string source_class;
  std::string source_routine;
  StoryRule rule = StoryRule::PreconditionDisjunct;
  FormulaPtr condition;  // the characterizing condition
  std::string name;
  FeatureDecl routine;        // the generated story routine
  std::string routine_text;   // its canonical RSL rendering
};

struct ExtractResult {
  std::vector<Story> stories;
  std::vector<Diagnostic> diagnostics;
};

/// Extracts stories from one routine as the union (no cross-product) of:
/// one story per top-level disjunct of the require (when there are at least
/// two), one per top-level disjunct of each loop's until-condition, and two
/// per `implies` clause of the ensure (antecedent true; consequent true with
/// antecedent false). Emits a NOTHING_TO_EXTRACT info when no rule fires.
ExtractResult extract_stories(const RequirementsModel& model, const std::string& class_name,
                              const std::string& routine_name);

/// Emits `class <SOURCE>_STORIES inherit <SOURCE> feature ... end` for a
/// non-empty list of stories, all from routines of the named class. The
/// output re-parses cleanly and resolves against the source model.
std::string emit_story_class(const std::vector<Story>& stories, const std::string& source_class);

std::string story_class_name(const std::string& source_class);

}  // namespace reqlens

#endif  // REQLENS_STORIES_HPP
