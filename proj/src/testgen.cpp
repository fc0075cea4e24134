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

#include "reqlens/testgen.hpp"

#include <cctype>
#include <sstream>

#include "reqlens/logic.hpp"

namespace reqlens {

namespace {

std::string lowercase(const std::string& s) {
  std::string out;
  for (char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string clause_display(const Clause& c) {
  std::string s = pretty(c.formula);
  return c.tag.empty() ? s : c.tag + ": " + s;
}

/// The routine a test exercises: the story routine for extracted stories,
/// the source routine itself for whole-routine stories.
std::string called_routine(const Story& story) {
  return story.rule == StoryRule::WholeRoutine ? story.source_routine : story.name;
}

void emit_test_routine(std::ostringstream& out, const Story& story, const FeatureDecl& source,
                       TestManifestEntry& entry) {
  out << "    test_" << story.name << "\n";
  if (!source.formals.empty()) {
    out << "        local\n";
    for (const Formal& f : source.formals)
      out << "            " << f.name << ": " << f.type << "\n";
  }
  out << "        do\n";
  for (const Formal& f : source.formals)
    out << "            create " << f.name << ".make -- TODO: supply creation arguments\n";
  out << "            " << called_routine(story);
  if (!source.formals.empty()) {
    out << " (";
    for (size_t i = 0; i < source.formals.size(); ++i) {
      if (i > 0) out << ", ";
      out << source.formals[i].name;
    }
    out << ")";
  }
  out << "\n";
  for (const Clause& c : source.postconditions) {
    out << "                -- check: " << clause_display(c) << "\n";
    entry.oracle_clauses.push_back(clause_display(c));
  }
  if (story.rule != StoryRule::WholeRoutine) {
    const std::string condition = pretty(story.condition);
    out << "                -- check: " << condition << "\n";
    entry.oracle_clauses.push_back(condition);
  }
  out << "        end\n\n";
}

}  // namespace

TestGenResult generate_test_skeletons(const RequirementsModel& model,
                                      const std::vector<Story>& stories) {
  TestGenResult result;

  // Group by source class, preserving first-occurrence order.
  std::vector<std::string> class_order;
  for (const Story& s : stories) {
    bool seen = false;
    for (const std::string& c : class_order)
      if (c == s.source_class) seen = true;
    if (!seen) class_order.push_back(s.source_class);
  }

  for (const std::string& class_name : class_order) {
    std::vector<const Story*> class_stories;
    bool any_extracted = false;
    for (const Story& s : stories) {
      if (s.source_class != class_name) continue;
      if (!model.find_feature(class_name, s.source_routine)) {
        result.diagnostics.push_back(make_diag(
            Severity::Error, codes::kUnresolvedStory, {},
            "story " + s.name + " references unknown feature " + class_name + "." +
                s.source_routine));
        continue;
      }
      class_stories.push_back(&s);
      if (s.rule != StoryRule::WholeRoutine) any_extracted = true;
    }
    if (class_stories.empty()) continue;

    const std::string test_class = class_name + "_TEST";
    std::ostringstream out;
    out << "class " << test_class << "\n";
    out << "inherit\n";
    out << "    " << (any_extracted ? story_class_name(class_name) : class_name) << "\n";
    out << "feature\n\n";
    for (const Story* s : class_stories) {
      const FeatureDecl* source = model.find_feature(class_name, s->source_routine);
      TestManifestEntry entry;
      entry.test_class = test_class;
      entry.routine = "test_" + s->name;
      entry.story_name = s->name;
      emit_test_routine(out, *s, *source, entry);
      result.manifest.push_back(std::move(entry));
    }
    out << "end\n";

    GeneratedTestFile file;
    file.file_name = lowercase(class_name) + "_test.rsl";
    file.class_name = test_class;
    file.text = out.str();
    result.files.push_back(std::move(file));
  }
  return result;
}

std::vector<Story> stories_for_testgen(const RequirementsModel& model,
                                       const std::string& class_name,
                                       std::vector<Diagnostic>& diagnostics) {
  std::vector<Story> stories;
  const ClassDecl* cls = model.find_class(class_name);
  if (!cls) {
    diagnostics.push_back(
        make_diag(Severity::Error, codes::kUnknownClass, {}, "unknown class " + class_name));
    return stories;
  }
  for (const FeatureDecl& f : cls->features) {
    if (f.kind != FeatureKind::ScenarioRoutine) continue;
    ExtractResult extracted = extract_stories(model, class_name, f.name);
    for (Diagnostic& d : extracted.diagnostics)
      if (d.code != codes::kNothingToExtract) diagnostics.push_back(std::move(d));
    if (!extracted.stories.empty()) {
      for (Story& s : extracted.stories) stories.push_back(std::move(s));
      continue;
    }
    Story whole;
    whole.source_class = class_name;
    whole.source_routine = f.name;
    whole.rule = StoryRule::WholeRoutine;
    whole.condition = Formula::constant(true);
    whole.name = f.name;
    stories.push_back(std::move(whole));
  }
  return stories;
}

}  // namespace reqlens
