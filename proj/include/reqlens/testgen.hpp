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

#ifndef REQLENS_TESTGEN_HPP
#define REQLENS_TESTGEN_HPP

#include <string>
#include <vector>

#include "reqlens/diagnostics.hpp"
#include "reqlens/model.hpp"
#include "reqlens/stories.hpp"

namespace reqlens {

struct TestManifestEntry {
  std::string test_class;
  std::string routine;  // the generated test routine
  std::string story_name;
  std::vector<std::string> oracle_clauses;
};

struct GeneratedTestFile {
  std::string file_name;  // `<class_lowercase>_test.rsl`
  std::string class_name;
  std::string text;
};

struct TestGenResult {
  std::vector<GeneratedTestFile> files;
  std::vector<TestManifestEntry> manifest;
  std::vector<Diagnostic> diagnostics;
};

/// One test class per source class, one `test_<story>` routine per story.
/// Creation placeholders are opaque `create x.make` statements with TODO
/// comments, and the oracle assertions (the source ensure clauses plus the
/// story's characterizing condition) appear as comment-annotated checks.
/// Every generated file re-parses with zero errors.
TestGenResult generate_test_skeletons(const RequirementsModel& model,
                                      const std::vector<Story>& stories);

/// Assembles testgen input for a class: the extracted stories of every
/// scenario routine, plus a whole-routine story for each contracted routine
/// with a non-empty body that yields no extracted story (specification
/// drivers are exercised as a single story).
std::vector<Story> stories_for_testgen(const RequirementsModel& model,
                                       const std::string& class_name,
                                       std::vector<Diagnostic>& diagnostics);

}  // namespace reqlens

#endif  // REQLENS_TESTGEN_HPP
