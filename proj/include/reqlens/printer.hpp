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

#ifndef REQLENS_PRINTER_HPP
#define REQLENS_PRINTER_HPP

#include <string>

#include "reqlens/ast.hpp"

namespace reqlens {

/// Canonical RSL rendering. Parsing the output yields a structurally
/// identical declaration (trivia excepted); printing is idempotent.
std::string to_rsl(const ClassDecl& cls);
std::string to_rsl(const FeatureDecl& feature, int indent = 4);

}  // namespace reqlens

#endif  // REQLENS_PRINTER_HPP
