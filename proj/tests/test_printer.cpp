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

#include "doctest.h"
#include "helpers.hpp"
#include "reqlens/parser.hpp"
#include "reqlens/printer.hpp"

using namespace reqlens;
using namespace reqlens::testing;

TEST_CASE("pretty-printing a parsed class re-parses to an identical tree") {
  for (const std::string& name : corpus_files()) {
    ParseResult original = parse_source(read_corpus(name), name);
    REQUIRE(!original.has_errors());
    for (const ClassDecl& cls : original.classes) {
      CAPTURE(cls.name);
      const std::string printed = to_rsl(cls);
      ParseResult reparsed = parse_source(printed, name + "#printed");
      REQUIRE(!reparsed.has_errors());
      REQUIRE(reparsed.classes.size() == 1);
      CHECK(classes_equal(cls, reparsed.classes[0]));
    }
  }
}

TEST_CASE("printing is idempotent on the corpus") {
  for (const std::string& name : corpus_files()) {
    ParseResult original = parse_source(read_corpus(name), name);
    for (const ClassDecl& cls : original.classes) {
      const std::string once = to_rsl(cls);
      ParseResult reparsed = parse_source(once, "p");
      REQUIRE(reparsed.classes.size() == 1);
      CHECK(to_rsl(reparsed.classes[0]) == once);
    }
  }
}

TEST_CASE("formula printing preserves tree shape through reparsing") {
  for (const char* text : {
           "a or (b or c)",
           "a or b or c",
           "a implies b implies c",
           "(a implies b) implies c",
           "not (a and b)",
           "not a and b",
           "(a or b) and c",
           "a and b or c",
           "not not a",
           "l.book_is_on_hold (b, p1, lb) and not l.book_is_on_hold (b, p2, lb)",
           "current_max_speed = safe_speed or p1 /= p2",
       }) {
    CAPTURE(text);
    ExpressionResult first = parse_expression(text);
    REQUIRE(first.formula != nullptr);
    const std::string printed = pretty(first.formula);
    ExpressionResult second = parse_expression(printed);
    REQUIRE(second.formula != nullptr);
    CHECK(formulas_equal(first.formula, second.formula));
    CHECK(pretty(second.formula) == printed);
  }
}
