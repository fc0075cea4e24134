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

using namespace reqlens;
using namespace reqlens::testing;

namespace {

// The six-feature book class with its four invariant clauses, as commonly
// listed (without the scenario routine the corpus file adds).
const char* kBookListing = R"(
class BOOK feature
        -- Boolean queries
    is_available, is_on_hold, is_checked_out: BOOLEAN
    place_hold (patron: PATRON)
        require
            is_available
        deferred
        ensure
            is_on_hold
            not is_available
        end
    checkout (patron: PATRON)
        require
            is_on_hold
        deferred
        ensure
            is_checked_out
        end
    return (patron: PATRON)
        require
            is_checked_out
        deferred
        ensure
            is_available
        end
invariant
    is_on_hold implies not is_available
    is_checked_out implies not is_available
    is_checked_out implies not is_on_hold
    is_available implies not is_checked_out
end
)";

struct StatementCounts {
  int loops = 0;
  int conditionals = 0;
  int opaques = 0;
  int calls = 0;
};

void count_statements(const Body& body, StatementCounts& counts) {
  for (const Statement& s : body.statements) {
    if (std::holds_alternative<CallStmt>(s.node)) {
      ++counts.calls;
    } else if (const auto* cond = std::get_if<ConditionalStmt>(&s.node)) {
      ++counts.conditionals;
      count_statements(cond->then_branch, counts);
      if (cond->else_branch) count_statements(*cond->else_branch, counts);
    } else if (const auto* loop = std::get_if<LoopStmt>(&s.node)) {
      ++counts.loops;
      count_statements(loop->body, counts);
    } else {
      ++counts.opaques;
    }
  }
}

}  // namespace

TEST_CASE("the book listing parses into one class without diagnostics") {
  ParseResult result = parse_source(kBookListing, "book");
  REQUIRE(result.classes.size() == 1);
  CHECK(result.diagnostics.empty());
  const ClassDecl& book = result.classes[0];
  CHECK(book.name == "BOOK");
  CHECK(book.features.size() == 6);
  CHECK(book.invariant_clauses.size() == 4);
}

TEST_CASE("a minimal class has zero features") {
  ParseResult result = parse_source("class X feature end", "t");
  REQUIRE(result.classes.size() == 1);
  CHECK(result.classes[0].features.empty());
  CHECK(result.diagnostics.empty());
}

TEST_CASE("the race scenario parses with the expected statement shape") {
  ParseResult result = parse_source(read_corpus("roborace.rsl"), "roborace.rsl");
  CHECK(!result.has_errors());
  const ClassDecl* use_cases = nullptr;
  for (const ClassDecl& cls : result.classes)
    if (cls.name == "ROBORACE_USE_CASES") use_cases = &cls;
  REQUIRE(use_cases != nullptr);
  const FeatureDecl* race = use_cases->find_feature("race_no_obstacles");
  REQUIRE(race != nullptr);
  REQUIRE(race->body.has_value());

  StatementCounts counts;
  count_statements(*race->body, counts);
  CHECK(counts.loops == 1);
  CHECK(counts.conditionals == 2);
  CHECK(counts.opaques == 2);  // the assignment and the dotted command call

  // The until-condition is a three-way disjunction.
  const LoopStmt* loop = nullptr;
  for (const Statement& s : race->body->statements)
    if (const auto* l = std::get_if<LoopStmt>(&s.node)) loop = l;
  REQUIRE(loop != nullptr);
  int disjuncts = 1;
  for (FormulaPtr f = loop->until_condition; f->kind() == Formula::Kind::Or; f = f->lhs())
    ++disjuncts;
  CHECK(disjuncts == 3);

  // The Note annotation is kept verbatim as metadata.
  REQUIRE(race->notes.size() == 1);
  CHECK(race->notes[0].first == "Callers");
  CHECK(race->notes[0].second == "car_operator");
}

TEST_CASE("parse_expression handles disjunctions of query paths") {
  ExpressionResult result =
      parse_expression("car.red_flag_is_up or car.location_error_is_detected");
  REQUIRE(result.formula != nullptr);
  CHECK(result.formula->kind() == Formula::Kind::Or);
  CHECK(result.formula->lhs()->atom().pretty() == "car.red_flag_is_up");
  CHECK(result.formula->rhs()->atom().pretty() == "car.location_error_is_detected");
  CHECK(result.diagnostics.empty());
}

TEST_CASE("parse_expression handles constants") {
  ExpressionResult result = parse_expression("true");
  REQUIRE(result.formula != nullptr);
  CHECK(result.formula->kind() == Formula::Kind::True);
}

TEST_CASE("across quantifications become a single opaque atom with a warning") {
  ExpressionResult result = parse_expression(
      "across t.raceline.velocity_profile as rl all rl.item < car.max_speed end");
  REQUIRE(result.formula != nullptr);
  CHECK(result.formula->kind() == Formula::Kind::Leaf);
  CHECK(result.formula->atom().shape == Atom::Shape::Opaque);
  CHECK(count_code(result.diagnostics, codes::kOpaqueAtom) == 1);
}

TEST_CASE("arithmetic comparisons become opaque atoms with a warning") {
  ExpressionResult result = parse_expression("rl.item < car.max_speed");
  REQUIRE(result.formula != nullptr);
  CHECK(result.formula->atom().shape == Atom::Shape::Opaque);
  CHECK(result.formula->atom().text == "rl.item < car.max_speed");
  CHECK(count_code(result.diagnostics, codes::kOpaqueAtom) == 1);
}

TEST_CASE("equalities and disequalities over paths become structural atoms") {
  ExpressionResult eq = parse_expression("current_max_speed = safe_speed");
  REQUIRE(eq.formula != nullptr);
  CHECK(eq.formula->atom().shape == Atom::Shape::Equality);
  ExpressionResult ne = parse_expression("p1 /= p2");
  REQUIRE(ne.formula != nullptr);
  CHECK(ne.formula->atom().shape == Atom::Shape::Disequality);
  CHECK(ne.formula->atom().pretty() == "p1 /= p2");
}

TEST_CASE("clause tags are kept as labels") {
  ParseResult result = parse_source(R"(
class C feature
    r
        require
            book_is_available: is_available
        do
        end
end)",
                                    "t");
  REQUIRE(result.classes.size() == 1);
  const FeatureDecl& r = result.classes[0].features[0];
  REQUIRE(r.preconditions.size() == 1);
  CHECK(r.preconditions[0].tag == "book_is_available");
  CHECK(pretty(r.preconditions[0].formula) == "is_available");
}

TEST_CASE("grouped attributes expand to one declaration each") {
  ParseResult result = parse_source("class C feature\n a, b, c: BOOLEAN\nend", "t");
  REQUIRE(result.classes.size() == 1);
  REQUIRE(result.classes[0].features.size() == 3);
  for (const FeatureDecl& f : result.classes[0].features)
    CHECK(f.kind == FeatureKind::BooleanQuery);
}

TEST_CASE("the whole corpus parses with zero error diagnostics") {
  for (const std::string& name : corpus_files()) {
    ParseResult result = parse_source(read_corpus(name), name);
    CAPTURE(name);
    CHECK(!result.has_errors());
  }
}

TEST_CASE("recovery skips to the next class so later classes still parse") {
  ParseResult result = parse_source(R"(
class BROKEN feature
    r require do
end
class FINE feature
    x: BOOLEAN
end)",
                                    "t");
  CHECK(result.has_errors());
  bool fine_parsed = false;
  for (const ClassDecl& cls : result.classes)
    if (cls.name == "FINE") fine_parsed = true;
  CHECK(fine_parsed);
}

TEST_CASE("old expressions are rejected with a clear message") {
  ParseResult result = parse_source(R"(
class C feature
    r
        do
        ensure
            old is_available
        end
end)",
                                    "t");
  REQUIRE(result.has_errors());
  bool mentioned = false;
  for (const Diagnostic& d : result.diagnostics)
    if (d.message.find("old") != std::string::npos) mentioned = true;
  CHECK(mentioned);
}

TEST_CASE("deferred features have no body") {
  ParseResult result = parse_source(kBookListing, "book");
  const FeatureDecl* place_hold = result.classes[0].find_feature("place_hold");
  REQUIRE(place_hold != nullptr);
  CHECK(place_hold->is_deferred);
  CHECK(!place_hold->body.has_value());
  CHECK(place_hold->kind == FeatureKind::Command);
}

TEST_CASE("note keyword is accepted in both spellings") {
  for (const char* spelling : {"Note", "note"}) {
    std::string text = std::string("class C feature\n    r\n        ") + spelling +
                       "\n            Callers: operator\n        do\n        end\nend";
    ParseResult result = parse_source(text, "t");
    CAPTURE(spelling);
    REQUIRE(result.classes.size() == 1);
    REQUIRE(result.classes[0].features.size() == 1);
    CHECK(result.classes[0].features[0].notes.size() == 1);
  }
}
